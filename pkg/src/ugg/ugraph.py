"""Sparse host graph on the binary-tree index structure.

Vertices are the first n preorder indices of a complete binary tree (the
smallest tree with at least n nodes).  Two distinct vertices u, w are adjacent
iff one of three containment rules holds:

  (E1) one lies in the subtree of the other;
  (E2) one lies in the subtree of a left or right level-neighbor of the other;
  (E3) one lies in the subtree of the left level-neighbor of the other's parent.

Every rule is a subtree-range containment test, so membership is arithmetic;
adjacency lists are materialized only on demand.  The edge count stays below
5 * (n+1) * log2(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import btree
from .btree import BTreeShape
from .errors import EqualIndices, IndexOutOfRange, IntervalTooSmall


@dataclass(frozen=True)
class Interval:
    """Closed index interval [lo, hi] of host vertices."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise IntervalTooSmall(f"empty interval [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi


class UniversalGraph:
    """Host graph universal for forests on n vertices."""

    def __init__(self, n: int):
        self.shape = BTreeShape.from_size(n)
        self.n = n
        self._adj: list[set[int]] | None = None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in [0, {self.n})")

    def is_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise EqualIndices(f"is_edge needs two distinct vertices, got {u}")
        shape = self.shape
        for a, b in ((u, v), (v, u)):
            # (E1) b in subtree of a.
            lo, hi = btree.subtree_range(shape, a)
            if lo <= b <= hi:
                return True
            info = btree.nav(shape, a)
            # (E2) b in the subtree of a level-neighbor of a.
            for x in (info.left_level_neighbor, info.right_level_neighbor):
                if x is not None:
                    lo, hi = btree.subtree_range(shape, x)
                    if lo <= b <= hi:
                        return True
            # (E3) b in the subtree of the left level-neighbor of a's parent.
            if info.parent is not None:
                p = btree.nav(shape, info.parent).left_level_neighbor
                if p is not None:
                    lo, hi = btree.subtree_range(shape, p)
                    if lo <= b <= hi:
                        return True
        return False

    def _neighbor_set(self, v: int) -> set[int]:
        shape, n = self.shape, self.n
        out: set[int] = set()

        def add_range(lo: int, hi: int) -> None:
            hi = min(hi, n - 1)
            if lo <= hi:
                out.update(range(lo, hi + 1))

        def add_one(w: int | None) -> None:
            if w is not None and w < n:
                out.add(w)

        # (E1) descendants and ancestors.
        lo, hi = btree.subtree_range(shape, v)
        add_range(lo, hi)
        # Ancestors-or-self, walking up; each also feeds the reversed rules:
        # v is adjacent to every level-neighbor of an ancestor-or-self (E2
        # with v inside the neighbor's subtree) and to every child of the
        # right level-neighbor of an ancestor-or-self (E3 likewise).
        x: int | None = v
        while x is not None:
            info = btree.nav(shape, x)
            if x != v:
                out.add(x)
            add_one(info.left_level_neighbor)
            add_one(info.right_level_neighbor)
            if info.right_level_neighbor is not None:
                rn = btree.nav(shape, info.right_level_neighbor)
                add_one(rn.left_child)
                add_one(rn.right_child)
            x = info.parent
        # (E2) subtrees of v's own level-neighbors.
        info = btree.nav(shape, v)
        for x2 in (info.left_level_neighbor, info.right_level_neighbor):
            if x2 is not None:
                lo, hi = btree.subtree_range(shape, x2)
                add_range(lo, hi)
        # (E3) subtree of the left level-neighbor of v's parent.
        if info.parent is not None:
            p = btree.nav(shape, info.parent).left_level_neighbor
            if p is not None:
                lo, hi = btree.subtree_range(shape, p)
                add_range(lo, hi)
        out.discard(v)
        return out

    def adjacency(self) -> list[set[int]]:
        if self._adj is None:
            self._adj = [self._neighbor_set(v) for v in range(self.n)]
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted(self.adjacency()[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        adj = self.adjacency()
        for u in range(self.n):
            for w in adj[u]:
                if u < w:
                    yield (u, w)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency()) // 2

    def edge_bound(self) -> float:
        import math

        return 5 * (self.n + 1) * math.log2(self.n + 1)

    def highest_in(self, lo: int, hi: int) -> int:
        """Vertex of [lo, hi] that is higher than all others in the interval."""
        self._check_vertex(lo)
        self._check_vertex(hi)
        return btree.highest(self.shape, range(lo, hi + 1))

    def higher(self, u: int, w: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(w)
        return btree.higher(self.shape, u, w)

    def star_centers(self, interval: Interval) -> tuple[int, int, int | None]:
        """Vertices adjacent to every other vertex of the interval.

        Returns (k, s, t): the interval's highest vertex, its second-highest,
        and the highest vertex of [k+1, hi] (None when k is the right
        endpoint).  Needs at least two vertices.
        """
        lo, hi = interval.lo, interval.hi
        self._check_vertex(lo)
        self._check_vertex(hi)
        if lo == hi:
            raise IntervalTooSmall(f"star_centers needs |I| >= 2, got [{lo}, {hi}]")
        k = self.highest_in(lo, hi)
        s = btree.highest(self.shape, (i for i in interval if i != k))
        t = self.highest_in(k + 1, hi) if k < hi else None
        return k, s, t


def build_universal(n: int) -> UniversalGraph:
    return UniversalGraph(n)
