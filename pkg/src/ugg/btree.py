"""Index arithmetic for complete rooted ordered binary trees in preorder.

A tree of height h has m = 2**h - 1 nodes, indexed 0..m-1 in preorder
(root first, then the left subtree, then the right subtree).  Levels are
1-based from the root; positions are 0-based from the left within a level.
Nothing is materialized: every query walks at most h steps of arithmetic.

A shape also carries an active prefix size n <= m.  Navigation is defined on
the whole tree; the prefix only matters to callers that restrict vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EqualIndices, IndexOutOfRange, InvalidSize


@dataclass(frozen=True)
class BTreeShape:
    """Complete binary tree of height h with an active preorder prefix of n nodes."""

    h: int
    n: int

    def __post_init__(self) -> None:
        if self.h < 1:
            raise InvalidSize(f"height must be >= 1, got {self.h}")
        if not 1 <= self.n <= self.m:
            raise InvalidSize(f"prefix size {self.n} not in [1, {self.m}]")

    @property
    def m(self) -> int:
        """Total number of nodes, 2**h - 1."""
        return (1 << self.h) - 1

    @classmethod
    def from_height(cls, h: int) -> "BTreeShape":
        return cls(h, (1 << h) - 1)

    @classmethod
    def from_size(cls, n: int) -> "BTreeShape":
        """Smallest complete tree with at least n nodes.  Guarantees m < 2n."""
        if n < 1:
            raise InvalidSize(f"size must be >= 1, got {n}")
        h = 1
        while (1 << h) - 1 < n:
            h += 1
        return cls(h, n)


@dataclass(frozen=True)
class NodeInfo:
    index: int
    level: int
    pos: int
    parent: int | None
    left_child: int | None
    right_child: int | None
    left_level_neighbor: int | None
    right_level_neighbor: int | None
    subtree_range: tuple[int, int]


def _check_index(shape: BTreeShape, i: int) -> None:
    if not 0 <= i < shape.m:
        raise IndexOutOfRange(f"node index {i} not in [0, {shape.m})")


@lru_cache(maxsize=1 << 18)
def _locate(h: int, i: int) -> tuple[int, int, int]:
    # Descend from the root.  At a node on level `level`, the right child is
    # node + 2**(h - level) because the left subtree holds 2**(h-level) - 1
    # nodes.  Returns (level, pos, parent); parent is -1 for the root.
    node, level, pos, parent = 0, 1, 0, -1
    while node != i:
        parent = node
        right = node + (1 << (h - level))
        if i < right:
            node, pos = node + 1, 2 * pos
        else:
            node, pos = right, 2 * pos + 1
        level += 1
    return level, pos, parent


def locate(shape: BTreeShape, i: int) -> tuple[int, int]:
    """Map a preorder index to its (level, pos)."""
    _check_index(shape, i)
    level, pos, _ = _locate(shape.h, i)
    return level, pos


def index_of(shape: BTreeShape, level: int, pos: int) -> int:
    """Inverse of locate: preorder index of the node at (level, pos)."""
    if not 1 <= level <= shape.h:
        raise IndexOutOfRange(f"level {level} not in [1, {shape.h}]")
    if not 0 <= pos < (1 << (level - 1)):
        raise IndexOutOfRange(f"pos {pos} not in [0, {1 << (level - 1)})")
    # Read pos as the root-to-node path, most significant bit first:
    # a 0 bit steps to the left child (+1), a 1 bit to the right child.
    node = 0
    for d in range(1, level):
        bit = (pos >> (level - 1 - d)) & 1
        node += (1 << (shape.h - d)) if bit else 1
    return node


def subtree_range(shape: BTreeShape, i: int) -> tuple[int, int]:
    """Closed preorder index range of the subtree rooted at i."""
    _check_index(shape, i)
    level, _, _ = _locate(shape.h, i)
    return i, i + (1 << (shape.h - level + 1)) - 2


def subtree_size(shape: BTreeShape, i: int) -> int:
    lo, hi = subtree_range(shape, i)
    return hi - lo + 1


def is_in_subtree(shape: BTreeShape, i: int, root: int) -> bool:
    """True iff node i lies in the subtree rooted at `root` (roots included)."""
    lo, hi = subtree_range(shape, root)
    _check_index(shape, i)
    return lo <= i <= hi


def nav(shape: BTreeShape, i: int) -> NodeInfo:
    _check_index(shape, i)
    h = shape.h
    level, pos, parent = _locate(h, i)
    if level < h:
        left_child: int | None = i + 1
        right_child: int | None = i + (1 << (h - level))
    else:
        left_child = right_child = None
    lln = index_of(shape, level, pos - 1) if pos > 0 else None
    rln = index_of(shape, level, pos + 1) if pos + 1 < (1 << (level - 1)) else None
    return NodeInfo(
        index=i,
        level=level,
        pos=pos,
        parent=None if parent < 0 else parent,
        left_child=left_child,
        right_child=right_child,
        left_level_neighbor=lln,
        right_level_neighbor=rln,
        subtree_range=subtree_range(shape, i),
    )


def height_key(shape: BTreeShape, i: int) -> tuple[int, int]:
    """Sort key that orders nodes from highest to lowest.

    Lower level wins; within a level, larger pos wins.  This is the order in
    which a breadth-first traversal that expands right children before left
    ones visits the nodes.
    """
    level, pos, _ = _locate(shape.h, i)
    return level, -pos


def higher(shape: BTreeShape, u: int, w: int) -> bool:
    """True iff u precedes w in the height order (u is strictly higher)."""
    _check_index(shape, u)
    _check_index(shape, w)
    if u == w:
        raise EqualIndices(f"higher() needs distinct indices, got {u} twice")
    return height_key(shape, u) < height_key(shape, w)


def highest(shape: BTreeShape, indices) -> int:
    """The index that is higher than all other given indices."""
    best = None
    for i in indices:
        if best is None or height_key(shape, i) < height_key(shape, best):
            best = i
    if best is None:
        raise InvalidSize("highest() needs at least one index")
    return best


def left_sibling(shape: BTreeShape, i: int) -> int | None:
    """The left sibling of i, or None if i is a root or a left child."""
    info_level, _, parent = _locate(shape.h, i)
    if parent < 0 or parent + 1 == i:
        return None
    return parent + 1
