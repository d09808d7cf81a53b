"""Crossing-free embedding of forests into the universal host graph.

The recursion embeds a tree onto a host interval so that a designated portal
vertex lands on the interval's highest host vertex (single portal), or two
portals land left/right with empty upper-left / upper-right quarter planes
(two portals).  Every recursive return re-checks the portal postcondition and
that the piece fills its interval exactly; violations raise
InternalInvariantBroken rather than producing a bad embedding.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from . import btree
from .errors import (
    EqualIndices,
    IndexOutOfRange,
    InternalInvariantBroken,
    IntervalTooSmall,
    InvalidS,
    InvalidSize,
    DomainMismatch,
    PreconditionViolated,
    SizeMismatch,
)
from .trees import Forest, RootedTree, root_component
from .ugraph import Interval, UniversalGraph

Adjacency = dict[int, list[int]]

# Optional observer for recursive returns, used by verification sweeps.
# Receives ("single", portal, lo, hi, mapping) or ("two", (a, b), lo, hi,
# mapping) after a piece has passed its own postcondition checks.
TRACE_HOOK = None


@dataclass
class Embedding:
    """A vertex map from an input graph into a host on n vertices."""

    host_n: int
    mapping: dict[int, int]
    provenance: list[tuple[str, tuple[int, int]]] = field(default_factory=list)


# ---------------------------------------------------------------------------
# supporting operations of the recursion
# ---------------------------------------------------------------------------


def cut_vertex(tree: RootedTree, s: int) -> int:
    """Deepest-found vertex whose subtree has >= s vertices while every child
    subtree has <= s-1.

    Walks down from the root, always entering the first child (stored order)
    whose subtree still has >= s vertices.
    """
    if tree.n < 2:
        raise InvalidSize(f"cut_vertex needs a tree on >= 2 vertices, got {tree.n}")
    if not 1 <= s <= tree.n:
        raise InvalidS(f"s {s} not in [1, {tree.n}]")
    c = tree.root
    while True:
        nxt = next((d for d in tree.children[c] if tree.size[d] >= s), None)
        if nxt is None:
            return c
        c = nxt


@dataclass(frozen=True)
class CrossingIso:
    """Order-preserving bijection from an interval minus its highest vertex
    onto a plain interval, preserving host edges, crossings, and the height
    maximum (identity when the removed vertex is an interval endpoint)."""

    source: Interval
    removed: int
    target: Interval

    def source_vertices(self) -> list[int]:
        return [i for i in self.source if i != self.removed]

    def forward(self, u: int) -> int:
        if u not in self.source or u == self.removed:
            raise IndexOutOfRange(f"{u} not in source {self.source} minus {self.removed}")
        rank = u - self.source.lo - (1 if u > self.removed else 0)
        return self.target.lo + rank

    def inverse(self, w: int) -> int:
        if w not in self.target:
            raise IndexOutOfRange(f"{w} not in target {self.target}")
        rank = w - self.target.lo
        u = self.source.lo + rank
        return u if u < self.removed else u + 1


def iso_interval(G: UniversalGraph, interval: Interval, k: int) -> tuple[Interval, CrossingIso]:
    """Crossing-preserving isomorphism from G(interval) - v_k onto an interval.

    k must be the interval's highest vertex.  For interior k the interval may
    contain neither the right child of v_k nor any vertex from the subtree of
    the left child of v_k's left sibling; both clauses are checked.
    """
    lo, hi = interval.lo, interval.hi
    if len(interval) < 2:
        raise IntervalTooSmall(f"iso_interval needs >= 2 vertices, got {interval}")
    if k not in interval:
        raise PreconditionViolated(f"k={k} outside {interval}")
    if k != G.highest_in(lo, hi):
        raise PreconditionViolated(f"k={k} is not the highest vertex of {interval}")
    if k == lo:
        target = Interval(lo + 1, hi)
    elif k == hi:
        target = Interval(lo, hi - 1)
    else:
        shape = G.shape
        ls = btree.left_sibling(shape, k)
        if ls is None:
            raise InternalInvariantBroken(
                f"interior interval maximum {k} is not a right child")
        w = btree.subtree_size(shape, k)
        if w < 3:
            raise InternalInvariantBroken(
                f"interior interval maximum {k} is a leaf yet {interval} extends past it")
        d = (w - 1) // 2  # size of each subtree one level below v_k
        right_child = k + 1 + d
        if right_child <= hi:
            raise PreconditionViolated(
                f"right child {right_child} of the highest vertex lies in {interval}")
        # subtree of the left sibling's left child is [ls+1, ls+d]
        if ls + d >= lo:
            raise PreconditionViolated(
                f"subtree [{ls + 1}, {ls + d}] of the left sibling's left child "
                f"meets {interval}")
        if lo - d < 0:
            raise InternalInvariantBroken("shift would leave the host")
        target = Interval(lo - d, hi - d - 1)
    return target, CrossingIso(source=interval, removed=k, target=target)


def transfer_via_isomorphism(iso: CrossingIso, emb: Embedding) -> Embedding:
    """Pull an embedding on the iso's target interval back to the source minus
    its highest vertex."""
    if set(emb.mapping.values()) != set(iso.target):
        raise DomainMismatch(
            f"embedding image does not cover target {iso.target} exactly")
    mapping = {t: iso.inverse(g) for t, g in emb.mapping.items()}
    return Embedding(emb.host_n, mapping,
                     emb.provenance + [("transfer", (iso.source.lo, iso.source.hi))])


def replace_highest(G: UniversalGraph, interval: Interval, emb: Embedding,
                    x: int) -> Embedding:
    """Remap the tree vertex sitting on the interval's highest host vertex to
    host vertex x, which must lie outside the interval and be higher than
    every interval vertex except possibly the highest one."""
    lo, hi = interval.lo, interval.hi
    if set(emb.mapping.values()) != set(interval):
        raise DomainMismatch(f"embedding image does not cover {interval} exactly")
    if x in interval:
        raise PreconditionViolated(f"replacement vertex {x} lies inside {interval}")
    k = G.highest_in(lo, hi)
    for w in interval:
        if w != k and not G.higher(x, w):
            raise PreconditionViolated(
                f"replacement vertex {x} is not higher than interval vertex {w}")
    mapping = dict(emb.mapping)
    t0 = next(t for t, g in mapping.items() if g == k)
    mapping[t0] = x
    return Embedding(emb.host_n, mapping,
                     emb.provenance + [("replace", (lo, hi))])


# ---------------------------------------------------------------------------
# the recursion
# ---------------------------------------------------------------------------


def _restrict(adj: Adjacency, keep: set[int]) -> Adjacency:
    return {v: [w for w in adj[v] if w in keep] for v in keep}


def _chunks(cells: list[int], sizes: list[int]) -> list[list[int]]:
    out, i = [], 0
    for sz in sizes:
        out.append(cells[i:i + sz])
        i += sz
    return out


def _single(G: UniversalGraph, adj: Adjacency, a: int, lo: int, hi: int,
            prov: list) -> dict[int, int]:
    """Embed the tree on adj's keys onto [lo, hi]; portal a lands on the
    interval's highest vertex."""
    mp = _single_cases(G, adj, a, lo, hi, prov)
    k = G.highest_in(lo, hi)
    if mp.get(a) != k:
        raise InternalInvariantBroken(
            f"portal {a} landed on {mp.get(a)}, expected interval maximum {k}")
    if len(mp) != hi - lo + 1 or set(mp.values()) != set(range(lo, hi + 1)):
        raise InternalInvariantBroken(f"piece does not fill [{lo}, {hi}] exactly")
    if TRACE_HOOK is not None:
        TRACE_HOOK(("single", a, lo, hi, dict(mp)))
    return mp


def _single_cases(G: UniversalGraph, adj: Adjacency, a: int, lo: int, hi: int,
                  prov: list) -> dict[int, int]:
    nverts = hi - lo + 1
    if len(adj) != nverts:
        raise InternalInvariantBroken(
            f"tree has {len(adj)} vertices for interval [{lo}, {hi}]")
    if nverts == 1:
        prov.append(("base", (lo, hi)))
        return {a: lo}

    shape = G.shape
    T = RootedTree.from_adjacency(adj, a)
    k = G.highest_in(lo, hi)
    kids = T.children[a]

    if len(kids) >= 2:
        # Branching portal: lay the child subtrees left-to-right over the
        # interval minus k; the chunk next to k absorbs k and keeps the portal.
        cells = [i for i in range(lo, hi + 1) if i != k]
        chs = _chunks(cells, [T.size[c] for c in kids])
        if k > lo:
            q = next((x for x, ch in enumerate(chs) if ch[0] <= k - 1 <= ch[-1]), None)
            if q is None:
                raise InternalInvariantBroken("no chunk borders the interval maximum")
        else:
            q = 0
        mp: dict[int, int] = {}
        for x, (child, ch) in enumerate(zip(kids, chs)):
            if x == q:
                continue
            if ch[-1] - ch[0] + 1 != len(ch):
                raise InternalInvariantBroken("non-portal chunk spans the maximum")
            sub = _restrict(adj, set(T.subtree_vertices(child)))
            mp.update(_single(G, sub, child, ch[0], ch[-1], prov))
        qlo, qhi = min(chs[q][0], k), max(chs[q][-1], k)
        if qhi - qlo + 1 != len(chs[q]) + 1:
            raise InternalInvariantBroken("portal chunk plus maximum is not an interval")
        qset = {a} | set(T.subtree_vertices(kids[q]))
        mp.update(_single(G, _restrict(adj, qset), a, qlo, qhi, prov))
        prov.append(("case-1.1", (lo, hi)))
        return mp

    a2 = kids[0]
    tp_verts = set(adj) - {a}

    if k == hi:
        mp = _single(G, _restrict(adj, tp_verts), a2, lo, hi - 1, prov)
        mp[a] = k
        prov.append(("case-1.2.1", (lo, hi)))
        return mp
    if k == lo:
        mp = _single(G, _restrict(adj, tp_verts), a2, lo + 1, hi, prov)
        mp[a] = k
        prov.append(("case-1.2.2", (lo, hi)))
        return mp

    ls = btree.left_sibling(shape, k)
    if ls is None:
        raise InternalInvariantBroken(f"interior maximum {k} is not a right child")
    if ls >= lo:
        # The left sibling sits in the interval; it must be the left endpoint
        # and is higher than everything but k, so the deg-1 portal moves there.
        if ls != lo:
            raise InternalInvariantBroken(
                f"left sibling {ls} inside [{lo}, {hi}] but not at its left end")
        mp = _single(G, _restrict(adj, tp_verts), a2, lo + 1, hi, prov)
        t0 = next(t for t, g in mp.items() if g == k)
        mp[t0] = lo
        mp[a] = k
        prov.append(("case-1.2.3", (lo, hi)))
        return mp

    w = btree.subtree_size(shape, k)
    d = (w - 1) // 2
    right_child = k + 1 + d if w >= 3 else None

    if right_child is None or right_child > hi:
        return _case_1_2_4(G, adj, a, a2, tp_verts, lo, hi, k, prov)
    return _case_1_2_5(G, adj, a, a2, tp_verts, lo, hi, k, right_child, prov)


def _case_1_2_4(G: UniversalGraph, adj: Adjacency, a: int, a2: int,
                tp_verts: set[int], lo: int, hi: int, k: int,
                prov: list) -> dict[int, int]:
    # Interval maximum is interior, right child and left sibling both outside.
    # Cut the rest of the tree so that a piece H with s <= |H| <= 2s-2
    # vertices fills [hi-|H|, hi] minus v_k via the interval isomorphism.
    s = hi - k + 1
    Tp = RootedTree.from_adjacency(_restrict(adj, tp_verts), a2)
    c = cut_vertex(Tp, s)
    kids = Tp.children[c]
    acc, l = 1, 0
    while acc < s:
        acc += Tp.size[kids[l]]
        l += 1
    m = acc
    if not s <= m <= 2 * s - 2:
        raise InternalInvariantBroken(f"cut piece size {m} outside [s, 2s-2] for s={s}")

    h_verts = {c}
    for child in kids[:l]:
        h_verts.update(Tp.subtree_vertices(child))
    target, iso = iso_interval(G, Interval(hi - m, hi), k)
    phi_h = _single(G, _restrict(adj, h_verts), c, target.lo, target.hi, prov)
    mp = {t: iso.inverse(g) for t, g in phi_h.items()}
    if mp[c] != k + 1:
        raise InternalInvariantBroken(
            f"cut vertex landed on {mp[c]}, expected second-highest {k + 1}")
    mp[a] = k

    cur = hi - m - sum(Tp.size[x] for x in kids[l:])
    rem_hi = cur - 1
    for child in kids[l:]:
        sz = Tp.size[child]
        sub = _restrict(adj, set(Tp.subtree_vertices(child)))
        mp.update(_single(G, sub, child, cur, cur + sz - 1, prov))
        cur += sz

    rem = tp_verts - set(Tp.subtree_vertices(c))
    if rem:
        cp = Tp.parent[c]
        sub = _restrict(adj, rem)
        if cp == a2:
            mp.update(_single(G, sub, a2, lo, rem_hi, prov))
        else:
            mp.update(_two(G, sub, a2, cp, lo, rem_hi, prov))
    elif rem_hi != lo - 1:
        raise InternalInvariantBroken("pieces do not tile the interval")
    prov.append(("case-1.2.4", (lo, hi)))
    return mp


def _case_1_2_5(G: UniversalGraph, adj: Adjacency, a: int, a2: int,
                tp_verts: set[int], lo: int, hi: int, k: int, r: int,
                prov: list) -> dict[int, int]:
    # The right child v_r of the interval maximum lies in the interval; it is
    # the second-highest vertex of [lo, hi].
    s = hi - r + 1
    Tp = RootedTree.from_adjacency(_restrict(adj, tp_verts), a2)
    c = cut_vertex(Tp, s)
    m = Tp.size[c]
    cp = Tp.parent[c]

    if m <= hi - k - 1:
        # 1.2.5.1: the window [hi-m, hi] contains v_r but not v_k.  Embed the
        # rest with two portals, move whichever vertex took v_k up to v_r,
        # and hang {c's parent} + T(c) over the window, discarding the
        # parent's scaffold position v_r.
        rem = tp_verts - set(Tp.subtree_vertices(c))
        sub = _restrict(adj, rem)
        if cp == a2:
            psi1 = _single(G, sub, a2, lo, hi - m - 1, prov)
        else:
            psi1 = _two(G, sub, a2, cp, lo, hi - m - 1, prov)
        t0 = next(t for t, g in psi1.items() if g == k)
        psi1[t0] = r
        scaffold = {cp} | set(Tp.subtree_vertices(c))
        psi2 = _single(G, _restrict(adj, scaffold), cp, hi - m, hi, prov)
        if psi2[cp] != r:
            raise InternalInvariantBroken(
                f"scaffold portal landed on {psi2[cp]}, expected {r}")
        del psi2[cp]
        mp = psi1
        mp.update(psi2)
        mp[a] = k
        prov.append(("case-1.2.5.1", (lo, hi)))
        return mp

    # 1.2.5.2: the window [hi-m, hi] contains both v_k and v_r.  Children of c
    # tile the window minus {k, r}; the chunk beside r absorbs r and keeps c.
    wlo = hi - m
    if not wlo <= k < r <= hi:
        raise InternalInvariantBroken("window misses k or r")
    kids = Tp.children[c]
    if not kids:
        raise InternalInvariantBroken("cut vertex is a leaf yet its subtree spans the window")
    cells = [i for i in range(wlo, hi + 1) if i != k and i != r]
    chs = _chunks(cells, [Tp.size[x] for x in kids])
    q = next((x for x, ch in enumerate(chs) if ch[0] <= r - 1 <= ch[-1]), None)
    if q is None:
        raise InternalInvariantBroken("no chunk borders the second-highest vertex")
    mp: dict[int, int] = {}
    for x, (child, ch) in enumerate(zip(kids, chs)):
        if x == q:
            continue
        span = ch[-1] - ch[0] + 1
        sub = _restrict(adj, set(Tp.subtree_vertices(child)))
        if span == len(ch):
            mp.update(_single(G, sub, child, ch[0], ch[-1], prov))
        elif span == len(ch) + 1 and ch[0] < k < ch[-1]:
            # chunk spans the maximum: embed beside it and shift back
            target, iso = iso_interval(G, Interval(ch[0], ch[-1]), k)
            piece = _single(G, sub, child, target.lo, target.hi, prov)
            mp.update({t: iso.inverse(g) for t, g in piece.items()})
        else:
            raise InternalInvariantBroken("chunk neither interval nor maximum-split")
    qlo, qhi = min(chs[q][0], r), max(chs[q][-1], r)
    if qhi - qlo + 1 != len(chs[q]) + 1:
        raise InternalInvariantBroken("chunk beside r plus r is not an interval")
    qset = {c} | set(Tp.subtree_vertices(kids[q]))
    piece = _single(G, _restrict(adj, qset), c, qlo, qhi, prov)
    if piece[c] != r:
        raise InternalInvariantBroken(f"cut vertex landed on {piece[c]}, expected {r}")
    mp.update(piece)

    rem = tp_verts - set(Tp.subtree_vertices(c))
    if rem:
        sub = _restrict(adj, rem)
        if cp == a2:
            mp.update(_single(G, sub, a2, lo, wlo - 1, prov))
        else:
            mp.update(_two(G, sub, a2, cp, lo, wlo - 1, prov))
    elif wlo != lo:
        raise InternalInvariantBroken("window does not reach the interval start")
    mp[a] = k
    prov.append(("case-1.2.5.2", (lo, hi)))
    return mp


def _two(G: UniversalGraph, adj: Adjacency, a: int, b: int, lo: int, hi: int,
         prov: list) -> dict[int, int]:
    """Embed with two portals: split along the a-b path into one block per
    path vertex, left to right, each block embedded with a single portal."""
    T = RootedTree.from_adjacency(adj, a)
    path = [b]
    while path[-1] != a:
        path.append(T.parent[path[-1]])
    path.reverse()
    mp: dict[int, int] = {}
    cur = lo
    for idx, cx in enumerate(path):
        nxt = path[idx + 1] if idx + 1 < len(path) else None
        comp = {cx}
        for ch in T.children[cx]:
            if ch != nxt:
                comp.update(T.subtree_vertices(ch))
        sub = _restrict(adj, comp)
        mp.update(_single(G, sub, cx, cur, cur + len(comp) - 1, prov))
        cur += len(comp)
    if cur != hi + 1:
        raise InternalInvariantBroken("path blocks do not tile the interval")
    pa, pb = mp[a], mp[b]
    if pa >= pb:
        raise InternalInvariantBroken("left portal not left of right portal")
    for g in mp.values():
        if g < pa and G.higher(g, pa):
            raise InternalInvariantBroken("vertex in upper-left quarter plane of left portal")
        if g > pb and G.higher(g, pb):
            raise InternalInvariantBroken("vertex in upper-right quarter plane of right portal")
    prov.append(("case-2", (lo, hi)))
    if TRACE_HOOK is not None:
        TRACE_HOOK(("two", (a, b), lo, hi, dict(mp)))
    return mp


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def _tree_adjacency(tree: RootedTree) -> Adjacency:
    adj: Adjacency = {}
    for v in tree.vertices:
        p = tree.parent[v]
        adj[v] = ([p] if p is not None else []) + list(tree.children[v])
    return adj


def embed_tree(G: UniversalGraph, tree: RootedTree,
               portals: int | tuple[int, int],
               interval: Interval | None = None) -> Embedding:
    """Embed one tree onto a host interval with one or two portal vertices."""
    if interval is None:
        interval = Interval(0, G.n - 1)
    if not (0 <= interval.lo and interval.hi < G.n):
        raise IndexOutOfRange(f"{interval} outside host [0, {G.n})")
    if len(interval) != tree.n:
        raise SizeMismatch(
            f"tree has {tree.n} vertices but interval {interval} has {len(interval)}")
    adj = _tree_adjacency(tree)
    prov: list = []
    depth_guard = max(sys.getrecursionlimit(), 4 * tree.n + 1000)
    sys.setrecursionlimit(depth_guard)
    if isinstance(portals, tuple):
        a, b = portals
        if a == b:
            raise EqualIndices(f"two-portal embedding needs distinct portals, got {a}")
        for p in (a, b):
            if p not in adj:
                raise IndexOutOfRange(f"portal {p} not a tree vertex")
        mapping = _two(G, adj, a, b, interval.lo, interval.hi, prov)
    else:
        if portals not in adj:
            raise IndexOutOfRange(f"portal {portals} not a tree vertex")
        mapping = _single(G, adj, portals, interval.lo, interval.hi, prov)
    return Embedding(G.n, mapping, prov)


def embed_forest(G: UniversalGraph, forest: Forest) -> Embedding:
    """Embed a forest: components, ordered by smallest vertex id, go onto
    consecutive host intervals; each is rooted at its smallest vertex, which
    serves as the component's single portal."""
    if forest.n != G.n:
        raise SizeMismatch(f"forest has {forest.n} vertices, host has {G.n}")
    mapping: dict[int, int] = {}
    prov: list = []
    cur = 0
    for comp in forest.components():
        root = comp[0]
        tree = root_component(forest, comp, root)
        sub = embed_tree(G, tree, root, Interval(cur, cur + len(comp) - 1))
        mapping.update(sub.mapping)
        prov.extend(sub.provenance)
        prov.append(("forest-component", (cur, cur + len(comp) - 1)))
        cur += len(comp)
    return Embedding(G.n, mapping, prov)
