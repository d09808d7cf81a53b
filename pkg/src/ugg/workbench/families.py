"""Exhaustive enumerators and counting oracles for small input families.

Enumeration and counting are deliberately independent routes: generators use
canonical level sequences plus canonical-form rejection, while the counting
functions use arithmetic recurrences.  Tests compare the two.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations_with_replacement, product

from ..convex import ChordedCycle, ConvexHost, convex_edges_cross
from ..errors import InvalidSize, NoSpanningCycle, SizeMismatch, SizeTooLarge
from ..trees import Caterpillar, Forest

FOREST_CAP = 12
CATERPILLAR_CAP = 14
CHORDED_N_CAP = 30
CHORDED_H_CAP = 3


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def adjacency_of(edges: list[tuple[int, int]], vertices) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def rooted_code(adj: dict[int, list[int]], root: int) -> str:
    """Nested-parentheses canonical form of a rooted tree: children codes
    sorted, so isomorphic rooted trees get equal strings."""
    parent: dict[int, int | None] = {root: None}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
                stack.append(w)
    codes: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(codes[w] for w in adj[v] if w != parent[v])
        codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def tree_centers(adj: dict[int, list[int]]) -> list[int]:
    """The one or two middle vertices left after repeatedly peeling leaves."""
    verts = list(adj)
    n = len(verts)
    if n <= 2:
        return sorted(verts)
    deg = {v: len(adj[v]) for v in verts}
    layer = sorted(v for v in verts if deg[v] <= 1)
    removed = set(layer)
    count = n - len(layer)
    while count > 2:
        nxt = []
        for v in layer:
            for w in adj[v]:
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = sorted(nxt)
        removed.update(layer)
        count -= len(layer)
    return sorted(v for v in verts if v not in removed)


def free_code(adj: dict[int, list[int]]) -> str:
    return min(rooted_code(adj, c) for c in tree_centers(adj))


def forest_code(n: int, edges: list[tuple[int, int]]) -> tuple[str, ...]:
    """Sorted tuple of component free codes; equal iff forests isomorphic."""
    adj = adjacency_of(edges, range(n))
    seen: set[int] = set()
    codes = []
    for v in range(n):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        codes.append(free_code({u: adj[u] for u in comp}))
    return tuple(sorted(codes))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def rooted_level_sequences(n: int):
    """Canonical level sequences of all rooted trees on n vertices, in
    lexicographically decreasing order (path first, star last)."""
    if n == 1:
        yield [1]
        return
    level = list(range(1, n + 1))
    while True:
        yield level[:]
        p = next((i for i in range(n - 1, -1, -1) if level[i] > 2), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if level[i] == level[p] - 1)
        for i in range(p, n):
            level[i] = level[i - (p - q)]


def _edges_from_levels(level: list[int]) -> list[tuple[int, int]]:
    last_at: dict[int, int] = {}
    edges = []
    for i, lv in enumerate(level):
        if lv > 1:
            edges.append((last_at[lv - 1], i))
        last_at[lv] = i
    return edges


def enumerate_trees(n: int, cap: int = FOREST_CAP) -> list[Forest]:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= cap:
        raise SizeTooLarge(f"n={n} outside [1, {cap}]")
    seen: set[str] = set()
    out = []
    for level in rooted_level_sequences(n):
        edges = _edges_from_levels(level)
        code = free_code(adjacency_of(edges, range(n)))
        if code not in seen:
            seen.add(code)
            out.append(Forest(n, edges))
    return out


def _partitions_desc(n: int, maxp: int):
    if n == 0:
        yield []
        return
    for p in range(min(n, maxp), 0, -1):
        for rest in _partitions_desc(n - p, p):
            yield [p] + rest


def enumerate_forests(n: int, cap: int = FOREST_CAP) -> list[Forest]:
    """One representative per isomorphism class of forests on n vertices:
    parts of each partition of n carry a multiset of tree classes."""
    if not 1 <= n <= cap:
        raise SizeTooLarge(f"n={n} outside [1, {cap}]")
    trees = {s: enumerate_trees(s, cap) for s in range(1, n + 1)}
    out = []
    for part in _partitions_desc(n, n):
        sizes = sorted(Counter(part).items(), reverse=True)
        pools = [list(combinations_with_replacement(range(len(trees[s])), mult))
                 for s, mult in sizes]
        for combo in product(*pools):
            edges: list[tuple[int, int]] = []
            off = 0
            for (s, _), picks in zip(sizes, combo):
                for idx in picks:
                    edges.extend((u + off, v + off) for u, v in trees[s][idx].edges)
                    off += s
            out.append(Forest(n, edges))
    return out


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _caterpillar_from_sizes(sizes: tuple[int, ...]) -> Caterpillar:
    s = len(sizes)
    spine = tuple(range(s))
    leaves = []
    nxt = s
    for sz in sizes:
        leaves.append(tuple(range(nxt, nxt + sz - 1)))
        nxt += sz - 1
    return Caterpillar(spine, tuple(leaves))


def enumerate_caterpillars(n: int, cap: int = CATERPILLAR_CAP) -> list[Caterpillar]:
    """One representative per isomorphism class.  A class is a sequence of
    star sizes along the spine, up to reversal; end stars need >= 2 vertices
    (a bare end spine vertex would itself be a leaf)."""
    if not 1 <= n <= cap:
        raise SizeTooLarge(f"n={n} outside [1, {cap}]")
    if n == 1:
        return [Caterpillar((0,), ((),))]
    seen: set[tuple[int, ...]] = set()
    out = []
    for s in range(1, n + 1):
        for comp in _compositions(n, s):
            if s >= 2 and (comp[0] < 2 or comp[-1] < 2):
                continue
            canon = min(comp, tuple(reversed(comp)))
            if canon not in seen:
                seen.add(canon)
                out.append(_caterpillar_from_sizes(canon))
    return out


def _dihedral_images(n: int, chords: tuple[tuple[int, int], ...]):
    for r in range(n):
        for refl in (False, True):
            img = []
            for u, v in chords:
                fu = (r - u) % n if refl else (u + r) % n
                fv = (r - v) % n if refl else (v + r) % n
                img.append((min(fu, fv), max(fu, fv)))
            yield tuple(sorted(img))


def _dihedral_canonical(n: int, chords) -> tuple[tuple[int, int], ...]:
    return min(_dihedral_images(n, tuple(chords)))


def _chord_sets(n: int, h: int):
    """Backtracking over vertex-disjoint, noninterleaving chord h-sets on the
    labeled n-cycle, each set produced exactly once (sorted chord order)."""
    chords = [(u, v) for u in range(n) for v in range(u + 1, n)
              if min((v - u) % n, (u - v) % n) >= 2]

    def ok(c, chosen):
        for d in chosen:
            if set(c) & set(d) or convex_edges_cross(n, c, d):
                return False
        return True

    def bt(start: int, chosen: list):
        if len(chosen) == h:
            yield tuple(chosen)
            return
        for i in range(start, len(chords)):
            if ok(chords[i], chosen):
                chosen.append(chords[i])
                yield from bt(i + 1, chosen)
                chosen.pop()

    yield from bt(0, [])


def _check_chorded_caps(n: int, h: int) -> None:
    if n > CHORDED_N_CAP or h > CHORDED_H_CAP:
        raise SizeTooLarge(f"n={n}, h={h} beyond caps ({CHORDED_N_CAP}, {CHORDED_H_CAP})")
    if h < 0 or n < 2 * h + 2 or n < 3:
        raise InvalidSize(f"need n >= max(3, 2h+2), got n={n}, h={h}")


def enumerate_chorded_cycles(n: int, h: int) -> list[ChordedCycle]:
    """One representative per dihedral class of the cycle-plus-h-chords family."""
    _check_chorded_caps(n, h)
    seen: set = set()
    out = []
    for chosen in _chord_sets(n, h):
        canon = _dihedral_canonical(n, chosen)
        if canon not in seen:
            seen.add(canon)
            out.append(ChordedCycle(n, canon))
    return out


def chorded_cycle_census(n: int, h: int) -> tuple[int, int, int]:
    """(class count, labeled count, sum of class orbit sizes); the last two
    must agree, double-counting the enumeration."""
    _check_chorded_caps(n, h)
    seen: set = set()
    labeled = 0
    orbit_sum = 0
    for chosen in _chord_sets(n, h):
        labeled += 1
        canon = _dihedral_canonical(n, chosen)
        if canon not in seen:
            seen.add(canon)
            orbit_sum += len(set(_dihedral_images(n, canon)))
    return len(seen), labeled, orbit_sum


# ---------------------------------------------------------------------------
# counting oracles (arithmetic, no enumeration)
# ---------------------------------------------------------------------------


def rooted_tree_counts(nmax: int) -> list[int]:
    """counts[k] = rooted trees on k vertices, via the divisor-sum
    convolution recurrence."""
    a = [0] * (nmax + 1)
    if nmax >= 1:
        a[1] = 1
    for n in range(1, nmax):
        total = 0
        for k in range(1, n + 1):
            c = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            total += c * a[n - k + 1]
        if total % n:
            raise ArithmeticError("rooted count recurrence not integral")
        a[n + 1] = total // n
    return a


def free_tree_counts(nmax: int) -> list[int]:
    """counts[k] = free trees on k vertices, from rooted counts by removing
    the root choice (pairs of rooted trees joined at an edge)."""
    a = rooted_tree_counts(nmax)
    t = [0] * (nmax + 1)
    for n in range(1, nmax + 1):
        s = sum(a[i] * a[n - i] for i in range(1, n))
        extra = a[n // 2] if n % 2 == 0 else 0
        if (s - extra) % 2:
            raise ArithmeticError("free count correction not integral")
        t[n] = a[n] - (s - extra) // 2
    return t


def forest_counts(nmax: int) -> list[int]:
    """counts[k] = forests on k vertices: multisets of free trees, via the
    Euler transform of the free tree counts."""
    t = free_tree_counts(nmax)
    c = [0] * (nmax + 1)
    for k in range(1, nmax + 1):
        c[k] = sum(d * t[d] for d in range(1, k + 1) if k % d == 0)
    b = [0] * (nmax + 1)
    b[0] = 1
    for n in range(1, nmax + 1):
        total = sum(c[k] * b[n - k] for k in range(1, n + 1))
        if total % n:
            raise ArithmeticError("forest Euler transform not integral")
        b[n] = total // n
    return b


def labeled_forest_survey(n: int) -> tuple[int, int]:
    """(labeled forest count, isomorphism class count) by brute force over
    all acyclic edge subsets of the complete graph."""
    if not 1 <= n <= 8:
        raise SizeTooLarge(f"brute-force survey capped at 8, got {n}")
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    comp_cache: dict[frozenset, str] = {}
    classes: set[tuple[str, ...]] = set()
    labeled = 0
    chosen: list[tuple[int, int]] = []

    def canon() -> tuple[str, ...]:
        adj = adjacency_of(chosen, range(n))
        seen: set[int] = set()
        codes = []
        for v in range(n):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for w in adj[x]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            key = frozenset((min(u, w), max(u, w))
                            for u in comp for w in adj[u] if u < w)
            code = comp_cache.get(key)
            if code is None:
                code = free_code({u: adj[u] for u in comp})
                comp_cache[key] = code
            codes.append(code)
        return tuple(sorted(codes))

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def bt(start: int, parent: list[int]) -> None:
        nonlocal labeled
        labeled += 1
        classes.add(canon())
        for i in range(start, len(all_edges)):
            u, v = all_edges[i]
            ru, rv = find(parent, u), find(parent, v)
            if ru != rv:
                nxt = parent[:]
                nxt[ru] = rv
                chosen.append(all_edges[i])
                bt(i + 1, nxt)
                chosen.pop()

    bt(0, list(range(n)))
    return labeled, len(classes)


def is_caterpillar(forest: Forest) -> bool:
    from ..trees import caterpillar_spine
    from ..errors import NotACaterpillar
    try:
        caterpillar_spine(forest)
        return True
    except NotACaterpillar:
        return False


def random_tree(n: int, rng: random.Random) -> Forest:
    """Uniform random labeled tree via sequence decoding."""
    if n < 1:
        raise InvalidSize(f"n must be >= 1, got {n}")
    if n == 1:
        return Forest(1, [])
    if n == 2:
        return Forest(2, [(0, 1)])
    import heapq
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Forest(n, edges)


# ---------------------------------------------------------------------------
# convex universality checker
# ---------------------------------------------------------------------------


def check_universal_convex(host: ConvexHost, family) -> tuple[bool, ChordedCycle | None]:
    """True iff every family member embeds with its cycle on the host's
    convex order (all 2n dihedral placements tried); else the first failure."""
    if not host.has_spanning_cycle():
        raise NoSpanningCycle(f"host of kind {host.kind} has no spanning cycle")
    n = host.n
    for cc in family:
        if cc.n != n:
            raise SizeMismatch(f"family member has n={cc.n}, host has n={n}")
        found = False
        for r in range(n):
            if all(host.has_edge((u + r) % n, (v + r) % n) for u, v in cc.chords):
                found = True
                break
            if all(host.has_edge((r - u) % n, (r - v) % n) for u, v in cc.chords):
                found = True
                break
        if not found:
            return False, cc
    return True, None
