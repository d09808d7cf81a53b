"""Crossing decisions for host edges, combinatorially and on exact coordinates.

Host vertices sit at x = index; y-coordinates realize the height order (higher
in the tree order means larger y), in general position.  Whether two host
edges cross is decided purely from the height order of their four endpoints
(`edges_cross`); `segments_cross_exact` is the independent geometric route on
realized integer coordinates, using exact orientation signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import btree
from .btree import BTreeShape
from .errors import (
    DegenerateEdge,
    IndexOutOfRange,
    SizeTooLarge,
)

REALIZE_CAP = 63


@dataclass(frozen=True)
class CoordinateRealization:
    """Exact integer coordinates for host vertices 0..n-1; points[i] = (i, y)."""

    shape: BTreeShape
    points: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.points)


def realize_coordinates(shape: BTreeShape, n: int | None = None,
                        cap: int = REALIZE_CAP) -> CoordinateRealization:
    """Place vertex i at (i, y_i) so that y-order equals the height order.

    y-values are assigned greedily from the lowest vertex up: each new point
    goes strictly above every line spanned by two points already placed, so no
    vertex lies inside the triangle of any three lower ones and no three
    points are collinear.  y grows doubly exponentially, hence the size cap.
    """
    if n is None:
        n = shape.n
    if not 1 <= n <= shape.m:
        raise IndexOutOfRange(f"n {n} not in [1, {shape.m}]")
    if n > cap:
        raise SizeTooLarge(f"coordinate realization capped at n <= {cap}, got {n}")
    order = sorted(range(n), key=lambda i: btree.height_key(shape, i), reverse=True)
    ys: dict[int, int] = {}
    placed: list[tuple[int, int]] = []
    prev_max = -1
    for v in order:
        floor_max = prev_max
        for a in range(len(placed)):
            x1, y1 = placed[a]
            for b in range(a + 1, len(placed)):
                x2, y2 = placed[b]
                # exact line value at x = v, floored
                num = y1 * (x2 - x1) + (y2 - y1) * (v - x1)
                den = x2 - x1
                if den < 0:
                    num, den = -num, -den
                floor_max = max(floor_max, num // den)
        y = floor_max + 1
        ys[v] = y
        placed.append((v, y))
        prev_max = y
    return CoordinateRealization(shape, tuple((i, ys[i]) for i in range(n)))


def _check_edge(shape: BTreeShape, n: int, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    for w in (u, v):
        if not 0 <= w < n:
            raise IndexOutOfRange(f"edge endpoint {w} not in [0, {n})")
    if u == v:
        raise DegenerateEdge(f"edge ({u}, {v}) joins a vertex to itself")
    return (u, v) if u < v else (v, u)


def edges_cross(shape: BTreeShape, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Do the straight segments of two host edges cross, decided by height order?

    Edges sharing an endpoint never cross (general position).  Otherwise sort
    so that e1 = (p, q), e2 = (r, s) with p < q, r < s, p < r; the answer
    depends only on which endpoint is highest and on two height comparisons.
    """
    n = shape.n
    p, q = _check_edge(shape, n, e1)
    r, s = _check_edge(shape, n, e2)
    if len({p, q, r, s}) < 4:
        return False
    if r < p:
        (p, q), (r, s) = (r, s), (p, q)
    if q < r:
        return False  # disjoint x-ranges
    key = {i: btree.height_key(shape, i) for i in (p, q, r, s)}
    top = min((p, q, r, s), key=key.get)

    def is_higher(u: int, w: int) -> bool:
        return key[u] < key[w]

    if s < q:
        # nested: p < r < s < q
        if top in (p, q):
            return False
        if top == r:
            return not (is_higher(s, p) and is_higher(s, q))
        return not (is_higher(r, p) and is_higher(r, q))
    # interleaved: p < r < q < s
    if top in (q, r):
        return False
    if top == p:
        return not (is_higher(q, r) and is_higher(q, s))
    return not (is_higher(r, p) and is_higher(r, q))


def orientation(p: tuple[int, int], q: tuple[int, int], r: tuple[int, int]) -> int:
    """Sign of the cross product (q - p) x (r - p): +1 left turn, -1 right, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def segments_cross_exact(coords: CoordinateRealization,
                         e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """True iff the two closed segments meet at a point interior to both.

    Endpoints are realized points in general position, so edges sharing an
    endpoint yield a zero orientation and come out non-crossing.
    """
    n = coords.n
    a, b = _check_edge(coords.shape, n, e1)
    c, d = _check_edge(coords.shape, n, e2)
    pa, pb, pc, pd = (coords.points[i] for i in (a, b, c, d))
    o1 = orientation(pa, pb, pc)
    o2 = orientation(pa, pb, pd)
    o3 = orientation(pc, pd, pa)
    o4 = orientation(pc, pd, pb)
    return o1 * o2 < 0 and o3 * o4 < 0


@dataclass(frozen=True)
class QuarterPlane:
    """Open region above and strictly to one side of an apex vertex.

    side 'left'  : { (x, y) : x < x(apex), y > y(apex) }
    side 'right' : { (x, y) : x > x(apex), y > y(apex) }
    """

    apex: int
    side: str

    def __post_init__(self) -> None:
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")


def vertex_in_quarter_plane(shape: BTreeShape, v: int, qp: QuarterPlane) -> bool:
    """Combinatorial membership: x-order by index, y-order by height order."""
    if v == qp.apex:
        return False
    if not btree.higher(shape, v, qp.apex):
        return False
    return v < qp.apex if qp.side == "left" else v > qp.apex


def point_in_quarter_plane(coords: CoordinateRealization, p: tuple[int, int],
                           qp: QuarterPlane) -> bool:
    ax, ay = coords.points[qp.apex]
    if p[1] <= ay:
        return False
    return p[0] < ax if qp.side == "left" else p[0] > ax


def segment_hits_quarter_plane(coords: CoordinateRealization,
                               seg: tuple[int, int], qp: QuarterPlane) -> bool:
    """Exact test: does the closed segment meet the open quarter-plane region?

    The part of the segment on the apex's open x-side is a sub-segment; y is
    linear along it, so it enters the region iff its y-supremum exceeds the
    apex's y.  The supremum is attained at an endpoint or approached at the
    clip boundary, which suffices because the region is open in x.
    """
    u, v = seg
    if u == v:
        raise DegenerateEdge(f"segment ({u}, {v}) is a point")
    (x1, y1), (x2, y2) = coords.points[u], coords.points[v]
    ax, ay = coords.points[qp.apex]
    if qp.side == "right":
        x1, x2, ax = -x1, -x2, -ax  # mirror so both sides read x < ax
    if x1 > x2:
        x1, x2, y1, y2 = x2, x1, y2, y1
    if x1 >= ax:
        return False
    if x2 < ax:
        return max(y1, y2) > ay
    if y1 > ay:
        return True
    if x1 == x2:  # vertical segment left of apex, already handled above
        return max(y1, y2) > ay
    y_at_clip = Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (ax - x1)
    return y_at_clip > ay
