"""Crossing predicates: the combinatorial rule against exact coordinates."""

import itertools

import pytest

from ugg import btree
from ugg.btree import BTreeShape
from ugg.errors import DegenerateEdge, SizeTooLarge
from ugg.geometry import (
    QuarterPlane,
    edges_cross,
    orientation,
    point_in_quarter_plane,
    realize_coordinates,
    segment_hits_quarter_plane,
    segments_cross_exact,
    vertex_in_quarter_plane,
)
from ugg.ugraph import build_universal


def shape_for(n):
    return BTreeShape.from_size(n)


def test_realize_single_vertex():
    assert realize_coordinates(shape_for(1), 1).points == ((0, 0),)


def test_realize_three_vertices_regression():
    # greedy assignment is deterministic; these exact values double as a
    # regression anchor (any output passing the invariants would be valid)
    assert realize_coordinates(shape_for(3), 3).points == ((0, 2), (1, 0), (2, 1))


@pytest.mark.parametrize("n", list(range(1, 16)) + [31])
def test_realize_invariants(n):
    shape = shape_for(n)
    coords = realize_coordinates(shape, n)
    pts = coords.points
    assert all(pts[i][0] == i for i in range(n))
    # y-order equals the height order
    for u in range(n):
        for w in range(n):
            if u != w:
                assert btree.higher(shape, u, w) == (pts[u][1] > pts[w][1])
    # every vertex above every line through two lower vertices
    by_y = sorted(range(n), key=lambda i: pts[i][1])
    for idx, v in enumerate(by_y):
        for a, b in itertools.combinations(by_y[:idx], 2):
            pa, pb = sorted((pts[a], pts[b]))
            assert orientation(pa, pb, pts[v]) > 0, (n, a, b, v)
    # general position
    if n <= 15:
        for a, b, c in itertools.combinations(range(n), 3):
            assert orientation(pts[a], pts[b], pts[c]) != 0


def test_realize_size_cap():
    shape = BTreeShape.from_height(7)
    with pytest.raises(SizeTooLarge):
        realize_coordinates(shape, 64)


def test_edges_cross_examples():
    shape = shape_for(7)
    assert not edges_cross(shape, (0, 3), (3, 5))  # shared endpoint
    assert not edges_cross(shape, (1, 2), (5, 6))  # disjoint x-ranges
    assert edges_cross(shape, (1, 3), (2, 5))


def test_segments_cross_examples():
    coords = realize_coordinates(shape_for(7), 7)
    assert not segments_cross_exact(coords, (0, 3), (3, 5))
    assert segments_cross_exact(coords, (1, 3), (2, 5))
    assert not segments_cross_exact(coords, (0, 6), (1, 2))


@pytest.mark.parametrize("n", [7, 15])
def test_predicate_agrees_with_exact_oracle_on_host_edges(n):
    G = build_universal(n)
    coords = realize_coordinates(G.shape, n)
    edges = list(G.edges())
    for e1, e2 in itertools.combinations(edges, 2):
        assert edges_cross(G.shape, e1, e2) == segments_cross_exact(coords, e1, e2)


def test_predicate_agrees_on_all_vertex_pairs():
    # not only host edges: any two segments over host vertices
    n = 10
    shape = shape_for(n)
    coords = realize_coordinates(shape, n)
    segs = list(itertools.combinations(range(n), 2))
    for e1, e2 in itertools.combinations(segs, 2):
        assert edges_cross(shape, e1, e2) == segments_cross_exact(coords, e1, e2)


def test_highest_endpoint_shields_its_edge():
    # an edge hanging from a vertex higher than all four endpoints never
    # crosses an edge whose x-range stays on one side of its other endpoint
    n = 15
    shape = shape_for(n)
    for a, b, c, d in itertools.permutations(range(n), 4):
        if c > d:
            continue
        if not all(btree.higher(shape, a, w) for w in (b, c, d)):
            continue
        if not (b < c or b > d):
            continue
        assert not edges_cross(shape, (a, b), (c, d)), (a, b, c, d)


def test_edges_cross_symmetries():
    shape = shape_for(7)
    pairs = list(itertools.combinations(range(7), 2))
    for e1, e2 in itertools.combinations(pairs, 2):
        base = edges_cross(shape, e1, e2)
        assert edges_cross(shape, e2, e1) == base
        assert edges_cross(shape, (e1[1], e1[0]), e2) == base
        assert edges_cross(shape, e1, (e2[1], e2[0])) == base


@pytest.mark.parametrize("n", [7, 15])
def test_quarter_plane_combinatorial_matches_coordinates(n):
    shape = shape_for(n)
    coords = realize_coordinates(shape, n)
    for apex in range(n):
        for side in ("left", "right"):
            qp = QuarterPlane(apex, side)
            for v in range(n):
                if v == apex:
                    continue
                combinatorial = vertex_in_quarter_plane(shape, v, qp)
                geometric = point_in_quarter_plane(coords, coords.points[v], qp)
                assert combinatorial == geometric, (n, apex, side, v)


def test_quarter_plane_hand_cases():
    coords = realize_coordinates(shape_for(3), 3)
    # points are (0,2), (1,0), (2,1)
    assert segment_hits_quarter_plane(coords, (1, 0), QuarterPlane(2, "left"))
    assert not segment_hits_quarter_plane(coords, (1, 2), QuarterPlane(0, "right"))
    assert point_in_quarter_plane(coords, (1, 5), QuarterPlane(2, "left"))
    assert not point_in_quarter_plane(coords, (1, 1), QuarterPlane(2, "left"))


def test_segment_hits_region_only_beyond_apex_height():
    # a segment wholly below the apex's y never enters either region
    n = 7
    coords = realize_coordinates(shape_for(n), 7)
    apex = 0  # highest vertex overall
    for u, v in itertools.combinations(range(1, n), 2):
        assert not segment_hits_quarter_plane(coords, (u, v), QuarterPlane(apex, "left"))
        assert not segment_hits_quarter_plane(coords, (u, v), QuarterPlane(apex, "right"))


def test_quarter_plane_errors():
    with pytest.raises(ValueError):
        QuarterPlane(0, "up")
    coords = realize_coordinates(shape_for(3), 3)
    with pytest.raises(DegenerateEdge):
        segment_hits_quarter_plane(coords, (1, 1), QuarterPlane(0, "left"))
    with pytest.raises(DegenerateEdge):
        edges_cross(shape_for(7), (2, 2), (0, 1))
