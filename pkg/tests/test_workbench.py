"""Enumerators against counting formulas, the validator, rendering, file I/O."""

import math
import xml.etree.ElementTree as ET

import pytest

from ugg.convex import ChordedCycle, build_complete_host, build_cycle_host, build_twochord_host, build_caterpillar_host
from ugg.embedder import Embedding, embed_forest
from ugg.errors import InvalidSize, MalformedInput, SizeTooLarge
from ugg.trees import Forest
from ugg.ugraph import UniversalGraph, build_universal
from ugg.workbench import fileio
from ugg.workbench.families import (
    chorded_cycle_census,
    enumerate_caterpillars,
    enumerate_chorded_cycles,
    enumerate_forests,
    enumerate_trees,
    forest_counts,
    free_tree_counts,
    is_caterpillar,
    labeled_forest_survey,
    random_tree,
    rooted_tree_counts,
    check_universal_convex,
)
from ugg.workbench.render import render_svg
from ugg.workbench.validate import validate_embedding


def test_rooted_tree_counts():
    assert rooted_tree_counts(10) == [0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_free_tree_counts():
    assert free_tree_counts(10) == [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_forest_counts():
    assert forest_counts(10) == [1, 1, 2, 3, 6, 10, 20, 37, 76, 153, 329]


def test_tree_enumerator_matches_recurrence():
    counts = free_tree_counts(10)
    for n in range(1, 11):
        assert len(enumerate_trees(n)) == counts[n], n


def test_forest_enumerator_matches_recurrence():
    counts = forest_counts(10)
    for n in range(1, 11):
        assert len(enumerate_forests(n)) == counts[n], n


def test_forest_enumerator_yields_distinct_valid_forests():
    for n in range(1, 8):
        forests = enumerate_forests(n)
        for f in forests:
            assert f.n == n
        from ugg.workbench.families import forest_code
        codes = {forest_code(f.n, f.edges) for f in forests}
        assert len(codes) == len(forests)


def labeled_forest_count_formula(nmax: int) -> list[int]:
    """Independent route: f(n) = sum over k of C(n-1, k-1) * t(k) * f(n-k),
    where t(k) = k^(k-2) labeled trees contain a fixed vertex; k is the size
    of the component containing vertex n."""
    f = [1]
    for n in range(1, nmax + 1):
        total = 0
        for k in range(1, n + 1):
            t_k = k ** (k - 2) if k >= 2 else 1
            total += math.comb(n - 1, k - 1) * t_k * f[n - k]
        f.append(total)
    return f


def test_labeled_survey_against_formula_and_classes():
    formula = labeled_forest_count_formula(7)
    class_counts = forest_counts(7)
    for n in range(1, 8):
        labeled, classes = labeled_forest_survey(n)
        assert labeled == formula[n], n
        assert classes == class_counts[n], n


def test_labeled_survey_cap():
    with pytest.raises(SizeTooLarge):
        labeled_forest_survey(9)


def test_caterpillar_enumeration_matches_recognizer_filter():
    for n in range(1, 11):
        by_composition = len(enumerate_caterpillars(n))
        by_filter = sum(1 for t in enumerate_trees(n) if is_caterpillar(t))
        assert by_composition == by_filter, n


def test_caterpillar_enumeration_small_values():
    # one class each at n=1..3; the star and the path at n=4
    assert len(enumerate_caterpillars(1)) == 1
    assert len(enumerate_caterpillars(2)) == 1
    assert len(enumerate_caterpillars(3)) == 1
    assert len(enumerate_caterpillars(4)) == 2
    assert len(enumerate_caterpillars(5)) == 3


def test_chorded_cycle_enumeration_basics():
    # single class of a bare cycle at h=0
    assert len(enumerate_chorded_cycles(6, 0)) == 1
    # only one chord shape fits a square
    assert len(enumerate_chorded_cycles(4, 1)) == 1
    # hexagon: chord of circular length 2 or 3
    assert len(enumerate_chorded_cycles(6, 1)) == 2
    # n=6, h=2: chords must cut off disjoint ears; one class up to symmetry
    classes6 = enumerate_chorded_cycles(6, 2)
    assert len(classes6) == 1
    for n in range(6, 13):
        classes = enumerate_chorded_cycles(n, 2)
        count, labeled, orbit_sum = chorded_cycle_census(n, 2)
        assert count == len(classes)
        assert orbit_sum == labeled, n


def test_chorded_cycle_enumeration_caps():
    with pytest.raises(SizeTooLarge):
        enumerate_chorded_cycles(31, 2)
    with pytest.raises(SizeTooLarge):
        enumerate_chorded_cycles(12, 4)
    with pytest.raises(InvalidSize):
        enumerate_chorded_cycles(5, 2)


def test_random_tree_is_a_tree():
    import random

    rng = random.Random(7)
    for n in (1, 2, 3, 17, 64):
        for _ in range(5):
            t = random_tree(n, rng)
            assert t.n == n
            assert len(t.edges) == n - 1
            assert len(t.components()) == 1


def test_check_universal_convex():
    family = enumerate_chorded_cycles(8, 2)
    ok, witness = check_universal_convex(build_complete_host(8), family)
    assert ok and witness is None
    ok, witness = check_universal_convex(build_cycle_host(8), family)
    assert not ok and witness is not None


def test_bare_cycle_not_universal_for_single_chord():
    ok, witness = check_universal_convex(build_cycle_host(6),
                                         enumerate_chorded_cycles(6, 1))
    assert not ok and witness is not None


def test_twochord_host_certified_at_20():
    ok, witness = check_universal_convex(build_twochord_host(20),
                                         enumerate_chorded_cycles(20, 2))
    assert ok and witness is None


def test_validator_accepts_identity_on_empty_graph():
    G = build_universal(3)
    report = validate_embedding(G, Forest(3, []), Embedding(3, {0: 0, 1: 1, 2: 2}))
    assert report.ok and report.failures == []


def test_validator_catches_non_injective():
    G = build_universal(3)
    report = validate_embedding(G, Forest(3, []), Embedding(3, {0: 1, 1: 1, 2: 2}))
    assert not report.ok
    assert report.failures[0][0] == "NotInjective"


def test_validator_catches_missing_vertex_and_range():
    G = build_universal(3)
    report = validate_embedding(G, Forest(3, []), Embedding(3, {0: 0, 1: 1}))
    assert not report.ok and report.failures[0][0] == "SizeMismatch"
    report = validate_embedding(G, Forest(3, []), Embedding(3, {0: 0, 1: 1, 2: 5}))
    assert not report.ok and report.failures[0][0] == "SizeMismatch"


def test_validator_catches_missing_edge():
    G = build_universal(15)
    # (3, 13) is a non-edge of the 15-vertex host
    emb = Embedding(15, {t: t for t in range(15)})
    report = validate_embedding(G, (15, [(3, 13)]), emb)
    assert not report.ok
    assert report.failures[0][0] == "MissingEdge"


def test_validator_catches_crossing():
    G = build_universal(7)
    emb = Embedding(7, {t: t for t in range(7)})
    report = validate_embedding(G, (7, [(1, 3), (2, 5)]), emb)
    assert not report.ok
    assert ("Crossing", ((1, 3), (2, 5))) in report.failures


def test_validator_convex_crossing():
    host = build_complete_host(10)
    emb = Embedding(10, {t: t for t in range(10)})
    report = validate_embedding(host, (10, [(0, 5), (2, 7)]), emb)
    assert not report.ok
    assert report.failures[0][0] == "Crossing"


def test_validator_ok_case():
    G = build_universal(5)
    f = Forest(5, [(0, 1), (1, 2), (3, 4)])
    assert validate_embedding(G, f, embed_forest(G, f)).ok


def svg_counts(svg: str) -> dict[str, int]:
    root = ET.fromstring(svg)
    counts: dict[str, int] = {}
    for el in root.iter():
        cls = el.attrib.get("class")
        if cls:
            counts[cls] = counts.get(cls, 0) + 1
    return counts


def test_render_universal_schematic_counts():
    G = build_universal(7)
    counts = svg_counts(render_svg(G))
    assert counts["vertex"] == 7
    assert counts["edge"] == 21
    assert counts["label"] == 7


def test_render_universal_exact_counts():
    G = build_universal(15)
    counts = svg_counts(render_svg(G, layout="exact"))
    assert counts["vertex"] == 15
    assert counts["edge"] == 87


def test_render_exact_layout_cap():
    with pytest.raises(SizeTooLarge):
        render_svg(build_universal(32), layout="exact")
    render_svg(build_universal(31), layout="exact")


def test_render_single_vertex():
    counts = svg_counts(render_svg(build_universal(1)))
    assert counts["vertex"] == 1
    assert counts.get("edge", 0) == 0


def test_render_embedding_overlay():
    G = build_universal(5)
    f = Forest(5, [(0, 1), (1, 2), (3, 4)])
    emb = embed_forest(G, f)
    counts = svg_counts(render_svg(G, emb))
    assert counts["mapped"] == 5


def test_render_convex_host():
    for host in (build_twochord_host(10), build_caterpillar_host(10)):
        counts = svg_counts(render_svg(host))
        assert counts["vertex"] == 10
        assert counts["edge"] == host.edge_count()


def test_host_roundtrip_universal(tmp_path):
    G = build_universal(12)
    p = tmp_path / "host.txt"
    fileio.save_host(G, p)
    back = fileio.load_host(p)
    assert isinstance(back, UniversalGraph) and back.n == 12
    fileio.save_host(G, p, explicit=True)
    assert fileio.load_host(p).n == 12


def test_host_roundtrip_convex(tmp_path):
    for build in (build_caterpillar_host, build_twochord_host):
        host = build(9)
        p = tmp_path / "host.txt"
        fileio.save_host(host, p)
        back = fileio.load_host(p)
        assert back.kind == host.kind
        assert back.edges == host.edges


def test_host_roundtrip_custom(tmp_path):
    host = build_cycle_host(6)
    p = tmp_path / "host.txt"
    fileio.save_host(host, p)
    back = fileio.load_host(p)
    assert back.kind == "custom"
    assert back.edges == host.edges


def test_forest_roundtrip(tmp_path):
    f = Forest(6, [(0, 3), (3, 5), (1, 2)])
    p = tmp_path / "forest.txt"
    fileio.save_forest(f, p)
    back = fileio.load_forest(p)
    assert back.n == 6 and back.edges == f.edges


def test_chorded_roundtrip(tmp_path):
    cc = ChordedCycle(10, ((0, 3), (5, 9)))
    p = tmp_path / "cc.txt"
    fileio.save_chorded(cc, p)
    back = fileio.load_chorded(p)
    assert back.n == 10 and back.chords == cc.chords


def test_load_input_distinguishes_formats(tmp_path):
    p1 = tmp_path / "forest.txt"
    fileio.save_forest(Forest(3, [(0, 1)]), p1)
    assert isinstance(fileio.load_input(p1), Forest)
    p2 = tmp_path / "cc.txt"
    fileio.save_chorded(ChordedCycle(6, ((0, 2), (3, 5))), p2)
    assert isinstance(fileio.load_input(p2), ChordedCycle)


def test_embedding_roundtrip(tmp_path):
    emb = Embedding(5, {0: 4, 1: 3, 2: 0, 3: 1, 4: 2})
    p = tmp_path / "emb.txt"
    fileio.save_embedding(emb, p)
    assert fileio.load_embedding(p) == emb.mapping


def test_malformed_files(tmp_path):
    cases = {
        "bad_magic.txt": "ugg-graph v2\nkind universal\nn 3\n",
        "bad_kind.txt": "ugg-graph v1\nkind hexagon\nn 3\n",
        "bad_count.txt": "ugg-graph v1\nkind universal\nn 3\nedges 2\ne 0 1\n",
        "custom_without_edges.txt": "ugg-graph v1\nkind custom\nn 3\n",
        "bad_forest.txt": "n 3\nx 0 1\n",
        "bad_chorded.txt": "n 6\nh 2\nc 0 2\n",
        "dup_embedding.txt": "m 0 1\nm 0 2\n",
    }
    loaders = {
        "bad_magic.txt": fileio.load_host,
        "bad_kind.txt": fileio.load_host,
        "bad_count.txt": fileio.load_host,
        "custom_without_edges.txt": fileio.load_host,
        "bad_forest.txt": fileio.load_forest,
        "bad_chorded.txt": fileio.load_chorded,
        "dup_embedding.txt": fileio.load_embedding,
    }
    for name, text in cases.items():
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        with pytest.raises(MalformedInput):
            loaders[name](p)


def test_comments_and_blank_lines_ignored(tmp_path):
    p = tmp_path / "forest.txt"
    p.write_text("# a comment\n\nn 3\n# another\ne 0 1\n\n", encoding="utf-8")
    f = fileio.load_forest(p)
    assert f.n == 3 and f.edges == [(0, 1)]
