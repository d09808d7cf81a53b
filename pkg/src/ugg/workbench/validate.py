"""Embedding validator: injectivity, edge membership, pairwise noncrossing.

Failures are data, not exceptions; every failure carries a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..convex import ChordedCycle, convex_edges_cross
from ..embedder import Embedding
from ..geometry import edges_cross
from ..trees import Caterpillar, Forest
from ..ugraph import UniversalGraph


@dataclass
class ValidationReport:
    status: str  # "ok" | "failed"
    failures: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _input_shape(graph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(graph, Forest):
        return graph.n, list(graph.edges)
    if isinstance(graph, Caterpillar):
        f = graph.to_forest()
        return f.n, list(f.edges)
    if isinstance(graph, ChordedCycle):
        return graph.n, graph.edges()
    n, edges = graph
    return n, list(edges)


def validate_embedding(host, graph, emb: Embedding) -> ValidationReport:
    """Check emb maps graph into host: injective on all input vertices, every
    input edge on a host edge, no two mapped segments crossing."""
    n_in, in_edges = _input_shape(graph)
    failures: list[tuple[str, tuple]] = []
    mp = emb.mapping

    missing = [t for t in range(n_in) if t not in mp]
    if missing:
        failures.append(("SizeMismatch", tuple(missing[:4])))
        return ValidationReport("failed", failures)
    host_n = host.n
    out_of_range = [t for t in range(n_in) if not 0 <= mp[t] < host_n]
    if out_of_range:
        failures.append(("SizeMismatch", tuple((t, mp[t]) for t in out_of_range[:4])))
        return ValidationReport("failed", failures)

    by_image: dict[int, int] = {}
    for t in range(n_in):
        g = mp[t]
        if g in by_image:
            failures.append(("NotInjective", (by_image[g], t, g)))
        else:
            by_image[g] = t
    if failures:
        return ValidationReport("failed", failures)

    universal = isinstance(host, UniversalGraph)
    is_edge = host.is_edge if universal else host.has_edge

    mapped: list[tuple[int, int]] = []
    for u, v in in_edges:
        gu, gv = mp[u], mp[v]
        if not is_edge(gu, gv):
            failures.append(("MissingEdge", ((u, v), (gu, gv))))
        else:
            mapped.append((min(gu, gv), max(gu, gv)))
    if failures:
        return ValidationReport("failed", failures)

    if universal:
        # Crossing needs overlapping open x-ranges, so after sorting by the
        # left endpoint only pairs with p2 < q1 can cross.
        mapped.sort()
        shape = host.shape
        for i in range(len(mapped)):
            e1 = mapped[i]
            q1 = e1[1]
            for j in range(i + 1, len(mapped)):
                e2 = mapped[j]
                if e2[0] >= q1:
                    break
                if edges_cross(shape, e1, e2):
                    failures.append(("Crossing", (e1, e2)))
    else:
        for i in range(len(mapped)):
            e1 = mapped[i]
            for j in range(i + 1, len(mapped)):
                if convex_edges_cross(host.n, e1, mapped[j]):
                    failures.append(("Crossing", (e1, mapped[j])))
    return ValidationReport("failed" if failures else "ok", failures)
