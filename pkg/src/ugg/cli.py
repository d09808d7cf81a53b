"""Command-line front end.

Subcommands: build, embed, verify, enumerate, selftest, render.  Exit codes:
0 success, 1 validation or universality failure, 2 malformed input,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .convex import ChordedCycle, ConvexHost, build_caterpillar_host, build_twochord_host, embed_caterpillar, embed_twochord
from .embedder import Embedding, embed_forest
from .errors import (
    DegenerateEdge,
    DomainMismatch,
    EqualIndices,
    IndexOutOfRange,
    IntervalTooSmall,
    InvalidS,
    InvalidSize,
    MalformedInput,
    NotACaterpillar,
    NotTwoChord,
    SizeMismatch,
    SizeTooLarge,
    UggError,
)
from .trees import Forest, caterpillar_spine
from .ugraph import UniversalGraph, build_universal
from .workbench import fileio
from .workbench.families import (
    enumerate_caterpillars,
    enumerate_chorded_cycles,
    enumerate_forests,
)
from .workbench.render import render_svg
from .workbench.selftest import run_all
from .workbench.validate import validate_embedding

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_TOO_LARGE = 3

# user-input problems, as opposed to failures of a requested check
_INPUT_ERRORS = (
    MalformedInput,
    NotACaterpillar,
    NotTwoChord,
    InvalidSize,
    InvalidS,
    IndexOutOfRange,
    IntervalTooSmall,
    DegenerateEdge,
    SizeMismatch,
    EqualIndices,
    DomainMismatch,
    OSError,
)


def _build(args) -> int:
    if args.kind == "universal":
        host = build_universal(args.n)
    elif args.kind == "caterpillar":
        host = build_caterpillar_host(args.n)
    else:
        host = build_twochord_host(args.n)
    fileio.save_host(host, args.out, explicit=args.explicit)
    print(f"wrote {args.kind} host, n={args.n}, {host.edge_count()} edges, to {args.out}")
    return EXIT_OK


def _embed(args) -> int:
    host = fileio.load_host(args.host)
    graph = fileio.load_input(args.input)
    if isinstance(host, UniversalGraph):
        if not isinstance(graph, Forest):
            raise MalformedInput("a universal host embeds forests, not chorded cycles")
        emb = embed_forest(host, graph)
    elif isinstance(host, ConvexHost) and host.kind == "caterpillar-host":
        if not isinstance(graph, Forest):
            raise MalformedInput("a caterpillar host embeds caterpillar trees")
        emb = embed_caterpillar(host, caterpillar_spine(graph))
    elif isinstance(host, ConvexHost) and host.kind == "twochord-host":
        if not isinstance(graph, ChordedCycle):
            raise MalformedInput("a twochord host embeds cycles with two chords")
        emb = embed_twochord(host, graph)
    else:
        raise MalformedInput(f"no embedder for host kind {host.kind!r}")
    report = validate_embedding(host, graph, emb)
    if not report.ok:
        print("embedding failed validation:")
        for failure in report.failures[:10]:
            print(f"  {failure}")
        return EXIT_FAILURE
    fileio.save_embedding(emb, args.out)
    print(f"embedded {graph.n} vertices into {args.host}; wrote {args.out}")
    return EXIT_OK


def _verify(args) -> int:
    host = fileio.load_host(args.host)
    graph = fileio.load_input(args.input)
    mapping = fileio.load_embedding(args.embedding)
    report = validate_embedding(host, graph, Embedding(host.n, mapping, []))
    if report.ok:
        print("ok")
        return EXIT_OK
    print(f"failed: {len(report.failures)} problem(s)")
    for failure in report.failures[:20]:
        print(f"  {failure}")
    return EXIT_FAILURE


def _enumerate(args) -> int:
    blocks: list[list[str]] = []
    if args.what == "forests":
        blocks = [fileio.forest_lines(f) for f in enumerate_forests(args.n)]
    elif args.what == "caterpillars":
        blocks = [fileio.forest_lines(c.to_forest()) for c in enumerate_caterpillars(args.n)]
    else:
        blocks = [fileio.chorded_lines(cc) for cc in enumerate_chorded_cycles(args.n, args.h)]
    out: list[str] = []
    for i, block in enumerate(blocks):
        out.append(f"# class {i}")
        out.extend(block)
        out.append("")
    Path(args.out).write_text("\n".join(out), encoding="utf-8")
    print(f"wrote {len(blocks)} classes of {args.what} at n={args.n} to {args.out}")
    return EXIT_OK


def _selftest(args) -> int:
    ok = run_all(args.max_n, args.seed)
    return EXIT_OK if ok else EXIT_FAILURE


def _render(args) -> int:
    host = fileio.load_host(args.host)
    emb = None
    if args.embedding is not None:
        emb = Embedding(host.n, fileio.load_embedding(args.embedding), [])
    svg = render_svg(host, emb, args.layout)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ugg",
        description="Build sparse universal host graphs, embed forests, "
                    "caterpillars, and two-chord cycles into them, and verify "
                    "the results.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a host graph and save it")
    b.add_argument("--kind", required=True,
                   choices=("universal", "caterpillar", "twochord"))
    b.add_argument("--n", type=int, required=True, help="number of vertices")
    b.add_argument("--explicit", action="store_true",
                   help="serialize the full edge list")
    b.add_argument("--out", required=True)
    b.set_defaults(func=_build)

    e = sub.add_parser("embed", help="embed an input graph into a host")
    e.add_argument("--host", required=True)
    e.add_argument("--input", required=True,
                   help="forest or chorded-cycle file")
    e.add_argument("--out", required=True)
    e.set_defaults(func=_embed)

    v = sub.add_parser("verify", help="validate a saved embedding")
    v.add_argument("--host", required=True)
    v.add_argument("--input", required=True)
    v.add_argument("--embedding", required=True)
    v.set_defaults(func=_verify)

    n = sub.add_parser("enumerate", help="list all classes of a family")
    n.add_argument("--what", required=True,
                   choices=("forests", "caterpillars", "chorded"))
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--h", type=int, default=2, help="chord count (chorded only)")
    n.add_argument("--out", required=True)
    n.set_defaults(func=_enumerate)

    s = sub.add_parser("selftest", help="run the acceptance suites")
    s.add_argument("--max-n", type=int, default=None, dest="max_n",
                   help="cap instance sizes for a quick smoke run")
    s.add_argument("--seed", type=int, default=20250814,
                   help="seed for the random-tree smoke test")
    s.set_defaults(func=_selftest)

    r = sub.add_parser("render", help="draw a host (and embedding) as SVG")
    r.add_argument("--host", required=True)
    r.add_argument("--embedding", default=None)
    r.add_argument("--layout", choices=("schematic", "exact"), default="schematic")
    r.add_argument("--out", required=True)
    r.set_defaults(func=_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except UggError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
