"""Command-line entry point.

Subcommands::

    graphsimplex report  GRAPH [--exhaustive-cuts] [--tolerance X]
    graphsimplex verify  [GRAPH] [--corpus N] [--tolerance X]
    graphsimplex maxcut  GRAPH
    graphsimplex export  GRAPH --mesh PREFIX

``GRAPH`` is an edge-list file (``i j [w]`` per line, 0-based ids, ``#``
comments); ``-`` reads standard input. Output is JSON with sorted keys and
floats rounded to 12 significant digits, so identical input gives
byte-identical output.

Exit codes: 0 ok, 1 parse/validation error, 2 disconnected graph, 3 size
guard, 4 verification failure.

Mesh format (``export``, N = 4 only). Two files, ``PREFIX.original.mesh``
and ``PREFIX.inverse.mesh``, each::

    3 3                 <- ambient dimension N-1, vertices per face
    v x y z             <- four vertex lines, node order 0..3
    f a b c             <- four faces, 0-based vertex ids, outward-oriented

Floats are written with 12 significant digits.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .exceptions import (
    BarycentricError,
    ConnectivityError,
    EdgeListParseError,
    GraphValidationError,
    SizeGuardError,
    SpectralError,
    SubsetError,
)
from .graph import WeightedGraph, laplacian, parse_edge_list, read_edge_list
from .oracles import ENUM_GUARD, enumerate_connected_graphs, max_cut_bruteforce, min_altitude_cut
from .report import build_report, dumps
from .simplex import SimplexEmbedding, embed_pair
from .spectral import eigendecompose
from .verify import DEFAULT_TOLERANCE, verify_graph

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISCONNECTED = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4

PROJECTION_SEARCH_LIMIT = 14


class VerificationFailed(Exception):
    pass


def _load(path: str) -> WeightedGraph:
    if path == "-":
        return parse_edge_list(sys.stdin)
    return read_edge_list(path)


def _emit(doc, as_json: bool, lines=None):
    if as_json or lines is None:
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_report(args) -> int:
    g = _load(args.graph)
    doc = build_report(g, exhaustive_cuts=args.exhaustive_cuts, tolerance=args.tolerance)
    _emit(doc, True)
    if not doc["verification"]["all_passed"]:
        failed = [k for k, v in doc["verification"]["checks"].items() if not v["passed"]]
        raise VerificationFailed(failed[0])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus is not None:
        if args.corpus > ENUM_GUARD:
            raise SizeGuardError(f"--corpus is limited to N <= {ENUM_GUARD}, got {args.corpus}")
        graphs = [g for n in range(2, args.corpus + 1) for g in enumerate_connected_graphs(n)]
    elif args.graph is not None:
        graphs = [_load(args.graph)]
    else:
        raise GraphValidationError("verify needs a graph file or --corpus N")
    if args.graph is not None and args.corpus is not None:
        graphs.insert(0, _load(args.graph))

    worst: dict[str, float] = {}
    first_failure = None
    for g in graphs:
        for check in verify_graph(g, tolerance=args.tolerance):
            worst[check.name] = max(worst.get(check.name, 0.0), check.residual)
            if first_failure is None and not check.passed:
                first_failure = check.name
    doc = {
        "graphs": len(graphs),
        "tolerance": args.tolerance,
        "all_passed": first_failure is None,
        "first_failure": first_failure,
        "checks": {k: {"max_residual": r, "passed": r <= args.tolerance} for k, r in worst.items()},
    }
    lines = [f"{'PASS' if r <= args.tolerance else 'FAIL'} {k} {r:.3e}" for k, r in worst.items()]
    lines.append(f"{len(graphs)} graph(s), tolerance {args.tolerance:g}: "
                 + ("all passed" if first_failure is None else f"first failure {first_failure}"))
    _emit(doc, args.json, lines)
    if first_failure is not None:
        raise VerificationFailed(first_failure)
    return EXIT_OK


def cmd_maxcut(args) -> int:
    g = _load(args.graph)
    best = max_cut_bruteforce(g)
    d = eigendecompose(laplacian(g))
    _, inv = embed_pair(d)
    method = "projection" if g.n_nodes <= PROJECTION_SEARCH_LIMIT else "dual"
    alt = min_altitude_cut(inv, method=method)
    agree = best.best_subset == alt.best_subset
    doc = {
        "cut": best.best_subset.sorted_members(),
        "value": best.best_value,
        "altitude_subset": alt.best_subset.sorted_members(),
        "altitude": alt.best_value,
        "evaluated": best.evaluated_count,
        "altitude_method": method,
        "agree": agree,
    }
    lines = [
        f"max cut {doc['cut']} value {best.best_value:.12g}",
        f"min altitude {doc['altitude_subset']} length {alt.best_value:.12g}",
        f"agree {agree}",
    ]
    _emit(doc, args.json, lines)
    if not agree:
        raise VerificationFailed("maxcut.altitude_argmax")
    return EXIT_OK


def tetrahedron_mesh(e: SimplexEmbedding) -> str:
    """Plain-text mesh of a 3-simplex; see the module docstring for the format."""
    if e.n_nodes != 4:
        raise SizeGuardError(f"mesh export needs N = 4, got N = {e.n_nodes}")
    s = e.vertices
    out = ["3 3"]
    for i in range(4):
        out.append("v " + " ".join(f"{float(c):.12g}" for c in s[:, i]))
    for skip in range(4):
        a, b, c = (k for k in range(4) if k != skip)
        normal = np.cross(s[:, b] - s[:, a], s[:, c] - s[:, a])
        if normal @ (s[:, skip] - s[:, a]) > 0:
            b, c = c, b
        out.append(f"f {a} {b} {c}")
    return "\n".join(out).replace("-0 ", "0 ") + "\n"


def cmd_export(args) -> int:
    g = _load(args.graph)
    if g.n_nodes != 4:
        raise SizeGuardError(f"mesh export needs N = 4, got N = {g.n_nodes}")
    if not args.mesh:
        raise GraphValidationError("export needs --mesh PREFIX")
    d = eigendecompose(laplacian(g))
    written = []
    for e in embed_pair(d):
        path = f"{args.mesh}.{e.kind.value}.mesh"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(tetrahedron_mesh(e))
        written.append(path)
    _emit({"files": written}, args.json, written)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphsimplex", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                        help="JSON output (default); --no-json prints plain lines where supported")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="full JSON report for one graph")
    p.add_argument("graph")
    p.add_argument("--exhaustive-cuts", action="store_true",
                   help="report every complementary pair of subsets (N <= 20)")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("graph", nargs="?")
    p.add_argument("--corpus", type=int, metavar="N",
                   help="also verify every connected labeled graph on 2..N nodes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maxcut", parents=[common], help="exhaustive max cut and minimum inverse altitude")
    p.add_argument("graph")
    p.set_defaults(func=cmd_maxcut)

    p = sub.add_parser("export", parents=[common], help="tetrahedron meshes for a 4-node graph")
    p.add_argument("graph")
    p.add_argument("--mesh", metavar="PREFIX")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConnectivityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (EdgeListParseError, GraphValidationError, SubsetError, BarycentricError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except SpectralError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
