"""Command-line front end: analyze, heat, zeta, verify.

Exit codes: 0 all good, 2 input error, 3 invariant failure.  Output is
deterministic: floats are printed with 15 significant digits in scientific
notation and JSON keys are emitted in sorted order, so identical configs
produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from heatzeta import graphs, heat_graph, heat_tree, verify, zeta
from heatzeta.graphs import GraphError

__all__ = ["main"]

SCHEMA_VERSION = "1"
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INVARIANT_FAILURE = 3


def _fmt(x: float) -> str:
    return f"{x:.14e}"


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise GraphError(f"bad numeric list {text!r}: {exc}") from exc


def _resolve_graph(args) -> graphs.Graph:
    spec = args.graph
    if spec is None:
        raise GraphError("--graph is required")
    lowered = spec.lower()
    if lowered in graphs.BUILTIN_NAMES or (
        lowered.startswith("c") and lowered[1:].isdigit()
    ):
        return graphs.builtin_graph(lowered)
    path = Path(spec)
    if not path.exists():
        raise GraphError(f"graph file {spec!r} not found and not a builtin name")
    return graphs.load_graph(path)


def _emit(args, payload: dict | str) -> None:
    if isinstance(payload, dict):
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = payload
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = _resolve_graph(args)
    q = g.regularity()
    table = graphs.count_table(g, 0, args.order)
    verdict, _ = graphs.check_vertex_transitive(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "graph": args.graph,
        "q": q,
        "n": g.n_vertices,
        "vertex_transitive": verdict,
        "a_k": [table.a[k][0] for k in range(args.order + 1)],
        "c_k0": table.c0,
        "N_k0": table.n0,
        "N_k": table.n_total,
        "pi_k": table.primes,
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_analyze_tree(args) -> int:
    q = args.q
    if q is None or q < 1:
        raise GraphError("tree mode needs --q >= 1")
    zeros = [0] * (args.order + 1)
    payload = {
        "schema": SCHEMA_VERSION,
        "graph": "tree",
        "q": q,
        "n": None,
        "vertex_transitive": True,
        "N_k0": [1] + zeros[1:],
        "c_k0": [1] + zeros[1:],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_heat(args) -> int:
    ts = _parse_float_list(args.t) if args.t else [0.1, 1.0]
    if args.graph and args.graph.lower() == "tree":
        q = args.q
        if q is None or q < 1:
            raise GraphError("tree mode needs --q >= 1")
        rows = []
        for t in ts:
            for r in range(args.order + 1):
                value = heat_tree.tree_heat_kernel(q, t, r, args.tol)
                cross = (
                    heat_tree.tree_heat_kernel_integral(q, t, r, min(args.tol, 1e-10))
                    if q >= 2 and t > 0
                    else value.value
                )
                rows.append(
                    {
                        "t": t,
                        "r": r,
                        "value": value.value,
                        "tail_bound": value.tail_bound,
                        "cross_check_delta": abs(value.value - cross),
                    }
                )
        return _emit_heat(args, "tree", q, rows)
    g = _resolve_graph(args)
    q = g.regularity()
    use_spectral = g.n_vertices <= heat_graph.DENSE_EIGEN_CAP
    rows = []
    for t in ts:
        for x in range(g.n_vertices):
            series = heat_graph.heat_kernel_series(g, 0, x, t, args.tol)
            delta = (
                abs(series - heat_graph.heat_kernel_spectral(g, 0, x, t))
                if use_spectral
                else None
            )
            rows.append({"t": t, "x": x, "value": series, "cross_check_delta": delta})
    return _emit_heat(args, args.graph, q, rows)


def _emit_heat(args, name: str, q: int, rows: list[dict]) -> int:
    if args.format == "csv":
        keys = sorted(rows[0].keys())
        lines = [",".join(keys)]
        for row in rows:
            lines.append(
                ",".join(
                    _fmt(row[k]) if isinstance(row[k], float) else str(row[k])
                    for k in keys
                )
            )
        _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    payload = {
        "schema": SCHEMA_VERSION,
        "graph": name,
        "q": q,
        "rows": [
            {
                k: (_fmt(v) if isinstance(v, float) else v)
                for k, v in row.items()
            }
            for row in rows
        ],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_zeta(args) -> int:
    g = _resolve_graph(args)
    q = g.regularity()
    M = args.order
    n_total = graphs.closed_geodesics_total(g, M)
    primes = graphs.prime_geodesic_counts(n_total, M)
    log_series = zeta.zeta_log_series_from_counts(n_total, M)
    det_series = zeta.ihara_determinant_series(g, M)
    max_disc = max(
        abs(m * float(det_series[m]) - n_total[m]) for m in range(1, M + 1)
    )
    payload = {
        "schema": SCHEMA_VERSION,
        "graph": args.graph,
        "q": q,
        "n": g.n_vertices,
        "N_m": n_total,
        "pi_m": primes,
        "log_zeta_coefficients": [str(c) for c in log_series.coeffs],
        "determinant_formula_coefficients": [_fmt(float(c)) for c in det_series.coeffs],
        "max_discrepancy": _fmt(max_disc),
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.graph and args.graph.lower() == "tree":
        q = args.q
        if q is None or q < 1:
            raise GraphError("tree mode needs --q >= 1")
        results = verify.run_tree_checks((q,))
    elif args.graph:
        _resolve_graph(args)  # validates the name / file
        results = verify.run_graph_checks((args.graph.lower(),))
    else:
        results = verify.run_all_checks()
    failed = False
    for result in results:
        status = "pass" if result.passed else "FAIL"
        print(
            f"[{status}] {result.name}: worst {_fmt(result.worst)} "
            f"(budget {_fmt(result.budget)})"
        )
        failed = failed or not result.passed
    return EXIT_INVARIANT_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heatzeta",
        description=(
            "Heat kernels and Ihara-type zeta functions on regular graphs. "
            "Graphs: a builtin name (k4, c{n}, petersen, cube, k33, tree) or "
            "a file with 'u v' edge lines / a JSON {vertices, edges} document."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("analyze", "emit exact counting tables"),
        ("heat", "tabulate heat kernel values with cross-checks"),
        ("zeta", "emit the zeta report (counts, primes, coefficients)"),
        ("verify", "run the full identity suite; nonzero exit on failure"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", help="builtin name or path to an edge-list file")
        p.add_argument("--q", type=int, help="tree degree parameter (tree mode)")
        p.add_argument("--order", type=int, default=10, help="table/series order M")
        p.add_argument("--t", help="comma-separated time grid")
        p.add_argument("--u", help="comma-separated u grid")
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--out", help="output path (default stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.tol <= 0:
            raise GraphError("--tol must be positive")
        if args.order < 1:
            raise GraphError("--order must be >= 1")
        if args.command == "analyze":
            if args.graph and args.graph.lower() == "tree":
                return cmd_analyze_tree(args)
            return cmd_analyze(args)
        if args.command == "heat":
            return cmd_heat(args)
        if args.command == "zeta":
            return cmd_zeta(args)
        if args.command == "verify":
            return cmd_verify(args)
        raise GraphError(f"unknown command {args.command}")  # pragma: no cover
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
