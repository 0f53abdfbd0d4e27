"""Command-line entry point: ``grouptrees <subcommand> ...``.

Exit status: 0 on success (NOT_FOUND included), 1 on computation errors such
as a bad Cayley file or a failing verify suite, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import spectra as sp
from .arith import factorize, trial_bound_from_env
from .graphs import commuting_graph, power_graph
from .groups import CayleyTableError, GroupSpecError, build_group
from .structure import (
    coprime_witness,
    find_power_free_decomposition,
    involution_set,
    universal_vertices,
)
from .suites import run_suite
from .suzuki import (
    kappa_suzuki_closed,
    kappa_sylow_closed,
    suzuki_commuting_expr,
    suzuki_params,
    sylow_commuting_expr,
)
from .treecount import tree_number

DECIMAL_BIT_LIMIT = 1_000_000


class UsageError(Exception):
    pass


def _emit(args, payload: dict, lines: list[str], quiet_value: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.quiet:
        print(quiet_value)
    else:
        print("\n".join(lines))


def _group(spec: str):
    try:
        return build_group(spec)
    except GroupSpecError as exc:
        raise UsageError(str(exc)) from exc


def cmd_kappa(args) -> int:
    G = _group(args.group)
    build = power_graph if args.graph == "power" else commuting_graph
    g = build(G, args.subset)
    value = tree_number(g, method=args.method)
    fac = factorize(value, trial_bound_from_env())
    payload = {
        "group": G.label,
        "graph": args.graph,
        "subset": args.subset,
        "vertices": g.n,
        "edges": g.edge_count(),
        "kappa": str(value),
        "factored": str(fac),
    }
    lines = [f"{k}: {payload[k]}" for k in ("group", "graph", "subset", "vertices", "edges", "kappa", "factored")]
    _emit(args, payload, lines, str(fac))
    return 0


def cmd_spectrum(args) -> int:
    try:
        e = sp.parse_expr(args.expr)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    s = sp.spectrum(e)
    fac = sp.kappa_from_spectrum_factored(s)
    small = fac.bit_length_estimate() <= DECIMAL_BIT_LIMIT
    payload = {
        "expr": str(e),
        "vertices": e.vertex_count,
        "spectrum": s.to_json(),
        "factored": str(fac),
        "kappa": str(fac.value()) if small else None,
    }
    lines = [f"expr: {e}", f"vertices: {e.vertex_count}", f"spectrum: {s}"]
    if small:
        lines.append(f"kappa: {fac.value()}")
    lines.append(f"factored: {fac}")
    _emit(args, payload, lines, str(fac.value()) if small else str(fac))
    return 0


def cmd_suzuki(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    s = suzuki_params(args.n)
    sylow = kappa_sylow_closed(s.q)
    closed = kappa_suzuki_closed(s.q)
    spectral = sp.kappa_from_spectrum_factored(sp.spectrum(suzuki_commuting_expr(s.q)))
    payload = {
        **s.to_json(),
        "kappa_sylow": str(sylow),
        "kappa_suzuki": str(closed),
        "spectral_route_agrees": spectral == closed,
    }
    if args.check_sylow:
        if s.q != 8:
            raise UsageError("--check-sylow realizes q^2 vertices and is only offered for n=1")
        payload["sylow_matrix_tree_agrees"] = tree_number(sp.realize(sylow_commuting_expr(8))) == sylow.value()
    if args.decimal:
        if closed.bit_length_estimate() > DECIMAL_BIT_LIMIT:
            raise UsageError(f"decimal output refused above {DECIMAL_BIT_LIMIT} bits")
        payload["kappa_suzuki_decimal"] = str(closed.value())
    keys = ["n", "q", "r", "alpha", "beta", "order", "p_cosets", "a", "b", "c", "kappa_sylow", "kappa_suzuki",
            "spectral_route_agrees", "sylow_matrix_tree_agrees", "kappa_suzuki_decimal"]
    lines = [f"{k}: {payload[k]}" for k in keys if k in payload]
    _emit(args, payload, lines, str(closed))
    return 0


def cmd_decompose(args) -> int:
    G = _group(args.group)
    if args.n < 1 or G.order < 2:
        raise UsageError("needs --n >= 1 and a group of order >= 2")
    dec = find_power_free_decomposition(G, args.n)
    alt = None
    if dec is None:
        alt = find_power_free_decomposition(G, args.n, maximality="per_prime")
    if dec is not None:
        payload = {"status": "FOUND", **dec.to_json(G)}
        lines = [f"group: {G.label}", f"n: {args.n}", "status: FOUND", _fmt_set(G, "C", dec.clique_part)]
        lines += [_fmt_set(G, f"B{i + 1}", b) for i, b in enumerate(dec.blocks)]
        quiet = "FOUND"
    else:
        payload = {
            "status": "NOT_FOUND",
            "group": G.label,
            "n": args.n,
            "per_prime_reading_finds": alt is not None,
        }
        lines = [f"group: {G.label}", f"n: {args.n}", "status: NOT_FOUND",
                 f"per_prime_reading_finds: {alt is not None}"]
        quiet = "NOT_FOUND"
    _emit(args, payload, lines, quiet)
    return 0


def _fmt_set(G, name, s) -> str:
    return f"{name}: " + " ".join(f"{i}(o={int(G.element_orders[i])})" for i in s)


def cmd_verify(args) -> int:
    try:
        items = run_suite(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    passed = sum(ok for _, ok in items)
    failed = len(items) - passed
    payload = {
        "suite": args.suite,
        "passed": passed,
        "failed": failed,
        "failures": [name for name, ok in items if not ok],
    }
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in items if not ok or args.verbose]
    lines.append(f"suite {args.suite}: {passed} passed, {failed} failed")
    _emit(args, payload, lines, f"{passed} {failed}")
    return 0 if failed == 0 else 1


def cmd_census(args) -> int:
    G = _group(args.group)
    census = G.order_census()
    uv = universal_vertices(G)
    inv = involution_set(G)
    payload = {
        "group": G.label,
        "order": G.order,
        "census": {str(k): v for k, v in census.items()},
        "universal": uv.to_json(),
        "involutions": inv,
        "coprime_witness": coprime_witness(G),
    }
    lines = [
        f"group: {G.label}",
        f"order: {G.order}",
        "census: " + " ".join(f"{k}:{v}" for k, v in census.items()),
        f"universal: {' '.join(map(str, uv.universal_set))} ({uv.classification.value})",
        f"involutions: {len(inv)}",
        f"coprime_witness: {' '.join(map(str, payload['coprime_witness']))}",
    ]
    _emit(args, payload, lines, " ".join(f"{k}:{v}" for k, v in census.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="emit a JSON report")
    out.add_argument("--quiet", action="store_true", help="emit only the value")

    parser = argparse.ArgumentParser(prog="grouptrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", parents=[common], help="tree-number of a power or commuting graph")
    p.add_argument("--graph", choices=["power", "commuting"], required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--subset", choices=["all", "nonidentity"], default="all")
    p.add_argument("--method", choices=["bareiss", "modular"], default="bareiss")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("spectrum", parents=[common], help="Laplacian spectrum of a graph expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("suzuki", parents=[common], help="commuting-graph tree-numbers for Sz(2^(2n+1))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-sylow", action="store_true")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_suzuki)

    p = sub.add_parser("decompose", parents=[common], help="search for an n-power-free decomposition")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="element orders and power-graph landmarks")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CayleyTableError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
