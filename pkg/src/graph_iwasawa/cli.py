"""Command-line front end.

Subcommands: tower, kappa, zeta, cover-verify, export-dot.  All output is
deterministic: identical invocations produce identical bytes, with or
without --parallel.  Exit codes: 0 success (tower: full fit verified),
1 invalid input, 2 verification or internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serre, towers, voltage, zeta
from .polys import BudgetExceededError, format_poly, poly_to_json
from .serre import DisconnectedGraphError

ENV_BUDGET = "GRAPH_IWASAWA_BUDGET_BITS"

TRIAL_DIVISION_BOUND = 10 ** 6


def _trial_factor(n: int) -> list[tuple[int, int]] | None:
    """Factor by trial division up to 10^6; None if that cannot finish it."""
    if n < 1:
        return None
    if n == 1:
        return []
    out = []
    rem = n
    for p in _small_primes():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out.append((p, e))
    if rem == 1:
        return out
    if rem < TRIAL_DIVISION_BOUND ** 2:
        out.append((rem, 1))  # no factor below 10^6, so rem is prime
        return out
    return None


_SMALL_PRIMES: list[int] = []


def _small_primes() -> list[int]:
    if not _SMALL_PRIMES:
        sieve = bytearray([1]) * TRIAL_DIVISION_BOUND
        sieve[0:2] = b"\x00\x00"
        for i in range(2, int(TRIAL_DIVISION_BOUND ** 0.5) + 1):
            if sieve[i]:
                sieve[i * i::i] = b"\x00" * len(sieve[i * i::i])
        _SMALL_PRIMES.extend(i for i in range(TRIAL_DIVISION_BOUND) if sieve[i])
    return _SMALL_PRIMES


def _format_kappa(n: int) -> str:
    fac = _trial_factor(n)
    if fac is None:
        return str(n)
    if not fac:
        return "1"
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fac)


def _parse_generators(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad generator list {text!r}") from exc


def _budget(args) -> int:
    budget = args.budget_bits
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        budget = int(env)
    return budget


def _spec(args) -> towers.TowerSpec:
    return towers.TowerSpec(args.prime, _parse_generators(args.generators))


def cmd_tower(args) -> int:
    spec = _spec(args)
    report = towers.build_tower_report(spec, args.levels,
                                       parallel=args.parallel,
                                       budget_bits=_budget(args))
    if args.format == "json":
        sys.stdout.write(json.dumps(towers.report_to_json(report), indent=2))
        sys.stdout.write("\n")
    elif args.format == "csv":
        sys.stdout.write(towers.report_to_csv(report))
    else:
        inv = report.invariants
        print(f"tower: l={spec.ell} a={','.join(map(str, spec.generators))} "
              f"t={spec.t} q={spec.q}")
        print(f"Q(T) = {format_poly(report.q_coeffs, 'T')}")
        if inv.cycle_case:
            print("cycle case: chi = 0, kappa_n = l^n exactly")
        print(f"invariants: mu={inv.mu} lambda={inv.lam} nu={inv.nu} "
              f"n0_certified={inv.n0_certified} n0_observed={inv.n0_observed}")
        print(f"{'n':>3} {'ord':>6} {'v_n':>6} {'fit':>5}  kappa_n")
        for rec in report.levels:
            v = "-" if rec.v is None else str(rec.v)
            fit = "yes" if rec.fit else "no"
            print(f"{rec.n:>3} {rec.ord_kappa:>6} {v:>6} {fit:>5}  "
                  f"{_format_kappa(rec.kappa)}")
        print(f"consistency: {'OK' if report.consistency_ok else 'FAILED'}")
        print(f"fit for n >= {inv.n0_observed}: "
              f"{'OK' if report.fit_ok else 'FAILED'}")
    return 0 if (report.consistency_ok and report.fit_ok) else 2


def cmd_kappa(args) -> int:
    spec = _spec(args)
    kappa = towers.kappa_exact(spec, args.levels, budget_bits=_budget(args))
    if args.format == "json":
        sys.stdout.write(json.dumps(
            {"prime": str(spec.ell),
             "generators": [str(a) for a in spec.generators],
             "n": str(args.levels), "kappa": str(kappa)}, indent=2))
        sys.stdout.write("\n")
    else:
        factored = _format_kappa(kappa)
        if factored != str(kappa):
            print(f"kappa_{args.levels} = {kappa} = {factored}")
        else:
            print(f"kappa_{args.levels} = {kappa}")
    return 0


def cmd_zeta(args) -> int:
    with open(args.graph_file, encoding="utf-8") as fh:
        graph = serre.multigraph_from_json(json.load(fh))
    serre.require_valid(graph)
    exponent, h = zeta.ihara_Z(graph)
    kappa = serre.spanning_tree_count(graph, cap=args.cap_vertices)
    if args.format == "json":
        sys.stdout.write(json.dumps(
            {"h": poly_to_json(h), "z_exponent": str(exponent),
             "kappa": str(kappa)}, indent=2))
        sys.stdout.write("\n")
    else:
        print(f"h(u) = {format_poly(h)}")
        print(f"Z(u) = (1 - u^2)^{exponent} * h(u)")
        print(f"kappa = {kappa}")
    return 0


def cmd_cover_verify(args) -> int:
    with open(args.voltage_file, encoding="utf-8") as fh:
        vg = voltage.voltage_from_json(json.load(fh))
    problems = voltage.validate_voltage(vg)
    if problems:
        raise ValueError("invalid voltage graph: " + "; ".join(problems))
    product = voltage.verify_product_formula(vg)
    chi = serre.euler_characteristic(vg.base)
    decomposition = (voltage.verify_integer_decomposition(
        vg, cap=args.cap_vertices) if chi != 0 else None)
    ok = product.ok and (decomposition is None or decomposition.ok)
    if args.format == "json":
        payload = {
            "product_formula": product.ok,
            "cover_h": poly_to_json(product.cover_h),
            "orbit_product": poly_to_json(product.orbit_product),
            "integer_decomposition":
                None if decomposition is None else decomposition.ok,
        }
        sys.stdout.write(json.dumps(payload, indent=2))
        sys.stdout.write("\n")
    else:
        print(f"product formula: {'PASS' if product.ok else 'FAIL'}")
        if not product.ok:
            print(f"  cover h:  {format_poly(product.cover_h)}")
            print(f"  product:  {format_poly(product.orbit_product)}")
        if decomposition is None:
            print("integer decomposition: skipped (chi = 0)")
        else:
            print("integer decomposition: "
                  f"{'PASS' if decomposition.ok else 'FAIL'}")
    return 0 if ok else 2


def cmd_export_dot(args) -> int:
    spec = _spec(args)
    vg = voltage.cayley_serre(spec.ell ** args.levels, spec.generators)
    cover = voltage.derived_cover(vg)
    sys.stdout.write(serre.to_dot(cover, name=f"cover_level_{args.levels}"))
    return 0


def _add_tower_flags(p: argparse.ArgumentParser, levels_required=True) -> None:
    p.add_argument("-l", "--prime", type=int, required=True)
    p.add_argument("-a", "--generators", type=str, required=True,
                   help="comma-separated integers, negatives allowed")
    p.add_argument("-n", "--levels", type=int,
                   required=levels_required, default=0)


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default="text")
    p.add_argument("--cap-vertices", type=int, default=serre.DEFAULT_VERTEX_CAP)
    p.add_argument("--budget-bits", type=int,
                   default=towers.DEFAULT_BUDGET_BITS)
    p.add_argument("--parallel", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="graph-iwasawa",
        description="Exact towers of circulant covers: spanning trees, zeta "
                    "polynomials, and Iwasawa-type invariants.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tower", help="full per-level table and invariants")
    _add_tower_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("kappa", help="a single spanning-tree count")
    _add_tower_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("zeta", help="zeta polynomial of a multigraph file")
    p.add_argument("graph_file")
    _add_common_flags(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("cover-verify",
                       help="check factorization identities for a voltage "
                            "graph file")
    p.add_argument("voltage_file")
    _add_common_flags(p)
    p.set_defaults(func=cmd_cover_verify)

    p = sub.add_parser("export-dot", help="DOT of the level-n cover")
    _add_tower_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_export_dot)

    return top


def _fold_generator_flag(argv: list[str]) -> list[str]:
    # keep "-a -3,5" parseable: argparse would read "-3,5" as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("-a", "--generators") and i + 1 < len(argv):
            out.append(f"--generators={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_fold_generator_flag(list(argv)))
    try:
        return args.func(args)
    except (ValueError, DisconnectedGraphError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
