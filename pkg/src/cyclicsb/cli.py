"""Command-line front end.

Four commands: verify-cocycle (exhaustive 2-cocycle test of a standard or
file-supplied table), roquette (the full construction pipeline with an
optional JSON certificate), sweep (the pipeline over a range of (s, ell)
pairs), and crossed (algebra-level checks over a cyclotomic field).

Exit codes: 0 all verdicts pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .cocycles import Cocycle2, check_2cocycle, standard_cyclic_cocycle
from .crossed import associativity_check, center_dimension, splitting_check
from .pipeline import (
    cyclotomic_spec,
    run_pipeline,
    solve_beta,
    symbolic_spec,
    write_certificate,
)
from .scalars import (
    CyclotomicElement,
    GaloisAutomorphism,
    SymbolicScalar,
    SymbolicShift,
    euler_phi,
)

_TOKEN = re.compile(
    r"^(?:(?P<coeff>-?\d+(?:/\d+)?)\s*\*?\s*)?(?:gamma(?:\^(?P<power>-?\d+))?)?$")


def parse_scalar_token(text: str) -> SymbolicScalar:
    """Parse a table entry: a rational, gamma, gamma^k, or rational*gamma^k."""
    text = text.strip()
    match = _TOKEN.match(text)
    if not match or not text:
        raise ValueError(f"cannot parse scalar {text!r}")
    coeff = Fraction(match.group("coeff")) if match.group("coeff") else Fraction(1)
    value = SymbolicScalar.unit(coeff)
    if "gamma" in text:
        power = int(match.group("power")) if match.group("power") else 1
        value = value * SymbolicScalar.symbol("gamma") ** power
    return value


def load_cocycle_table(path: str) -> Cocycle2:
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    entries = data["entries"]
    s = len(entries)
    if "s" in data and data["s"] != s:
        raise ValueError(f"declared s={data['s']} but table has {s} rows")
    rows = [[parse_scalar_token(str(token)) for token in row] for row in entries]
    return Cocycle2.from_rows(rows, SymbolicShift(s))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicsb",
        description="Exact verification of cyclic algebras and the birational "
                    "maps between their twisted projective spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify-cocycle", help="exhaustively check the 2-cocycle condition")
    p_verify.add_argument("--s", type=_positive, help="group order")
    p_verify.add_argument("--gamma", default="symbolic",
                          help="'symbolic' or a rational literal")
    p_verify.add_argument("--table", help="JSON file with an explicit table")

    p_roq = sub.add_parser(
        "roquette", help="run the construction pipeline for one (s, ell)")
    p_roq.add_argument("--s", type=_positive, required=True)
    p_roq.add_argument("--ell", type=_positive, required=True)
    p_roq.add_argument("--backend", choices=("symbolic", "cyclotomic"),
                       default="symbolic")
    p_roq.add_argument("--gamma", default="symbolic")
    p_roq.add_argument("--conductor", type=_positive)
    p_roq.add_argument("--generator", type=int)
    p_roq.add_argument("--out", help="write the certificate (JSON) here")

    p_sweep = sub.add_parser(
        "sweep", help="run the pipeline over all 2 <= s <= max-s")
    p_sweep.add_argument("--max-s", type=_positive, required=True)
    p_sweep.add_argument("--include-noncoprime", action="store_true",
                         help="also run pairs with gcd(ell, s) > 1")

    p_crossed = sub.add_parser(
        "crossed", help="algebra checks over a cyclotomic field")
    p_crossed.add_argument("--conductor", type=_positive, required=True)
    p_crossed.add_argument("--generator", type=int,
                           help="exponent generating the unit group "
                                "(default: smallest)")
    p_crossed.add_argument("--gamma", default="-1",
                           help="rational parameter of the cyclic algebra")
    return parser


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_verify_cocycle(args) -> int:
    if args.table:
        try:
            alpha = load_cocycle_table(args.table)
        except (OSError, ValueError, KeyError) as err:
            return _fail_usage(f"cannot load table: {err}")
        label = f"table from {args.table} (s={alpha.order})"
    else:
        if args.s is None:
            return _fail_usage("need --s or --table")
        if args.gamma == "symbolic":
            gamma = SymbolicScalar.symbol("gamma")
        else:
            try:
                gamma = SymbolicScalar.unit(Fraction(args.gamma))
            except (ValueError, ZeroDivisionError) as err:
                return _fail_usage(f"bad gamma: {err}")
        alpha = standard_cyclic_cocycle(args.s, gamma, SymbolicShift(args.s))
        label = f"standard cyclic table (s={args.s}, gamma={args.gamma})"
    result = check_2cocycle(alpha)
    if result.ok:
        print(f"{label}: pass")
        return 0
    a, b, c = result.witness
    print(f"{label}: fail")
    print(f"witness (g, h, f) = (sigma^{a}, sigma^{b}, sigma^{c})")
    return 1


def _make_spec(args):
    if args.backend == "symbolic":
        gamma = None if args.gamma == "symbolic" else Fraction(args.gamma)
        return symbolic_spec(args.s, args.ell, gamma)
    if args.conductor is None or args.generator is None:
        raise ValueError("cyclotomic backend needs --conductor and --generator")
    if args.gamma == "symbolic":
        raise ValueError("cyclotomic backend needs a rational --gamma")
    return cyclotomic_spec(args.s, args.ell, args.conductor, args.generator,
                           Fraction(args.gamma))


def cmd_roquette(args) -> int:
    try:
        spec = _make_spec(args)
    except (ValueError, ZeroDivisionError) as err:
        return _fail_usage(str(err))
    result = run_pipeline(spec)
    for record in result.stages:
        print(f"  {record.name}: {'pass' if record.passed else 'fail'}")
    if result.ok:
        print(f"verdict: pass (s={spec.s}, ell={spec.ell})")
        print(f"beta gamma-exponents: {list(result.beta.gamma_exponents)}")
        print(f"lattice determinant: {result.lattice.determinant}")
    else:
        witness = result.witness
        detail = f"det={witness}" if result.stage == "lattice_certificate" \
            else repr(witness)
        print(f"verdict: fail at {result.stage} ({detail})")
    if args.out:
        write_certificate(result, args.out)
        print(f"certificate written to {args.out}")
    return 0 if result.ok else 1


def cmd_sweep(args) -> int:
    print("s   ell beta                      verdict")
    all_pass = True
    for s in range(2, args.max_s + 1):
        for ell in range(1, s):
            coprime = math.gcd(ell, s) == 1
            if not coprime and not args.include_noncoprime:
                continue
            spec = symbolic_spec(s, ell)
            beta = solve_beta(spec)
            result = run_pipeline(spec)
            if result.ok:
                verdict = "pass"
            elif result.stage == "lattice_certificate":
                verdict = "not-birational"
            else:
                verdict = f"fail({result.stage})"
            all_pass = all_pass and result.ok
            exponents = ",".join(str(e) for e in beta.gamma_exponents)
            print(f"{s:<3} {ell:<3} [{exponents}]".ljust(34) + f" {verdict}")
    return 0 if all_pass else 1


def _smallest_generator(conductor: int) -> int:
    target = euler_phi(conductor)
    for g in range(1, conductor + 1):
        if math.gcd(g, conductor) != 1:
            continue
        order, acc = 1, g % conductor
        while acc != 1 % conductor:
            acc = (acc * g) % conductor
            order += 1
        if order == target:
            return g
    raise ValueError(f"the unit group modulo {conductor} is not cyclic")


def cmd_crossed(args) -> int:
    n = args.conductor
    try:
        generator = args.generator if args.generator is not None \
            else _smallest_generator(n)
        sigma = GaloisAutomorphism(n, generator)
        if sigma.order() != euler_phi(n):
            raise ValueError(
                f"{generator} does not generate the unit group modulo {n}")
        gamma = CyclotomicElement.from_rational(n, Fraction(args.gamma))
        if not gamma:
            raise ValueError("gamma must be nonzero")
    except (ValueError, ZeroDivisionError) as err:
        return _fail_usage(str(err))
    s = sigma.order()
    alpha = standard_cyclic_cocycle(s, gamma, sigma)
    print(f"K = Q(zeta_{n}), s = {s}, gamma = {args.gamma}")
    print(f"dimension over Q: {s * euler_phi(n)}")
    cocycle = check_2cocycle(alpha)
    print(f"cocycle check: {'pass' if cocycle.ok else 'fail'}")
    assoc = associativity_check(alpha, sigma)
    print(f"associativity (basis triples): {'pass' if assoc.ok else 'fail'}")
    center = center_dimension(alpha, sigma)
    print(f"center dimension: {center}")
    split = splitting_check(alpha, sigma)
    print(f"splitting rank: {split.rank} of {s * s}"
          f" ({'full' if split.ok else 'deficient'})")
    ok = cocycle.ok and assoc.ok and center == 1 and split.ok
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    handlers = {
        "verify-cocycle": cmd_verify_cocycle,
        "roquette": cmd_roquette,
        "sweep": cmd_sweep,
        "crossed": cmd_crossed,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
