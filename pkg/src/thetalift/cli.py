"""Command-line entry point: ``thetalift <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exponents as ex
from .checks import SUITES, Check, run_suite
from .cocycle import COCYCLE_CONVENTION, hilbert_tame, mu_r_generator
from .orbits import (
    DIMENSION_CONVENTIONS,
    dimension_equation,
    dual_group,
    gk_dim,
    is_symplectic_partition,
    o_c,
    orbit_dim,
)
from .scalars import is_prime, primitive_root

DEFAULT_P = 7
DEFAULT_R = 3
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _plain(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def conventions(p: int | None) -> dict:
    out = {"cocycle": COCYCLE_CONVENTION, "dimensions": dict(DIMENSION_CONVENTIONS),
           "gk_dim": "half the orbit dimension",
           "mu_r": "zeta = g^((p-1)/r) mod p, g the smallest primitive root"}
    if p is not None and is_prime(p):
        out["primitive_root"] = primitive_root(p)
    return out


def make_report(command: str, params: dict, checks: list[Check], seed: int | None,
                results: dict | None = None, p: int = DEFAULT_P) -> dict:
    rep = {
        "command": command,
        "params": _plain(params),
        "conventions": conventions(p),
        "checks": [c.as_dict() for c in sorted(checks, key=lambda c: c.name)],
        "seed": seed,
    }
    if results is not None:
        rep["results"] = _plain(results)
    return rep


def _check(name: str, ok: bool, witness: dict | None = None) -> Check:
    return Check(name, "pass" if ok else "fail", None if ok else _plain(witness or {}), 1)


def _odd_r(r: int):
    if r < 3 or r % 2 == 0:
        raise UsageError(f"r must be odd and > 1, got {r}")


def _prime(p: int):
    if p == 2 or not is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")


def cmd_orbit(r: int, twol: int, seed: int = DEFAULT_SEED) -> dict:
    _odd_r(r)
    if twol % 2 or twol < 0:
        raise UsageError(f"2l must be even and non-negative, got {twol}")
    lam = o_c(r, twol)
    res = {"partition": list(lam.parts), "orbit_dim": orbit_dim(lam, twol),
           "gk_dim": gk_dim(lam, twol)}
    checks = [_check("orbit.symplectic_partition", is_symplectic_partition(lam.parts, twol),
                     {"r": r, "2l": twol, "partition": list(lam.parts)})]
    return make_report("orbit", {"r": r, "twol": twol}, checks, seed, res)


def cmd_dimeq(r: int, k: int, seed: int = DEFAULT_SEED) -> dict:
    _odd_r(r)
    if k < 1:
        raise UsageError("k must be positive")
    n = k // 2
    lhs, rhs = dimension_equation(r, k, n)
    checks = [_check("dimeq.sides_equal", lhs == rhs, {"r": r, "k": k, "n": n,
                                                       "lhs": lhs, "rhs": rhs})]
    return make_report("dimeq", {"r": r, "k": k, "n": n}, checks, seed,
                       {"lhs": lhs, "rhs": rhs})


def cmd_exponents(r: int, k: int, n: int, seed: int = DEFAULT_SEED) -> dict:
    _odd_r(r)
    if k < 2 or n < 1:
        raise UsageError("need k >= 2 and n >= 1")
    ledger, target = ex.ledger_sum(r, k, n), ex.ledger_target(r, k, n)
    borel = ex.borel_exponent(r, k, n)
    a, b = ex.delta_product_exponents(k, n)
    want = 1 - Fraction(k, 2) + n
    sols = ex.theta_exponent_solutions(r, 200)
    echo = {"r": r, "k": k, "n": n}
    checks = [
        _check("exponents.ledger_identity", ledger == target, {**echo, "ledger": ledger,
                                                                "target": target}),
        _check("exponents.borel_exponent", borel == -target, {**echo, "borel": borel,
                                                               "target": -target}),
        _check("exponents.delta_product", (a, b) == (want, -want), {**echo, "a": a, "b": b,
                                                                     "target": want}),
        _check("exponents.theta_equation_solutions", sols == [r - 1], {"r": r,
                                                                       "solutions": sols}),
    ]
    res = {"ledger": ledger, "target": target, "borel_exponent": borel,
           "delta_exponent_a": a, "delta_exponent_b": b, "theta_equation_solutions": sols}
    return make_report("exponents", echo, checks, seed, res)


def cmd_verify(suite: str, p: int = DEFAULT_P, seed: int = DEFAULT_SEED,
               iters: int | None = None) -> dict:
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    _prime(p)
    if suite in ("all", "cocycle") and (p - 1) % DEFAULT_R:
        raise UsageError(f"cocycle checks need {DEFAULT_R} | p - 1, got p = {p}")
    if iters is not None and iters < 1:
        raise UsageError("iters must be positive")
    checks = run_suite(suite, p=p, seed=seed, iters=iters)
    return make_report("verify", {"suite": suite, "p": p, "iters": iters}, checks, seed, p=p)


def cmd_cocycle(p: int, r: int, a, b, seed: int = DEFAULT_SEED) -> dict:
    _prime(p)
    if r < 1 or (p - 1) % r:
        raise UsageError(f"need r | p - 1 for a tame symbol, got p = {p}, r = {r}")
    try:
        a, b = Fraction(a), Fraction(b)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"a and b must be nonzero rationals: {e}") from None
    if a == 0 or b == 0:
        raise UsageError("a and b must be nonzero")
    sym = hilbert_tame(a, b, p, r)
    zeta = mu_r_generator(p, r)
    value = pow(zeta, sym.exponent, p)
    anti = hilbert_tame(b, a, p, r)
    checks = [_check("cocycle.symbol_antisymmetric", (sym * anti).is_identity(),
                     {"p": p, "r": r, "a": a, "b": b})]
    res = {"exponent": sym.exponent, "zeta": zeta, "value_mod_p": value}
    return make_report("cocycle", {"p": p, "r": r, "a": a, "b": b}, checks, seed, res, p=p)


def cmd_dualgroup(family: str, size: int, r: int, seed: int = DEFAULT_SEED) -> dict:
    try:
        d = dual_group(family, size, r)
    except ValueError as e:
        raise UsageError(str(e)) from None
    checks = [_check("dualgroup.descriptor", True)]
    return make_report("dualgroup", {"family": family, "size": size, "r": r}, checks, seed,
                       {"dual_group": str(d)})


def render_text(rep: dict) -> str:
    lines = [f"{rep['command']}: " + ", ".join(f"{k}={v}" for k, v in rep["params"].items())]
    for k, v in rep.get("results", {}).items():
        lines.append(f"  {k}: {v}")
    for c in rep["checks"]:
        line = f"  [{c['status']}] {c['name']}"
        if "witness" in c:
            line += "  witness: " + json.dumps(c["witness"], sort_keys=True)
        lines.append(line)
    lines.append(f"  seed: {rep['seed']}")
    return "\n".join(lines)


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False),
                        help="emit one JSON document")
    parser.add_argument("--seed", type=int, default=d(DEFAULT_SEED))
    parser.add_argument("--iters", type=int, default=d(None),
                        help="samples per randomized check")
    parser.add_argument("--p", type=int, default=d(DEFAULT_P), help="odd prime")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thetalift", description=__doc__)
    _global_options(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbit", parents=[common], help="o_c(r, 2l) and its dimensions")
    s.add_argument("r", type=int)
    s.add_argument("twol", type=int)

    s = sub.add_parser("dimeq", parents=[common], help="both sides of the dimension equation")
    s.add_argument("r", type=int)
    s.add_argument("k", type=int)

    s = sub.add_parser("exponents", parents=[common], help="modulus exponent ledgers")
    s.add_argument("r", type=int)
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=("all",) + SUITES)

    s = sub.add_parser("cocycle", parents=[common], help="evaluate the tame Hilbert symbol")
    s.add_argument("--r", type=int, default=DEFAULT_R)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)

    s = sub.add_parser("dualgroup", parents=[common], help="dual group of the r-fold cover")
    s.add_argument("family", choices=("Sp", "SO"))
    s.add_argument("size", type=int, help="2l for Sp, k for SO")
    s.add_argument("r", type=int, nargs="?", default=DEFAULT_R)
    return ap


def run(args: argparse.Namespace) -> dict:
    c = args.command
    if c == "orbit":
        return cmd_orbit(args.r, args.twol, args.seed)
    if c == "dimeq":
        return cmd_dimeq(args.r, args.k, args.seed)
    if c == "exponents":
        return cmd_exponents(args.r, args.k, args.n, args.seed)
    if c == "verify":
        return cmd_verify(args.suite, args.p, args.seed, args.iters)
    if c == "cocycle":
        return cmd_cocycle(args.p, args.r, args.a, args.b, args.seed)
    if c == "dualgroup":
        return cmd_dualgroup(args.family, args.size, args.r, args.seed)
    raise UsageError(f"unknown command {c!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = run(args)
    except UsageError as e:
        print(f"thetalift: error: {e}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rep, sort_keys=True, indent=2))
    else:
        print(render_text(rep))
    return 0 if all(c["status"] != "fail" for c in rep["checks"]) else 1


if __name__ == "__main__":
    sys.exit(main())
