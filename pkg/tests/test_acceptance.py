"""Acceptance criteria 1-12, one pass/fail line each."""

import time
from fractions import Fraction
from functools import lru_cache

import pytest

from thetalift.checks import run_suite
from thetalift.exponents import (
    borel_exponent,
    delta_product_exponents,
    ledger_sum,
    ledger_target,
    theta_exponent_solutions,
)
from thetalift.orbits import OrbitComparison, dominance, dimension_equation, o_c
from thetalift.weyl import cusp_block_layout

P, SEED = 7, 0


@lru_cache(maxsize=None)
def suite(name):
    return tuple(run_suite(name, p=P, seed=SEED, iters=None))


def pick(name, *prefixes):
    return [c for c in suite(name) if c.name.startswith(prefixes)]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail="", started=None):
        took = f" ({time.perf_counter() - started:.1f}s)" if started is not None else ""
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}{took}"
        if detail:
            line += f"  [{detail}]"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def failures(checks):
    # witness matrices are left to the CLI report
    short = lambda w: {k: v for k, v in (w or {}).items() if k not in ("u", "v")}
    return "; ".join(f"{c.name}: {short(c.witness)}" for c in checks if not c.passed)


def test_criterion_01_dimension_equation(report):
    t = time.perf_counter()
    bad = [(r, k) for r in (3, 5, 7, 9) for k in range(2, 13)
           if len(set(dimension_equation(r, k, k // 2))) != 1]
    anchors = {(3, 3, 1): 16, (3, 4, 2): 38, (5, 3, 1): 46}
    bad += [rkn for rkn, v in anchors.items() if dimension_equation(*rkn) != (v, v)]
    elapsed = time.perf_counter() - t
    report(1, "dimension equation", not bad and elapsed < 1, f"bad={bad}" if bad else "", t)


def test_criterion_02_ledger_identity(report):
    grid = [(r, k, n) for r in range(3, 14, 2) for k in range(2, 11) for n in range(1, 11)]
    bad = [g for g in grid if ledger_sum(*g) != ledger_target(*g)]
    report(2, f"ledger identity on {len(grid)} triples", not bad, str(bad[:3]) if bad else "")


def test_criterion_03_borel_exponent(report):
    grid = [(r, k, n) for r in range(3, 14, 2) for k in range(2, 11) for n in range(1, 11)]
    bad = [g for g in grid
           if borel_exponent(*g) != -((g[0] - 1) // 2) * (2 * g[2] + (g[1] - 1) * (g[0] - 1))]
    report(3, "Borel modulus exponent", not bad, str(bad[:3]) if bad else "")


def test_criterion_04_delta_product(report):
    bad = [(k, n) for k in range(2, 11) for n in range(1, 11)
           if delta_product_exponents(k, n)[0] != 1 - Fraction(k, 2) + n]
    report(4, "delta-product exponent 1-k/2+n", not bad, str(bad[:3]) if bad else "")


def test_criterion_05_theta_exponent_equation(report):
    bad = [r for r in range(3, 14, 2) if theta_exponent_solutions(r, 200) != [r - 1]]
    report(5, "solutions of l(l+1)(r-1)/(2r) = l^2/2 are {r-1}", not bad, str(bad) if bad else "")


def test_criterion_06_o_c_bookkeeping(report):
    checks = pick("orbits", "orbits.o_c_")
    anchors = o_c(3, 4).parts == (2, 2) and o_c(5, 4).parts == (4,)
    ok = anchors and all(c.passed for c in checks)
    report(6, "o_c valid for r <= 13, 2l <= 60, anchors (2,2) and (4)", ok, failures(checks))


def test_criterion_07_orbit_dimension_oracle(report):
    t = time.perf_counter()
    checks = pick("orbits", "orbits.orbit_dim_oracle")
    ok = all(c.passed for c in checks) and checks[0].samples >= 90
    report(7, f"orbit dimension formula vs centralizer on {checks[0].samples} partitions",
           ok and time.perf_counter() - t < 30, failures(checks), t)


def test_criterion_08_hook_incomparability(report):
    instance = dominance((8, 1, 1, 1, 1), (3, 3, 3, 3)) is OrbitComparison.INCOMPARABLE
    checks = pick("orbits", "orbits.hook_incomparable_grid", "orbits.hook_instance")
    ok = instance and all(c.passed for c in checks)
    report(8, "hook orbit incomparable with o_c (instance + grid m >= r)", ok, failures(checks))


def test_criterion_09_cocycle_suite(report):
    t = time.perf_counter()
    checks = pick("cocycle", "cocycle.two_cocycle_identity", "cocycle.block_compatibility",
                  "cocycle.trivial_on_rth_powers", "cocycle.hilbert_")
    sizes = {c.name: c.samples for c in checks}
    ok = (all(c.passed for c in checks) and sizes["cocycle.two_cocycle_identity"] >= 1000
          and sizes["cocycle.block_compatibility"] >= 200
          and sizes["cocycle.hilbert_bilinear_antisymmetric"] >= 500
          and sizes["cocycle.hilbert_steinberg"] >= 500)
    report(9, "cocycle suite (p=7, r=3)", ok, failures(checks), t)


def test_criterion_10_embedding_suite(report):
    t = time.perf_counter()
    checks = suite("embed")
    ok = all(c.passed for c in checks) and len(checks) >= 15
    report(10, f"embedding suite ({len(checks)} checks)", ok, failures(checks), t)


def test_criterion_11_heisenberg_suite(report):
    t = time.perf_counter()
    checks = suite("heisenberg")
    ok = all(c.passed for c in checks)
    report(11, "Heisenberg suite incl. l_map homomorphism", ok, failures(checks), t)


def test_criterion_12_weyl_suite(report):
    t = time.perf_counter()
    checks = suite("weyl")
    layout = cusp_block_layout(2, 1, 7, 1) == (
        {(1, 1), (2, 4), (3, 7), (7, 2), (8, 5), (9, 8)}, {(4, 1), (5, 4), (6, 7)})
    fills = [c for c in checks if "shortest_conjugator_fill" in c.name]
    ok = layout and all(c.passed for c in checks) and fills and all(c.samples >= 50 for c in fills)
    report(12, "Weyl suite (r=7 cusp layout, symplectic, conjugator fills)", ok,
           failures(checks), t)
