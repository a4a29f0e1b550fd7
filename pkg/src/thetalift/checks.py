"""Randomized and exhaustive verification suites returning check records."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import exponents as ex
from .cocycle import (
    TorusElement,
    block_compat_check,
    hilbert_quadratic,
    hilbert_tame,
    random_padic,
    random_torus,
    torus_cocycle,
)
from .embed import (
    iota1,
    iota1_standard,
    iota2,
    l_map,
    l_map_defect,
    stabilizes_psi,
    tensor_form,
)
from .groups import (
    GroupElement,
    WeylElement,
    heisenberg_mul,
    is_symplectic,
    random_heisenberg,
    random_scalar,
    random_so,
    random_sp,
    symplectic_form,
    tau_embed,
    tau_inverse,
)
from .matrix import Matrix
from .orbits import (
    OrbitComparison,
    dimension_equation,
    dominance,
    hook_partition,
    hook_vs_oc,
    is_symplectic_partition,
    o_c,
    oracle_table,
    symplectic_partitions,
)
from .scalars import GF, QQ, MuR, PrimeFieldElement, is_prime, unit_part, val_p
from .unipotent import (
    UabcShape,
    factorize,
    psi_U,
    random_matrix,
    random_mat0,
    random_U,
    u_coordinate,
    u_prime,
)
from .weyl import (
    brute_force_min_inversions,
    cusp_block_layout,
    cusp_placements,
    shortest_conjugator,
    unramified_patterns,
    weyl_cusp,
    weyl_hook_exchange,
    weyl_theta02,
    weyl_theta03,
)

SUITES = ("embed", "heisenberg", "characters", "weyl", "cocycle", "orbits", "exponents")

# block layout of w_1 and w_2 at r = 7, as (block row, block col)
CUSP_LAYOUT_R7 = (
    {(1, 1), (2, 4), (3, 7), (7, 2), (8, 5), (9, 8)},
    {(4, 1), (5, 4), (6, 7)},
)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict | None = None
    samples: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _show(x):
    if isinstance(x, (list, tuple)):
        return [_show(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _show(v) for k, v in x.items()}
    if isinstance(x, Matrix):
        return [[str(v) for v in row] for row in x.tolist()]
    if isinstance(x, GroupElement):
        return _show(x.matrix)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def sweep(name: str, count: int, seed: int, trial: Callable[[random.Random, int], dict | None],
          **echo) -> Check:
    """Run trial(rng, i) for i < count; the first non-None return is the witness."""
    rng = random.Random(f"{seed}:{name}")
    for i in range(count):
        bad = trial(rng, i)
        if bad is not None:
            w = {"seed": seed, "sample": i, **echo, **bad}
            return Check(name, "fail", _show(w), i + 1)
    return Check(name, "pass", None, count)


def exhaustive(name: str, cases: Iterable, test: Callable[..., dict | None], **echo) -> Check:
    n = 0
    for case in cases:
        n += 1
        bad = test(case)
        if bad is not None:
            return Check(name, "fail", _show({**echo, "case": case, **bad}), n)
    return Check(name, "pass", None, n)


def _n(iters: int | None, default: int) -> int:
    return default if iters is None else iters


def _field(p: int):
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    return GF(p)


# embeddings

EMBED_PARAMS = ((3, 1, 3), (4, 2, 3), (3, 1, 5))


def suite_embed(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    f = _field(p)
    out = []
    for k, n, r in EMBED_PARAMS:
        tag = f"k{k}_n{n}_r{r}"

        def pair(rng):
            return (random_so(rng, k, f), random_sp(rng, 2 * n, f),
                    random_so(rng, k, f), random_sp(rng, 2 * n, f))

        def iota1_hom(rng, i):
            h1, g1, h2, g2 = pair(rng)
            lhs = iota1(h1 @ h2, g1 @ g2).matrix
            rhs = iota1(h1, g1).matrix @ iota1(h2, g2).matrix
            if lhs != rhs:
                return {"h1": h1, "g1": g1, "h2": h2, "g2": g2}

        def iota1_form(rng, i):
            h, g, _, _ = pair(rng)
            M = iota1(h, g).matrix
            if not is_symplectic(M, k * 2 * n, tensor_form(k, n, f)):
                return {"h": h, "g": g, "form": "tensor"}
            if not is_symplectic(iota1_standard(h, g).matrix, 2 * n * k):
                return {"h": h, "g": g, "form": "antidiagonal"}

        def iota1_commute(rng, i):
            h, g, _, _ = pair(rng)
            one_h = GroupElement.identity("SO", k, f)
            one_g = GroupElement.identity("Sp", 2 * n, f)
            a, b = iota1(h, one_g).matrix, iota1(one_h, g).matrix
            if a @ b != b @ a:
                return {"h": h, "g": g}

        def iota2_hom(rng, i):
            h1, g1, h2, g2 = pair(rng)
            lhs = iota2(h1 @ h2, g1 @ g2, r)
            rhs = iota2(h1, g1, r) @ iota2(h2, g2, r)
            if lhs.matrix != rhs.matrix:
                return {"h1": h1, "g1": g1, "h2": h2, "g2": g2}
            if not is_symplectic(lhs.matrix, lhs.size):
                return {"h1h2": h1 @ h2, "g1g2": g1 @ g2, "reason": "image not symplectic"}

        def iota2_commute(rng, i):
            h, g, _, _ = pair(rng)
            a = iota2(h, GroupElement.identity("Sp", 2 * n, f), r).matrix
            b = iota2(GroupElement.identity("SO", k, f), g, r).matrix
            if a @ b != b @ a:
                return {"h": h, "g": g}

        def stabilizer(rng, i):
            h, g, _, _ = pair(rng)
            if not stabilizes_psi(h, g, r, p):
                return {"h": h, "g": g}

        echo = {"p": p, "k": k, "n": n, "r": r}
        out += [
            sweep(f"embed.iota1_homomorphism.{tag}", _n(iters, 200), seed, iota1_hom, **echo),
            sweep(f"embed.iota1_preserves_form.{tag}", _n(iters, 200), seed, iota1_form, **echo),
            sweep(f"embed.iota1_factors_commute.{tag}", _n(iters, 200), seed, iota1_commute, **echo),
            sweep(f"embed.iota2_homomorphism.{tag}", _n(iters, 200), seed, iota2_hom, **echo),
            sweep(f"embed.iota2_factors_commute.{tag}", _n(iters, 200), seed, iota2_commute, **echo),
            sweep(f"embed.psi_stabilized_by_iota2.{tag}", _n(iters, 100), seed, stabilizer, **echo),
        ]
    return out


# Heisenberg group, tau and l

L_MAP_SHAPES = ((2, 1, 1), (2, 1, 2), (3, 1, 1), (3, 2, 1))


def random_u_prime(rng: random.Random, shape: UabcShape, f) -> GroupElement:
    Y = random_matrix(rng, shape.a, 2 * shape.c, f)
    return u_prime(shape, Y, random_mat0(rng, shape.a, f), f)


def suite_heisenberg(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    f = _field(p)
    out = []

    def assoc(rng, i):
        l = rng.randint(1, 3)
        u, v, w = (random_heisenberg(rng, l, f) for _ in range(3))
        if (u @ v) @ w != u @ (v @ w):
            return {"u": u, "v": v, "w": w}

    def tau_hom(rng, i):
        l = rng.randint(1, 3)
        u, v = random_heisenberg(rng, l, f), random_heisenberg(rng, l, f)
        tu, tv = tau_embed(u), tau_embed(v)
        if not is_symplectic(tu.matrix, tu.size):
            return {"u": u, "reason": "tau(u) not symplectic"}
        if tu.matrix @ tv.matrix != tau_embed(u @ v).matrix:
            return {"u": u, "v": v}
        if tau_inverse(tu) != u:
            return {"u": u, "reason": "tau not injective on sample"}

    out.append(sweep("heisenberg.mul_associative", _n(iters, 500), seed, assoc, p=p))
    out.append(sweep("heisenberg.tau_homomorphism", _n(iters, 200), seed, tau_hom, p=p))

    for a, b, c in L_MAP_SHAPES:
        shape = UabcShape(a, b, c)
        tag = f"a{a}_b{b}_c{c}"

        def hom(rng, i, shape=shape):
            u, v = random_u_prime(rng, shape, f), random_u_prime(rng, shape, f)
            d = l_map_defect(u, v, shape)
            if d != 0:
                return {"u": u, "v": v, "l(uv)": l_map(u @ v, shape),
                        "l(u)l(v)": l_map(u, shape) @ l_map(v, shape), "z_defect": d}

        def center(rng, i, shape=shape):
            Z = random_mat0(rng, shape.a, f)
            u = u_prime(shape, Matrix.zeros(shape.a, 2 * shape.c, f), Z, f)
            if not l_map(u, shape).is_central():
                return {"Z": Z}

        out.append(sweep(f"heisenberg.l_map_homomorphism.{tag}", _n(iters, 500), seed, hom, p=p))
        out.append(sweep(f"heisenberg.l_map_center_to_center.{tag}", _n(iters, 100), seed,
                         center, p=p))
    return out


# unipotent subgroups and their characters

CHAR_SHAPES = [(a, b, c) for a in (1, 2, 3) for b in (1, 2, 3) for c in (0, 1, 2)]


def suite_characters(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    f = _field(p)
    out = []
    for a, b, c in CHAR_SHAPES:
        shape = UabcShape(a, b, c)
        tag = f"a{a}_b{b}_c{c}"

        def roundtrip(rng, i, shape=shape):
            u = random_U(rng, shape, f)
            if not is_symplectic(u.matrix, u.size):
                return {"u": u, "reason": "not symplectic"}
            if factorize(u, shape).reassemble().matrix != u.matrix:
                return {"u": u}

        def additive(rng, i, shape=shape):
            u, v = random_U(rng, shape, f), random_U(rng, shape, f)
            if psi_U(u @ v, shape) != psi_U(u, shape) + psi_U(v, shape):
                return {"u": u, "v": v}

        out.append(sweep(f"characters.factorize_roundtrip.{tag}", _n(iters, 500) // 10 or 1,
                         seed, roundtrip, p=p))
        out.append(sweep(f"characters.psi_additive.{tag}", _n(iters, 100) // 5 or 1,
                         seed, additive, p=p))
        if b >= 2:
            def coord_group(rng, i, shape=shape):
                j = rng.randint(1, shape.b - 1)
                X = random_matrix(rng, shape.a, shape.a, f)
                X2 = random_matrix(rng, shape.a, shape.a, f)
                lhs = u_coordinate(shape, j, X, f) @ u_coordinate(shape, j, X2, f)
                if lhs.matrix != u_coordinate(shape, j, X + X2, f).matrix:
                    return {"i": j, "X": X, "X2": X2}

            out.append(sweep(f"characters.coordinate_group_additive.{tag}", _n(iters, 100),
                             seed, coord_group, p=p))
    return out


# Weyl elements and symplectic closure

HOOK_EXCHANGE_PARAMS = ((1, 1, 1, 3, 3, 0), (2, 1, 1, 4, 3, 0), (2, 2, 1, 4, 3, 1),
                        (2, 3, 2, 5, 5, 1), (3, 2, 1, 6, 3, 1))

def suite_weyl(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    f = _field(p)
    out = []

    def closure(rng, i):
        two_m = 2 * rng.randint(1, 6)
        A, B = random_sp(rng, two_m, f, steps=2 * two_m), random_sp(rng, two_m, f, steps=2 * two_m)
        if not (is_symplectic(A.matrix, two_m) and is_symplectic(B.matrix, two_m)):
            return {"A": A, "B": B, "reason": "sample not symplectic"}
        if not is_symplectic((A @ B).matrix, two_m):
            return {"A": A, "B": B}

    out.append(sweep("weyl.symplectic_closure", _n(iters, 200), seed, closure, p=p))

    built: list[tuple[str, WeylElement]] = []
    for l in range(1, 7):
        built.append((f"theta03(l={l})", weyl_theta03(l)))
    for r in (3, 5, 7):
        for l in range(0, 4):
            built.append((f"theta02(r={r},l={l})", weyl_theta02(r, l)))
    for r in (3, 5, 7):
        for alpha in (1, 2, 3):
            for beta in (0, 1, 2, 3):
                for n in (1, 2, 3):
                    built.append((f"cusp({alpha},{beta},{r},{n})", weyl_cusp(alpha, beta, r, n)))
    for alpha, l, n, k, r, shift in HOOK_EXCHANGE_PARAMS:
        built.append((f"hook_exchange({alpha},{l},{n},{k},{r},shift={shift})",
                      weyl_hook_exchange(alpha, l, n, k, r, shift=shift)))

    def symplectic(case):
        label, w = case
        if not is_symplectic(w.matrix, w.size):
            return {"element": label}
        Om = symplectic_form(w.size)
        if w.inverse().matrix != (Om.T @ w.matrix.T @ Om):
            return {"element": label, "reason": "inverse is not the form-transpose"}
        if (w.matrix @ w.inverse().matrix) != Matrix.identity(w.size):
            return {"element": label, "reason": "transpose is not the inverse"}

    out.append(exhaustive("weyl.constructed_elements_symplectic", built, symplectic))

    def no_overlap(case):
        alpha, beta, r, n = case
        rows, cols = set(), set()
        for row, col, _ in cusp_placements(alpha, beta, r, n):
            if row in rows or col in cols:
                return {"row": row, "col": col}
            rows.add(row)
            cols.add(col)

    grid = [(a, b, r, n) for a in (1, 2, 3) for b in (0, 1, 2, 3) for r in (3, 5, 7) for n in (1, 2, 3)]
    out.append(exhaustive("weyl.cusp_placements_disjoint", grid, no_overlap))

    def layout(case):
        alpha, beta = case
        got = cusp_block_layout(alpha, beta, 7, 1)
        if got != CUSP_LAYOUT_R7:
            return {"w1": sorted(got[0]), "w2": sorted(got[1])}

    out.append(exhaustive("weyl.cusp_layout_r7", [(1, 1), (2, 1), (1, 2), (2, 3)], layout))

    patterns = [unramified_patterns(r, k, n) for r in (3, 5) for k in (2, 3, 4, 5) for n in (1, 2)]

    for src, dst in patterns:
        w = shortest_conjugator(src, dst, f)
        tag = f"size{src.size}_" + "".join(lab for lab, _ in src.labels())
        syms = sorted(src.symbols())

        def fill(rng, i, src=src, dst=dst, w=w, syms=syms):
            vals = {s: random_scalar(rng, f, nonzero=True) for s in syms}
            D = Matrix.diag(src.evaluate(vals, f), f)
            E = Matrix.diag(dst.evaluate(vals, f), f)
            if w.matrix @ D @ w.inverse().matrix != E:
                return {"values": vals}

        out.append(sweep(f"weyl.shortest_conjugator_fill.{tag}", _n(iters, 50), seed, fill, p=p))

    def minimal(case):
        src, dst = case
        best = brute_force_min_inversions(src, dst)
        got = shortest_conjugator(src, dst).inversions()
        if got != best:
            return {"found": got, "minimum": best}

    small = [pq for pq in patterns if pq[0].size <= 8]
    out.append(exhaustive("weyl.shortest_conjugator_minimal", small, minimal))
    return out


# cocycles and Hilbert symbols

def _rth_power(rng, p, r):
    x = random_padic(rng, p, max_val=2).value()
    return x ** r


def suite_cocycle(p: int = 7, seed: int = 0, iters: int | None = None, r: int = 3) -> list[Check]:
    _field(p)
    if (p - 1) % r:
        raise ValueError(f"need r | p - 1 for tame symbols, got p={p}, r={r}")
    out = []

    def field_axioms(rng, i):
        a, b, c = (PrimeFieldElement(rng.randrange(p), p) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            return {"a": a, "b": b, "c": c, "field": "F_p"}
        if a != 0 and a * a.inverse() != 1:
            return {"a": a, "field": "F_p"}
        x, y, z = (random_scalar(rng, QQ) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * (y + z) != x * y + x * z:
            return {"x": x, "y": y, "z": z, "field": "QQ"}
        if x and x * QQ.inv(x) != 1:
            return {"x": x, "field": "QQ"}

    def valuation(rng, i):
        x, y = random_padic(rng, p).value(), random_padic(rng, p).value()
        if val_p(x * y, p) != val_p(x, p) + val_p(y, p):
            return {"x": x, "y": y}
        if unit_part(x * y, p) != unit_part(x, p) * unit_part(y, p):
            return {"x": x, "y": y, "reason": "unit part"}

    def mu_cyclic(case):
        order = case
        z = MuR(1, order)
        acc = MuR.identity(order)
        for step in range(1, order + 1):
            acc = acc * z
            if acc.is_identity() != (step == order):
                return {"step": step}

    def bilinear(rng, i):
        a, a2, b, b2 = (random_padic(rng, p) for _ in range(4))
        if hilbert_tame(a * a2, b, p, r) != hilbert_tame(a, b, p, r) * hilbert_tame(a2, b, p, r):
            return {"a": a, "a2": a2, "b": b, "slot": 1}
        if hilbert_tame(a, b * b2, p, r) != hilbert_tame(a, b, p, r) * hilbert_tame(a, b2, p, r):
            return {"a": a, "b": b, "b2": b2, "slot": 2}
        if not (hilbert_tame(a, b, p, r) * hilbert_tame(b, a, p, r)).is_identity():
            return {"a": a, "b": b, "reason": "antisymmetry"}

    def steinberg(rng, i):
        a = random_padic(rng, p).value()
        if a == 1:
            return None
        if not hilbert_tame(a, 1 - a, p, r).is_identity():
            return {"a": a}

    def quadratic(rng, i):
        a, b = random_padic(rng, p), random_padic(rng, p)
        if hilbert_tame(a, b, p, 2) != hilbert_quadratic(a, b, p):
            return {"a": a, "b": b}

    def two_cocycle(rng, i):
        s, t, u = (random_torus(rng, 4, p) for _ in range(3))
        lhs = torus_cocycle(s, t, r, p) * torus_cocycle(s * t, u, r, p)
        rhs = torus_cocycle(s, t * u, r, p) * torus_cocycle(t, u, r, p)
        if lhs != rhs:
            return {"s": s.values(), "t": t.values(), "u": u.values()}

    def block(rng, i):
        k = rng.choice((2, 3, 4))
        n = rng.choice((1, 2))
        h1, h2 = random_torus(rng, k, p, "SO"), random_torus(rng, k, p, "SO")
        g1, g2 = random_torus(rng, 2 * n, p, "Sp"), random_torus(rng, 2 * n, p, "Sp")
        if not block_compat_check(h1, h2, g1, g2, r, p):
            return {"h1": h1.values(), "h2": h2.values(), "g1": g1.values(), "g2": g2.values()}

    out.append(sweep("cocycle.field_axioms", _n(iters, 1000), seed, field_axioms, p=p))
    out.append(sweep("cocycle.valuation_multiplicative", _n(iters, 500), seed, valuation, p=p))
    out.append(exhaustive("cocycle.mu_r_cyclic", range(1, 14), mu_cyclic))
    out.append(sweep("cocycle.hilbert_bilinear_antisymmetric", _n(iters, 500), seed, bilinear,
                     p=p, r=r))
    out.append(sweep("cocycle.hilbert_steinberg", _n(iters, 500), seed, steinberg, p=p, r=r))
    out.append(sweep("cocycle.hilbert_quadratic_agrees", _n(iters, 200), seed, quadratic, p=p))
    out.append(sweep("cocycle.two_cocycle_identity", _n(iters, 1000), seed, two_cocycle, p=p, r=r))
    out.append(sweep("cocycle.block_compatibility", _n(iters, 200), seed, block, p=p, r=r))
    for q in (7, 13):
        def trivial(rng, i, q=q):
            a1, a2 = _rth_power(rng, q, 3), _rth_power(rng, q, 3)
            l2 = 2 * rng.randint(1, 3)
            s, t = TorusElement.t_of(a1, l2, q), TorusElement.t_of(a2, l2, q)
            if not torus_cocycle(s, t, 3, q).is_identity():
                return {"a1": a1, "a2": a2, "2l": l2}

        out.append(sweep(f"cocycle.trivial_on_rth_powers.p{q}", _n(iters, 100), seed, trivial,
                         p=q, r=3))
    return out


# nilpotent orbits

def hook_grid():
    """(r, m, 2l) with r <= m and 2m + 2 < 2l, over 2l = 2n + k(r-1)."""
    out = set()
    for r in (3, 5, 7):
        for k in range(2, 7):
            for n in range(1, 6):
                two_l = 2 * n + k * (r - 1)
                for m in range(r, two_l):
                    if 2 * m + 2 < two_l:
                        out.add((r, m, two_l))
    return sorted(out)


def suite_orbits(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    out = []

    def valid(case):
        r, two_l = case
        lam = o_c(r, two_l)
        if not is_symplectic_partition(lam.parts, two_l):
            return {"partition": lam.parts}

    grid = [(r, tl) for r in range(3, 14, 2) for tl in range(0, 61, 2)]
    out.append(exhaustive("orbits.o_c_symplectic", grid, valid))

    def anchors(case):
        (r, two_l), want = case
        got = o_c(r, two_l).parts
        if got != want:
            return {"got": got, "want": want}

    out.append(exhaustive("orbits.o_c_anchor_values", [((3, 4), (2, 2)), ((5, 4), (4,))], anchors))

    def partial_order(two_n):
        ps = symplectic_partitions(two_n)
        cmp = {(a, b): dominance(a, b) for a in ps for b in ps}
        ge = {k: v in (OrbitComparison.GREATER, OrbitComparison.EQUAL) for k, v in cmp.items()}
        for a in ps:
            if cmp[(a, a)] is not OrbitComparison.EQUAL:
                return {"reflexive": str(a)}
            for b in ps:
                if a != b and ge[(a, b)] and ge[(b, a)]:
                    return {"antisymmetric": [str(a), str(b)]}
                for c in ps:
                    if ge[(a, b)] and ge[(b, c)] and not ge[(a, c)]:
                        return {"transitive": [str(a), str(b), str(c)]}

    out.append(exhaustive("orbits.dominance_partial_order", range(2, 13, 2), partial_order))

    def oracle(row):
        lam, two_n, formula, computed = row
        if formula != computed:
            return {"formula": formula, "oracle": computed}

    out.append(exhaustive("orbits.orbit_dim_oracle", oracle_table(12), oracle))

    def instance(_):
        got = dominance((8, 1, 1, 1, 1), (3, 3, 3, 3))
        if got is not OrbitComparison.INCOMPARABLE:
            return {"got": got.value}

    out.append(exhaustive("orbits.hook_instance_incomparable", [None], instance))

    def strict(case):
        r, m, two_l = case
        got = hook_vs_oc(r, m, two_l)
        if got is not OrbitComparison.INCOMPARABLE:
            return {"hook": hook_partition(m, two_l).parts, "o_c": o_c(r, two_l).parts,
                    "got": got.value}

    out.append(exhaustive("orbits.hook_incomparable_grid", hook_grid(), strict))

    def not_below(case):
        r, m, two_l = case
        got = hook_vs_oc(r, m, two_l)
        if got in (OrbitComparison.LESS, OrbitComparison.EQUAL):
            return {"hook": hook_partition(m, two_l).parts, "o_c": o_c(r, two_l).parts,
                    "got": got.value}

    out.append(exhaustive("orbits.hook_not_below_o_c_grid", hook_grid(), not_below))

    def dimeq(case):
        r, k = case
        lhs, rhs = dimension_equation(r, k, k // 2)
        if lhs != rhs:
            return {"lhs": lhs, "rhs": rhs}

    grid = [(r, k) for r in (3, 5, 7, 9) for k in range(2, 13)]
    out.append(exhaustive("orbits.dimension_equation", grid, dimeq))
    return out


# exponent ledgers

EXPONENT_GRID = [(r, k, n) for r in range(3, 14, 2) for k in range(2, 11) for n in range(1, 11)]


def suite_exponents(p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    def ledger(case):
        got, want = ex.ledger_sum(*case), ex.ledger_target(*case)
        if got != want:
            return {"ledger": got, "target": want}

    def borel(case):
        got, want = ex.borel_exponent(*case), -ex.ledger_target(*case)
        if got != want:
            return {"borel": got, "target": want}

    def delta(case):
        _, k, n = case
        a, b = ex.delta_product_exponents(k, n)
        want = 1 - Fraction(k, 2) + n
        if a != want or b != -want:
            return {"a": a, "b": b, "target": want}

    def theta(r):
        got = ex.theta_exponent_solutions(r, 200)
        if got != [r - 1]:
            return {"solutions": got}

    return [
        exhaustive("exponents.ledger_identity", EXPONENT_GRID, ledger),
        exhaustive("exponents.borel_exponent", EXPONENT_GRID, borel),
        exhaustive("exponents.delta_product", EXPONENT_GRID, delta),
        exhaustive("exponents.theta_equation_solutions", range(3, 14, 2), theta),
    ]


RUNNERS = {
    "embed": suite_embed,
    "heisenberg": suite_heisenberg,
    "characters": suite_characters,
    "weyl": suite_weyl,
    "cocycle": suite_cocycle,
    "orbits": suite_orbits,
    "exponents": suite_exponents,
}


def run_suite(name: str, p: int = 7, seed: int = 0, iters: int | None = None) -> list[Check]:
    names = SUITES if name == "all" else (name,)
    checks = []
    for s in names:
        if s not in RUNNERS:
            raise ValueError(f"unknown suite {s!r}")
        checks += RUNNERS[s](p=p, seed=seed, iters=iters)
    return sorted(checks, key=lambda c: c.name)
