"""Tame Hilbert symbols over Q_p and the diagonal cocycle of r-fold covers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import (
    MuR,
    PAdicScalar,
    as_rational,
    is_prime,
    primitive_root,
    unit_part,
)

COCYCLE_CONVENTION = "sigma(s,t) = prod_{i<j} (s_i, t_j)_r^{-1} on the full diagonal"


def _padic(x, p: int) -> PAdicScalar:
    if isinstance(x, PAdicScalar):
        if x.prime != p:
            raise ValueError(f"scalar is {x.prime}-adic, expected {p}-adic")
        return x
    return PAdicScalar.from_rational(x, p)


def _check_tame(p: int, r: int):
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError("r must be positive")
    if p % r == 0:
        raise ValueError(f"p = {p} divides r = {r}: wild case unsupported")
    if (p - 1) % r:
        raise ValueError(f"no r-th roots in residue field: {r} does not divide {p}-1")


def mu_r_generator(p: int, r: int) -> int:
    """zeta = g^{(p-1)/r} in F_p, g the smallest primitive root."""
    _check_tame(p, r)
    return pow(primitive_root(p), (p - 1) // r, p)


def tame_unit(a, b, p: int) -> Fraction:
    """(-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}, a p-adic unit."""
    a, b = _padic(a, p), _padic(b, p)
    va, vb = a.valuation, b.valuation
    sign = -1 if (va * vb) % 2 else 1
    return sign * a.value() ** vb * b.value() ** (-va)


def hilbert_tame(a, b, p: int, r: int) -> MuR:
    _check_tame(p, r)
    u = unit_part(tame_unit(a, b, p), p)
    w = pow(u.residue, (p - 1) // r, p)
    zeta = mu_r_generator(p, r)
    acc = 1
    for e in range(r):
        if acc == w:
            return MuR(e, r)
        acc = acc * zeta % p
    raise AssertionError("power residue is not an r-th root of unity")


def legendre(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def hilbert_quadratic(a, b, p: int) -> MuR:
    """(a, b)_2 for odd p, as MuR of order 2 (exponent 1 means -1)."""
    if p == 2:
        raise ValueError("p = 2 is unsupported")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a, b = _padic(a, p), _padic(b, p)
    va, vb = a.valuation, b.valuation
    sign = (-1) ** ((va * vb * (p - 1) // 2) % 2)
    sign *= legendre(b.residue().residue, p) ** (va % 2)
    sign *= legendre(a.residue().residue, p) ** (vb % 2)
    return MuR(0 if sign == 1 else 1, 2)


@dataclass(frozen=True)
class TorusElement:
    """Diagonal element; ambient is 'GL', 'Sp' or 'SO'."""

    diagonal: tuple
    ambient: str
    prime: int

    def __post_init__(self):
        diag = tuple(_padic(x, self.prime) for x in self.diagonal)
        object.__setattr__(self, "diagonal", diag)
        if self.ambient not in ("GL", "Sp", "SO"):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        if self.ambient in ("Sp", "SO"):
            n = len(diag)
            if self.ambient == "Sp" and n % 2:
                raise ValueError("Sp torus needs even length")
            for i in range(n // 2):
                if (diag[i] * diag[n - 1 - i]).value() != 1:
                    raise ValueError(f"entries {i + 1} and {n - i} are not mutually inverse")
            if n % 2 and diag[n // 2].value() != 1:
                raise ValueError("SO_k torus needs 1 in the middle for odd k")

    @classmethod
    def sp(cls, first_half: Sequence, p: int) -> "TorusElement":
        ts = [as_rational(_padic(x, p).value()) for x in first_half]
        return cls(tuple(ts + [1 / t for t in reversed(ts)]), "Sp", p)

    @classmethod
    def so(cls, first_half: Sequence, k: int, p: int) -> "TorusElement":
        ts = [as_rational(_padic(x, p).value()) for x in first_half]
        if len(ts) != k // 2:
            raise ValueError(f"SO_{k} torus needs {k // 2} parameters")
        mid = [Fraction(1)] if k % 2 else []
        return cls(tuple(ts + mid + [1 / t for t in reversed(ts)]), "SO", p)

    @classmethod
    def t_of(cls, a, two_l: int, p: int) -> "TorusElement":
        """diag(a, 1/a, ..., a, 1/a)."""
        a = _padic(a, p).value()
        return cls(tuple(a if i % 2 == 0 else 1 / a for i in range(two_l)), "GL", p)

    def values(self) -> list[Fraction]:
        return [x.value() for x in self.diagonal]

    def determinant(self) -> Fraction:
        d = Fraction(1)
        for x in self.values():
            d *= x
        return d

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        if len(self.diagonal) != len(other.diagonal) or self.prime != other.prime:
            raise ValueError("torus elements of different sizes or primes")
        amb = self.ambient if self.ambient == other.ambient else "GL"
        return TorusElement(tuple(a * b for a, b in zip(self.diagonal, other.diagonal)),
                            amb, self.prime)

    def __len__(self):
        return len(self.diagonal)


def torus_cocycle(s: TorusElement, t: TorusElement, r: int, p: int) -> MuR:
    if len(s) != len(t):
        raise ValueError(f"sizes differ: {len(s)} vs {len(t)}")
    _check_tame(p, r)
    e = 0
    for i in range(len(s)):
        for j in range(i + 1, len(t)):
            e -= hilbert_tame(s.diagonal[i], t.diagonal[j], p, r).exponent
    return MuR(e, r)


def iota2_torus(h: TorusElement, g: TorusElement, r: int) -> TorusElement:
    """Diagonal of diag(h, ..., h, g, h*, ..., h*) with h* = J h^{-1} J."""
    r1 = (r - 1) // 2
    hv = h.values()
    hstar = [1 / x for x in reversed(hv)]
    return TorusElement(tuple(hv * r1 + g.values() + hstar * r1), "Sp", h.prime)


def block_compat_check(h1: TorusElement, h2: TorusElement, g1: TorusElement,
                       g2: TorusElement, r: int, p: int) -> bool:
    """sigma(iota2(h1,g1), iota2(h2,g2)) == sigma_k(h1,h2)^{r-1} sigma_2n(g1,g2)."""
    for x in (h1, h2, g1, g2):
        if x.determinant() != 1:
            raise ValueError("every block must have determinant 1")
    if len(h1) != len(h2) or len(g1) != len(g2):
        raise ValueError("paired torus elements must have equal sizes")
    lhs = torus_cocycle(iota2_torus(h1, g1, r), iota2_torus(h2, g2, r), r, p)
    rhs = torus_cocycle(h1, h2, r, p) ** (r - 1) * torus_cocycle(g1, g2, r, p)
    return lhs == rhs


def random_padic(rng: random.Random, p: int, max_val: int = 3) -> PAdicScalar:
    """Random nonzero element p^v * u with small unit numerator/denominator."""
    while True:
        num = rng.randint(-40, 40)
        den = rng.randint(1, 40)
        if num and num % p and den % p:
            return PAdicScalar(rng.randint(-max_val, max_val), Fraction(num, den), p)


def random_torus(rng: random.Random, n: int, p: int, ambient: str = "GL") -> TorusElement:
    if ambient == "GL":
        return TorusElement(tuple(random_padic(rng, p) for _ in range(n)), "GL", p)
    if ambient == "Sp":
        return TorusElement.sp([random_padic(rng, p) for _ in range(n // 2)], p)
    if ambient == "SO":
        return TorusElement.so([random_padic(rng, p) for _ in range(n // 2)], n, p)
    raise ValueError(f"unknown ambient {ambient!r}")
