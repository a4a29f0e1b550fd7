"""Exact scalars: rationals, prime fields, p-adic valuation data and mu_r.

Rationals are plain :class:`fractions.Fraction` values, which already keep
a positive, reduced denominator after every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from operator import mul

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group (Z/pZ)^x."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


class PrimeFieldElement:
    """Residue class modulo an odd prime."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if modulus < 3 or not is_prime(modulus):
            raise ValueError(f"modulus must be an odd prime, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", residue % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli {self.modulus} and {other.modulus}")
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.modulus
        if isinstance(other, Fraction):
            return GF(self.modulus).coerce(other)
        return NotImplemented

    def _new(self, residue: int) -> "PrimeFieldElement":
        return PrimeFieldElement(residue, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.residue)

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        return self._new(pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.residue, e, self.modulus))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} mod {self.modulus}"


def val_p(x, p: int) -> int:
    """Exponent of p in the nonzero rational x."""
    x = as_rational(x)
    if x == 0:
        raise ValueError("valuation of zero")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _strip(x: Fraction, p: int) -> Fraction:
    return x / Fraction(p) ** val_p(x, p)


def unit_part(x, p: int) -> PrimeFieldElement:
    """Reduction mod p of x * p^(-val_p(x))."""
    u = _strip(as_rational(x), p)
    return PrimeFieldElement(u.numerator * pow(u.denominator, -1, p), p)


@dataclass(frozen=True)
class PAdicScalar:
    """The nonzero value p^valuation * unit, with unit a p-adic unit."""

    valuation: int
    unit: Fraction
    prime: int

    def __post_init__(self):
        u = as_rational(self.unit)
        if u == 0:
            raise ValueError("unit part must be nonzero")
        if u.numerator % self.prime == 0 or u.denominator % self.prime == 0:
            raise ValueError(f"{u} is not a {self.prime}-adic unit")
        object.__setattr__(self, "unit", u)

    @classmethod
    def from_rational(cls, x, p: int) -> "PAdicScalar":
        x = as_rational(x)
        v = val_p(x, p)
        return cls(v, x / Fraction(p) ** v, p)

    def value(self) -> Fraction:
        return self.unit * Fraction(self.prime) ** self.valuation

    def residue(self) -> PrimeFieldElement:
        return PrimeFieldElement(
            self.unit.numerator * pow(self.unit.denominator, -1, self.prime),
            self.prime)

    def _check(self, other: "PAdicScalar"):
        if self.prime != other.prime:
            raise ValueError("mixed primes")

    def __mul__(self, other: "PAdicScalar") -> "PAdicScalar":
        self._check(other)
        return PAdicScalar(self.valuation + other.valuation,
                           self.unit * other.unit, self.prime)

    def inverse(self) -> "PAdicScalar":
        return PAdicScalar(-self.valuation, 1 / self.unit, self.prime)

    def __truediv__(self, other: "PAdicScalar") -> "PAdicScalar":
        return self * other.inverse()

    def __pow__(self, e: int) -> "PAdicScalar":
        return PAdicScalar(self.valuation * e, self.unit ** e, self.prime)

    def __neg__(self) -> "PAdicScalar":
        return PAdicScalar(self.valuation, -self.unit, self.prime)

    def __repr__(self):
        return f"{self.prime}^{self.valuation}*({self.unit})"


@dataclass(frozen=True)
class MuR:
    """zeta^exponent in the cyclic group mu_r of order r."""

    exponent: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    @classmethod
    def identity(cls, r: int) -> "MuR":
        return cls(0, r)

    def __mul__(self, other: "MuR") -> "MuR":
        return mu_r_mul(self, other)

    def __pow__(self, e: int) -> "MuR":
        return MuR(self.exponent * e, self.order)

    def inverse(self) -> "MuR":
        return MuR(-self.exponent, self.order)

    def is_identity(self) -> bool:
        return self.exponent == 0

    def __repr__(self):
        return f"zeta_{self.order}^{self.exponent}"


def mu_r_mul(a: MuR, b: MuR) -> MuR:
    if a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    return MuR(a.exponent + b.exponent, a.order)


# Fields used as matrix entry domains. Entries are stored in a raw native
# form: Fraction over QQ, int in [0, p) over GF(p).

class RationalField:
    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, PrimeFieldElement):
            raise TypeError("cannot lift an F_p element to QQ")
        return as_rational(x)

    def wrap(self, raw):
        return raw

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def dot(self, xs, ys):
        s = Fraction(0)
        for x, y in zip(xs, ys):
            if x and y:
                s += x * y
        return s

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        if p < 3 or not is_prime(p):
            raise ValueError(f"GF(p) needs an odd prime, got {p}")
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def coerce(self, x) -> int:
        p = self.characteristic
        if isinstance(x, PrimeFieldElement):
            if x.modulus != p:
                raise ValueError(f"element of F_{x.modulus} used in F_{p}")
            return x.residue
        if isinstance(x, int) and not isinstance(x, bool):
            return x % p
        x = as_rational(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"{x} has no reduction mod {p}")
        return x.numerator * pow(x.denominator, -1, p) % p

    def wrap(self, raw) -> PrimeFieldElement:
        return PrimeFieldElement(raw, self.characteristic)

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, -1, self.characteristic)

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys)) % self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return self.name


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)
