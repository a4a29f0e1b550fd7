"""Exact exponent ledgers of |a| and |b| for modulus characters."""

from __future__ import annotations

from fractions import Fraction

from .groups import borel_modulus_exponent, parabolic_half_modulus_exponent


def _check_r(r: int):
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and > 1, got {r}")


def ledger_sum(r: int, k: int, n: int) -> int:
    """k + (r1-1)(2k-2) + sum_j jk + r1(r1 k + 2n - 2) + sum_j j(k-4) - (r1-1)(k-2),
    both sums over 1 <= j <= r1 - 1."""
    _check_r(r)
    r1 = (r - 1) // 2
    js = range(1, r1)
    return (k + (r1 - 1) * (2 * k - 2) + sum(j * k for j in js)
            + r1 * (r1 * k + 2 * n - 2) + sum(j * (k - 4) for j in js)
            - (r1 - 1) * (k - 2))


def ledger_target(r: int, k: int, n: int) -> int:
    _check_r(r)
    return (r - 1) // 2 * (2 * n + (k - 1) * (r - 1))


def borel_exponent(r: int, k: int, n: int) -> Fraction:
    """Exponent of |a| in delta_B^{(r-1)/(2r)} at diag(a^{-1} I_r, I, a I_r)
    in Sp_{2n+k(r-1)}."""
    _check_r(r)
    N = n + k * (r - 1) // 2
    if N < r:
        raise ValueError("torus too small for r coordinates")
    pattern = [-1] * r + [0] * (N - r)
    return borel_modulus_exponent(pattern, N) * Fraction(r - 1, 2 * r)


def delta_product_exponents(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Exponents (on |a|, on |b|) of the product of the two half-modulus
    characters with the twisting character at diag(a, g', 1/a), diag(b, h', 1/b).

    The twist combines the Weil representation contribution, which swaps the
    two half-modulus exponents, with the inverse square of those exponents from
    the quotient unipotent.
    """
    half_so = parabolic_half_modulus_exponent("SO", k)
    half_sp = parabolic_half_modulus_exponent("Sp", 2 * n)
    weil = (half_so, half_sp)
    quotient = (-2 * half_so, -2 * half_sp)
    a = half_sp + weil[0] + quotient[0]
    b = half_so + weil[1] + quotient[1]
    return a, b


def theta_exponent_solutions(r: int, lmax: int = 200) -> list[int]:
    """l in [1, lmax] with l(l+1)(r-1)/(2r) = l^2/2."""
    _check_r(r)
    return [l for l in range(1, lmax + 1)
            if Fraction(l * (l + 1) * (r - 1), 2 * r) == Fraction(l * l, 2)]
