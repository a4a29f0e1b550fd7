"""Symplectic partitions and nilpotent orbits of sp_{2n}."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, Sequence

from .groups import mirror, symplectic_form
from .matrix import Matrix, integer_rank
from .scalars import QQ


@dataclass(frozen=True)
class SymplecticPartition:
    parts: tuple[int, ...]
    total: int

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not is_symplectic_partition(parts, self.total):
            raise ValueError(f"{parts} is not a symplectic partition of {self.total}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "SymplecticPartition":
        return cls(tuple(parts), sum(parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_symplectic_partition(parts: Sequence[int], two_n: int) -> bool:
    if any(p <= 0 for p in parts) or sum(parts) != two_n:
        return False
    return all(m % 2 == 0 for p, m in Counter(parts).items() if p % 2)


def _parts(lam) -> tuple[int, ...]:
    if isinstance(lam, SymplecticPartition):
        return lam.parts
    return tuple(sorted(lam, reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in decreasing order of parts."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def symplectic_partitions(two_n: int) -> list[SymplecticPartition]:
    return [SymplecticPartition(p, two_n) for p in partitions(two_n)
            if is_symplectic_partition(p, two_n)]


class OrbitComparison(Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def dominance(lam, mu) -> OrbitComparison:
    """Compare partitions by partial sums."""
    a, b = _parts(lam), _parts(mu)
    if sum(a) != sum(b):
        raise ValueError(f"totals differ: {sum(a)} vs {sum(b)}")
    width = max(len(a), len(b))
    sa = list(accumulate(a + (0,) * (width - len(a))))
    sb = list(accumulate(b + (0,) * (width - len(b))))
    ge = all(x >= y for x, y in zip(sa, sb))
    le = all(x <= y for x, y in zip(sa, sb))
    if ge and le:
        return OrbitComparison.EQUAL
    if ge:
        return OrbitComparison.GREATER
    if le:
        return OrbitComparison.LESS
    return OrbitComparison.INCOMPARABLE


def o_c(r: int, two_l: int) -> SymplecticPartition:
    """Candidate maximal orbit: write 2l = alpha r + beta."""
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and > 1, got {r}")
    if two_l % 2 or two_l < 0:
        raise ValueError(f"2l must be even and non-negative, got {two_l}")
    alpha, beta = divmod(two_l, r)
    if alpha % 2 == 0:
        parts = [r] * alpha + ([beta] if beta else [])
    else:
        parts = [r] * (alpha - 1) + [r - 1, beta + 1]
    return SymplecticPartition(tuple(parts), two_l)


def transpose(parts: Sequence[int]) -> tuple[int, ...]:
    parts = _parts(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def orbit_dim(lam, two_n: int) -> int:
    """2n^2 + n - (sum of squared dual parts)/2 - (number of odd parts)/2."""
    parts = _parts(lam)
    if not is_symplectic_partition(parts, two_n):
        raise ValueError(f"{parts} is not a symplectic partition of {two_n}")
    n = two_n // 2
    d = Fraction(2 * n * n + n) - Fraction(sum(t * t for t in transpose(parts)), 2) \
        - Fraction(sum(1 for p in parts if p % 2), 2)
    if d.denominator != 1:
        raise AssertionError("orbit dimension must be an integer")
    return int(d)


def gk_dim(lam, two_n: int) -> Fraction:
    return Fraction(orbit_dim(lam, two_n), 2)


def _local_piece(kind: str, d: int) -> list[list[int]]:
    """A nilpotent in sp_d (antidiagonal form) of the given Jordan shape.

    'odd' is diag(N, -J tN J) with N the upper shift of size d/2; 'even'
    adds the long root vector e_{h,h+1}, giving the regular nilpotent.
    """
    X = [[0] * d for _ in range(d)]
    h = d // 2
    for i in range(1, h):
        X[i - 1][i] = 1
        X[mirror(i + 1, d) - 1][mirror(i, d) - 1] = -1
    if kind == "even":
        X[h - 1][h] = 1
    return X


def nilpotent_representative(lam, two_n: int) -> Matrix:
    """A nilpotent X in sp_{2n} with Jordan type lam.

    Even parts become single symplectic Jordan blocks, equal odd parts are
    paired, and each piece sits in mirrored positions of the big form.
    """
    parts = _parts(lam)
    if not is_symplectic_partition(parts, two_n):
        raise ValueError(f"{parts} is not a symplectic partition of {two_n}")
    pieces = []
    odd = Counter(p for p in parts if p % 2)
    for p in parts:
        if p % 2 == 0:
            pieces.append(("even", p))
    for p, m in sorted(odd.items(), reverse=True):
        pieces.extend([("odd", 2 * p)] * (m // 2))
    X = [[0] * two_n for _ in range(two_n)]
    offset = 0
    for kind, d in pieces:
        h = d // 2
        local = _local_piece(kind, d)

        def place(q: int, off=offset, h=h, d=d) -> int:
            return off + q if q <= h else two_n - off - d + q

        for q1 in range(1, d + 1):
            for q2 in range(1, d + 1):
                if local[q1 - 1][q2 - 1]:
                    X[place(q1) - 1][place(q2) - 1] = local[q1 - 1][q2 - 1]
        offset += h
    return Matrix(X, QQ)


def jordan_type(X: Matrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix from ranks of its powers."""
    n = X.nrows
    ranks = [n]
    P = Matrix.identity(n, X.field)
    while ranks[-1] > 0:
        P = P @ X
        ranks.append(P.rank())
        if len(ranks) > n + 1:
            raise ValueError("matrix is not nilpotent")
    # number of blocks of size >= j is rank(X^{j-1}) - rank(X^j)
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    sizes = []
    for j, cnt in enumerate(at_least, start=1):
        nxt = at_least[j] if j < len(at_least) else 0
        sizes.extend([j] * (cnt - nxt))
    return tuple(sorted(sizes, reverse=True))


def centralizer_dim_oracle(lam, two_n: int) -> int:
    """dim of the centralizer of X_lam in sp_{2n}, by exact elimination.

    sp_{2n} = {Omega^{-1} S : S symmetric}; the map S -> [X, Omega^{-1} S] is
    assembled one basis matrix S at a time and its rank is the orbit dimension.
    """
    X = [[int(x) for x in row] for row in nilpotent_representative(lam, two_n).rows()]
    n = two_n
    rows = []
    for i in range(n):
        for j in range(i, n):
            # Omega^{-1} = -Omega sends row a of S to row mirror(a) with sign
            Y = {}
            for a, b in ((i, j), (j, i)):
                target = n - 1 - a
                sign = 1 if target >= n // 2 else -1
                Y[(target, b)] = Y.get((target, b), 0) + sign
            C = [[0] * n for _ in range(n)]
            for (a, b), y in Y.items():
                for q in range(n):
                    if X[q][a]:
                        C[q][b] += X[q][a] * y
                    if X[b][q]:
                        C[a][q] -= y * X[b][q]
            rows.append([Fraction(x) for r in C for x in r])
    dim_sp = n * (n + 1) // 2
    return dim_sp - integer_rank(rows)


def orbit_dim_oracle(lam, two_n: int) -> int:
    return two_n * (two_n + 1) // 2 - centralizer_dim_oracle(lam, two_n)


# the dimension identity for the lift

DIMENSION_CONVENTIONS = {
    "dim_pi": "n^2 (maximal unipotent of Sp_2n; generic pi)",
    "dim_theta_2": "nk (minimal orbit of Sp_2nk)",
    "dim_theta_r": "gk_dim(o_c(r, 2n + k(r-1)))",
    "dim_sigma": "a^2 for k = 2a+1, a^2 - a for k = 2a (generic sigma)",
    "dim_U": "(dim Sp_2N - dim Levi) / 2 with N = n + k(r-1)/2",
}


def dim_sp(two_n: int) -> int:
    n = two_n // 2
    return 2 * n * n + n


def dim_so(k: int) -> int:
    return k * (k - 1) // 2


def max_unipotent_dim_so(k: int) -> int:
    a = k // 2
    return a * a if k % 2 else a * a - a


def dim_U_kr1n(r: int, k: int, n: int) -> int:
    r1 = (r - 1) // 2
    N = n + k * r1
    levi = r1 * k * k + dim_sp(2 * n)
    return (dim_sp(2 * N) - levi) // 2


def dimension_equation(r: int, k: int, n: int) -> tuple[Fraction, Fraction]:
    """(dim Sp_2n + dim U + dim sigma, dim pi + dim Theta^(2) + dim Theta^(r))."""
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and > 1, got {r}")
    two_l = 2 * n + k * (r - 1)
    lhs = Fraction(dim_sp(2 * n) + dim_U_kr1n(r, k, n) + max_unipotent_dim_so(k))
    rhs = Fraction(n * n + n * k) + gk_dim(o_c(r, two_l), two_l)
    return lhs, rhs


# combinatorial facts used by the vanishing arguments

def hook_partition(m: int, two_l: int) -> SymplecticPartition:
    """((2m+2) 1^{2l-2m-2})."""
    if not 0 <= 2 * m + 2 <= two_l:
        raise ValueError("need 2m + 2 <= 2l")
    return SymplecticPartition((2 * m + 2,) + (1,) * (two_l - 2 * m - 2), two_l)


def hook_vs_oc(r: int, m: int, two_l: int) -> OrbitComparison:
    return dominance(hook_partition(m, two_l), o_c(r, two_l))


def hook_not_below_oc(r: int, m: int, two_l: int) -> bool:
    """True when the hook orbit is not dominated by o_c."""
    return hook_vs_oc(r, m, two_l) in (OrbitComparison.GREATER, OrbitComparison.INCOMPARABLE)


def composite_is_valid(q: int, tail, two_n: int) -> bool:
    """[q^2 1^{2n-2q}] o [tail] is defined: q odd, q >= every tail part, and
    q^2 followed by tail is a symplectic partition of 2n."""
    tail = _parts(tail)
    if q % 2 == 0 or (tail and tail[0] > q):
        return False
    return is_symplectic_partition((q, q) + tail, two_n)


# Langlands dual groups of the r-fold covers

@dataclass(frozen=True)
class DualGroupDescriptor:
    family: str
    size: int

    def __str__(self):
        return f"{self.family}_{self.size}(C)"


def dual_group(family: str, size: int, r: int) -> DualGroupDescriptor:
    """family 'Sp' with size 2l, or 'SO' with size k."""
    if r < 1:
        raise ValueError("cover degree must be positive")
    if family == "Sp":
        if size % 2 or size < 2:
            raise ValueError("Sp needs an even size")
        return DualGroupDescriptor("SO", size + 1) if r % 2 else DualGroupDescriptor("Sp", size)
    if family == "SO":
        if size < 2:
            raise ValueError("SO needs size >= 2")
        if size % 2 == 0:
            return DualGroupDescriptor("SO", size)
        return DualGroupDescriptor("Sp", size - 1) if r % 2 else DualGroupDescriptor("SO", size)
    raise ValueError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def oracle_table(max_two_n: int = 12) -> tuple[tuple[str, int, int, int], ...]:
    """(partition, 2n, closed formula, oracle) for every symplectic partition."""
    out = []
    for two_n in range(2, max_two_n + 1, 2):
        for lam in symplectic_partitions(two_n):
            out.append((str(lam), two_n, orbit_dim(lam, two_n), orbit_dim_oracle(lam, two_n)))
    return tuple(out)
