"""Symplectic and split orthogonal groups in the antidiagonal realization.

Index conventions: public functions taking matrix positions use 1-based
indices, as in the usual e_{i,j} notation. ``mirror(i, n) = n + 1 - i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .matrix import Field, Matrix
from .scalars import QQ, PrimeField

# forms


@lru_cache(maxsize=None)
def J(m: int, field: Field = QQ) -> Matrix:
    """The m x m antidiagonal matrix of ones."""
    return Matrix.antidiag_ones(m, field)


@lru_cache(maxsize=None)
def symplectic_form(two_m: int, field: Field = QQ) -> Matrix:
    """[[0, J_m], [-J_m, 0]]."""
    if two_m % 2:
        raise ValueError("symplectic size must be even")
    m = two_m // 2
    z, o, mo = field.zero, field.one, field.neg(field.one)
    rows = [[z] * two_m for _ in range(two_m)]
    for i in range(m):
        rows[i][two_m - 1 - i] = o
        rows[two_m - 1 - i][i] = mo
    return Matrix._raw(rows, field)


def mirror(i: int, n: int) -> int:
    return n + 1 - i


def omega_sign(i: int, two_n: int) -> int:
    """Sign of the form entry pairing position i with its mirror."""
    return 1 if i <= two_n // 2 else -1


def _check_square(M: Matrix, size: int):
    if M.shape != (size, size):
        raise ValueError(f"expected a {size}x{size} matrix, got {M.nrows}x{M.ncols}")


def is_symplectic(M: Matrix, size: int, form: Matrix | None = None) -> bool:
    """tM * F * M == F, with F the antidiagonal symplectic form unless given."""
    _check_square(M, size)
    if size % 2:
        raise ValueError("symplectic size must be even")
    F = symplectic_form(size, M.field) if form is None else form
    if F.field != M.field:
        F = F.to_field(M.field)
    return M.T @ F @ M == F


def is_special_orthogonal(M: Matrix, k: int) -> bool:
    _check_square(M, k)
    Jk = J(k, M.field)
    return M.T @ Jk @ M == Jk and M.det() == 1


def sp_inverse(M: Matrix) -> Matrix:
    """Inverse of a symplectic matrix via the form, no elimination."""
    F = symplectic_form(M.nrows, M.field)
    return (F @ M.T @ F).scale(-1)


def so_inverse(M: Matrix) -> Matrix:
    Jk = J(M.nrows, M.field)
    return Jk @ M.T @ Jk


def so_star(h: Matrix) -> Matrix:
    """J th^{-1} J; equal to h itself on SO_k."""
    Jk = J(h.nrows, h.field)
    return Jk @ h.inverse().T @ Jk


def levi_star(A: Matrix) -> Matrix:
    """The partner J tA^{-1} J of a GL block placed in a symplectic Levi."""
    Ja = J(A.nrows, A.field)
    return Ja @ A.inverse().T @ Ja


# group elements

_TAGS = ("GL", "Sp", "SO")


@dataclass(frozen=True, eq=True)
class GroupElement:
    """A matrix tagged with its ambient group, checked on construction.

    Use :meth:`unchecked` for intermediate products whose membership is
    known by construction.
    """

    matrix: Matrix
    tag: str
    size: int

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown group tag {self.tag!r}")
        M = self.matrix
        _check_square(M, self.size)
        if self.tag == "Sp" and not is_symplectic(M, self.size):
            raise ValueError("matrix is not symplectic")
        if self.tag == "SO" and not is_special_orthogonal(M, self.size):
            raise ValueError("matrix is not in SO_k")
        if self.tag == "GL" and M.det() == 0:
            raise ValueError("matrix is singular")

    @classmethod
    def unchecked(cls, matrix: Matrix, tag: str, size: int | None = None) -> "GroupElement":
        g = object.__new__(cls)
        object.__setattr__(g, "matrix", matrix)
        object.__setattr__(g, "tag", tag)
        object.__setattr__(g, "size", matrix.nrows if size is None else size)
        return g

    @classmethod
    def identity(cls, tag: str, size: int, field: Field = QQ) -> "GroupElement":
        return cls.unchecked(Matrix.identity(size, field), tag, size)

    @property
    def field(self) -> Field:
        return self.matrix.field

    def _same_group(self, other: "GroupElement"):
        if (self.tag, self.size) != (other.tag, other.size):
            raise ValueError(
                f"different groups: {self.tag}_{self.size} vs {other.tag}_{other.size}")

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        self._same_group(other)
        return GroupElement.unchecked(self.matrix @ other.matrix, self.tag, self.size)

    __mul__ = __matmul__

    def inverse(self) -> "GroupElement":
        if self.tag == "Sp":
            inv = sp_inverse(self.matrix)
        elif self.tag == "SO":
            inv = so_inverse(self.matrix)
        else:
            inv = self.matrix.inverse()
        return GroupElement.unchecked(inv, self.tag, self.size)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def verify(self) -> bool:
        try:
            GroupElement(self.matrix, self.tag, self.size)
        except ValueError:
            return False
        return True


def sp_element(M: Matrix) -> GroupElement:
    return GroupElement(M, "Sp", M.nrows)


def so_element(M: Matrix) -> GroupElement:
    return GroupElement(M, "SO", M.nrows)


# Heisenberg group

@dataclass(frozen=True)
class HeisenbergElement:
    """(X, Y, z) in H_{2l+1}; X, Y are length-l rows of raw field entries."""

    X: tuple
    Y: tuple
    z: object
    field: Field = QQ

    def __post_init__(self):
        f = self.field
        X = tuple(f.coerce(x) for x in self.X)
        Y = tuple(f.coerce(y) for y in self.Y)
        if len(X) != len(Y) or not X:
            raise ValueError("X and Y must be non-empty rows of equal length")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "z", f.coerce(self.z))

    @property
    def l(self) -> int:
        return len(self.X)

    @classmethod
    def identity(cls, l: int, field: Field = QQ) -> "HeisenbergElement":
        return cls((0,) * l, (0,) * l, 0, field)

    def __matmul__(self, other):
        return heisenberg_mul(self, other)

    __mul__ = __matmul__

    def inverse(self) -> "HeisenbergElement":
        f = self.field
        # the twist term vanishes for (X, Y) against (-X, -Y)
        return HeisenbergElement(tuple(f.neg(x) for x in self.X),
                                 tuple(f.neg(y) for y in self.Y), f.neg(self.z), f)

    def is_central(self) -> bool:
        return all(x == 0 for x in self.X) and all(y == 0 for y in self.Y)


def _jpair(u: Sequence, v: Sequence, field: Field):
    """u * J_l * tv for rows u, v."""
    n = len(u)
    return field.dot(u, [v[n - 1 - i] for i in range(n)])


def heisenberg_mul(u: HeisenbergElement, v: HeisenbergElement) -> HeisenbergElement:
    if u.l != v.l:
        raise ValueError(f"Heisenberg sizes differ: {u.l} vs {v.l}")
    if u.field != v.field:
        raise ValueError("Heisenberg elements over different fields")
    f = u.field
    half = f.inv(f.coerce(2))
    twist = f.mul(half, f.sub(_jpair(u.X, v.Y, f), _jpair(u.Y, v.X, f)))
    return HeisenbergElement(
        tuple(f.add(a, b) for a, b in zip(u.X, v.X)),
        tuple(f.add(a, b) for a, b in zip(u.Y, v.Y)),
        f.add(f.add(u.z, v.z), twist), f)


def heisenberg_commutator(u: HeisenbergElement, v: HeisenbergElement) -> HeisenbergElement:
    return u @ v @ u.inverse() @ v.inverse()


def tau_embed(u: HeisenbergElement) -> GroupElement:
    """Realize (X, Y, z) as a unipotent element of Sp_{2l+2}."""
    f, l = u.field, u.l
    half = f.inv(f.coerce(2))
    n = 2 * l + 2
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = f.one
    for j in range(l):
        rows[0][1 + j] = u.X[j]
        rows[0][1 + l + j] = f.mul(half, u.Y[j])
        # Y* = 1/2 J tY and X* = -J tX, both columns
        rows[1 + j][n - 1] = f.mul(half, u.Y[l - 1 - j])
        rows[1 + l + j][n - 1] = f.neg(u.X[l - 1 - j])
    rows[0][n - 1] = u.z
    return GroupElement.unchecked(Matrix._raw(rows, f), "Sp", n)


def tau_inverse(g: GroupElement) -> HeisenbergElement:
    """Read (X, Y, z) back off an element in the image of tau."""
    M, f = g.matrix, g.field
    l = (M.nrows - 2) // 2
    two = f.coerce(2)
    X = M.row(0)[1:1 + l]
    Y = tuple(f.mul(two, y) for y in M.row(0)[1 + l:1 + 2 * l])
    return HeisenbergElement(X, Y, M[0, M.nrows - 1], f)


# torus and root elements

def t_element(a, two_l: int, field: Field = QQ) -> GroupElement:
    """diag(a, 1/a, ..., a, 1/a) in Sp_{2l}."""
    if two_l % 2:
        raise ValueError("size must be even")
    a = field.coerce(a)
    if a == 0:
        raise ValueError("t(a) needs a nonzero scalar")
    ai = field.inv(a)
    M = Matrix.diag([a if i % 2 == 0 else ai for i in range(two_l)], field)
    return GroupElement.unchecked(M, "Sp", two_l)


def sp_torus(diag_first_half: Sequence, field: Field = QQ) -> GroupElement:
    """diag(t_1, ..., t_N, 1/t_N, ..., 1/t_1)."""
    ts = [field.coerce(t) for t in diag_first_half]
    full = ts + [field.inv(t) for t in reversed(ts)]
    return GroupElement.unchecked(Matrix.diag(full, field), "Sp", len(full))


def so_torus(diag_first_half: Sequence, k: int, field: Field = QQ) -> GroupElement:
    ts = [field.coerce(t) for t in diag_first_half]
    if len(ts) != k // 2:
        raise ValueError(f"SO_{k} torus needs {k // 2} parameters")
    full = ts + ([field.one] if k % 2 else []) + [field.inv(t) for t in reversed(ts)]
    return GroupElement.unchecked(Matrix.diag(full, field), "SO", k)


def short_root_sign(i: int, j: int, two_n: int) -> int:
    """Sign s making e_{i,j} + s e_{j',i'} lie in the symplectic Lie algebra."""
    return -omega_sign(i, two_n) * omega_sign(j, two_n)


def sp_root_matrix(i: int, j: int, two_n: int, field: Field = QQ) -> Matrix:
    """Lie algebra root vector: e_{i,i'} if j = i', else e'_{i,j}."""
    if i == j or not (1 <= i <= two_n and 1 <= j <= two_n):
        raise ValueError(f"invalid root position ({i}, {j}) for size {two_n}")
    rows = [[field.zero] * two_n for _ in range(two_n)]
    rows[i - 1][j - 1] = field.one
    if j != mirror(i, two_n):
        s = short_root_sign(i, j, two_n)
        rows[mirror(j, two_n) - 1][mirror(i, two_n) - 1] = field.coerce(s)
    return Matrix._raw(rows, field)


def sp_root_element(i: int, j: int, t, two_n: int, field: Field = QQ) -> GroupElement:
    """I + t * (root vector); exact since the root vector squares to zero."""
    E = sp_root_matrix(i, j, two_n, field).scale(t)
    return GroupElement.unchecked(Matrix.identity(two_n, field) + E, "Sp", two_n)


def so_root_matrix(i: int, j: int, k: int, field: Field = QQ) -> Matrix:
    """e_{i,j} - e_{j',i'}, a root vector of the orthogonal Lie algebra."""
    if i == j or j == mirror(i, k) or not (1 <= i <= k and 1 <= j <= k):
        raise ValueError(f"invalid root position ({i}, {j}) for SO_{k}")
    rows = [[field.zero] * k for _ in range(k)]
    rows[i - 1][j - 1] = field.one
    rows[mirror(j, k) - 1][mirror(i, k) - 1] = field.neg(field.one)
    return Matrix._raw(rows, field)


def so_root_element(i: int, j: int, t, k: int, field: Field = QQ) -> GroupElement:
    """exp(tX) = I + tX + t^2 X^2 / 2; X^3 = 0 for every root vector."""
    X = so_root_matrix(i, j, k, field).scale(t)
    X2 = X @ X
    M = Matrix.identity(k, field) + X + X2.scale(Fraction(1, 2))
    return GroupElement.unchecked(M, "SO", k)


# Weyl elements

class WeylElement:
    """Monomial +-1 matrix lying in Sp_{2N}."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        n = matrix.nrows
        _check_square(matrix, n)
        f = matrix.field
        minus_one = f.neg(f.one)
        seen_cols = set()
        for i in range(n):
            nz = [(j, x) for j, x in enumerate(matrix.row(i)) if x != 0]
            if len(nz) != 1 or nz[0][1] not in (f.one, minus_one):
                raise ValueError(f"row {i + 1} is not a single +-1 entry")
            seen_cols.add(nz[0][0])
        if len(seen_cols) != n:
            raise ValueError("two rows share a column")
        if not is_symplectic(matrix, n):
            raise ValueError("monomial matrix is not symplectic")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def placements(self) -> list[tuple[int, int, int]]:
        """(row, col, sign) triples, 1-based, one per row."""
        f = self.matrix.field
        out = []
        for i in range(self.size):
            for j, x in enumerate(self.matrix.row(i)):
                if x != 0:
                    out.append((i + 1, j + 1, 1 if x == f.one else -1))
        return out

    def column_to_row(self) -> list[int]:
        """perm[c-1] = row receiving column c (1-based)."""
        perm = [0] * self.size
        for i, j, _ in self.placements():
            perm[j - 1] = i
        return perm

    def inversions(self) -> int:
        p = self.column_to_row()
        return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])

    def inverse(self) -> "WeylElement":
        return WeylElement(self.matrix.T)

    def as_group_element(self) -> GroupElement:
        return GroupElement.unchecked(self.matrix, "Sp", self.size)

    def conjugate_diagonal(self, diag: Sequence) -> list:
        """Diagonal of w diag(d) w^{-1}: position row(c) receives d_c."""
        out = [None] * self.size
        for c, row in enumerate(self.column_to_row()):
            out[row - 1] = diag[c]
        return out

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.placements()})"


def weyl_from_placements(two_n: int, placements: dict[int, tuple[int, int]],
                         field: Field = QQ) -> WeylElement:
    """Complete first-half rows {row: (col, sign)} to a symplectic Weyl element.

    Row i' receives column c' with the sign forced by the form, so the
    first N rows must all be given.
    """
    N = two_n // 2
    if sorted(placements) != list(range(1, N + 1)):
        raise ValueError("placements must cover exactly rows 1..N")
    rows = [[field.zero] * two_n for _ in range(two_n)]
    used = set()
    for i, (c, s) in placements.items():
        if s not in (1, -1):
            raise ValueError("signs must be +-1")
        cm = mirror(c, two_n)
        if c in used or cm in used:
            raise ValueError(f"column {c} or its mirror {cm} is already used")
        used.update((c, cm))
        rows[i - 1][c - 1] = field.coerce(s)
        s_m = omega_sign(i, two_n) * omega_sign(c, two_n) * s
        rows[mirror(i, two_n) - 1][cm - 1] = field.coerce(s_m)
    return WeylElement(Matrix._raw(rows, field))


def complete_partial_weyl(two_n: int, partial: dict[int, tuple[int, int]],
                          extension: dict[int, tuple[int, int]] | None = None,
                          field: Field = QQ) -> WeylElement:
    """Fill unspecified first-half rows, by ``extension`` if given, else
    with the smallest free column (sign +1) in increasing row order."""
    N = two_n // 2
    placed = dict(partial)
    for i, v in (extension or {}).items():
        if i in placed:
            raise ValueError(f"row {i} is fixed and cannot be extended")
        placed[i] = v
    used = set()
    for c, _ in placed.values():
        used.update((c, mirror(c, two_n)))
    for i in range(1, N + 1):
        if i in placed:
            continue
        c = next(c for c in range(1, two_n + 1) if c not in used)
        placed[i] = (c, 1)
        used.update((c, mirror(c, two_n)))
    return weyl_from_placements(two_n, placed, field)


# random sampling

def random_scalar(rng: random.Random, field: Field, nonzero: bool = False):
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, field.characteristic)
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if x != 0 or not nonzero:
            return x


def random_sp(rng: random.Random, two_n: int, field: Field, steps: int | None = None) -> GroupElement:
    """Product of random root elements (both signs) and a random torus."""
    N = two_n // 2
    roots = [(i, j) for i in range(1, two_n + 1) for j in range(1, two_n + 1) if i != j]
    steps = steps if steps is not None else len(roots) + 2
    M = sp_torus([random_scalar(rng, field, nonzero=True) for _ in range(N)], field).matrix
    for _ in range(steps):
        i, j = rng.choice(roots)
        M = M @ sp_root_element(i, j, random_scalar(rng, field), two_n, field).matrix
    return GroupElement.unchecked(M, "Sp", two_n)


def random_so(rng: random.Random, k: int, field: Field, steps: int | None = None) -> GroupElement:
    roots = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)
             if i != j and j != mirror(i, k)]
    if not roots:
        # SO_2 is its torus
        return so_torus([random_scalar(rng, field, nonzero=True)], k, field)
    steps = steps if steps is not None else len(roots) + 2
    M = so_torus([random_scalar(rng, field, nonzero=True) for _ in range(k // 2)], k, field).matrix
    for _ in range(steps):
        i, j = rng.choice(roots)
        M = M @ so_root_element(i, j, random_scalar(rng, field), k, field).matrix
    return GroupElement.unchecked(M, "SO", k)


def random_heisenberg(rng: random.Random, l: int, field: Field) -> HeisenbergElement:
    return HeisenbergElement(tuple(random_scalar(rng, field) for _ in range(l)),
                             tuple(random_scalar(rng, field) for _ in range(l)),
                             random_scalar(rng, field), field)


# modulus characters as exponent ledgers

def positive_roots(family: str, rank: int) -> list[tuple[int, ...]]:
    """Positive roots in the e_i basis. family: 'Sp' (C_n), 'SO_odd' (B_n)
    or 'SO_even' (D_n)."""
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            for sign in (-1, 1):
                v = [0] * rank
                v[i] = 1
                v[j] = sign
                roots.append(tuple(v))
        if family == "Sp":
            v = [0] * rank
            v[i] = 2
            roots.append(tuple(v))
        elif family == "SO_odd":
            v = [0] * rank
            v[i] = 1
            roots.append(tuple(v))
        elif family != "SO_even":
            raise ValueError(f"unknown family {family!r}")
    return roots


def borel_weights(N: int) -> list[int]:
    """Exponent of t_i in delta_B for the Borel of Sp_{2N}: sum of positive roots."""
    w = [0] * N
    for root in positive_roots("Sp", N):
        for i, c in enumerate(root):
            w[i] += c
    return w


def borel_modulus_exponent(pattern: Sequence[int], N: int) -> int:
    """Exponent e with delta_B(t) = |a|^e, where t_i = a^{pattern[i]}."""
    if len(pattern) != N:
        raise ValueError(f"pattern has length {len(pattern)}, expected {N}")
    return sum(p * w for p, w in zip(pattern, borel_weights(N)))


def parabolic_half_modulus_exponent(group: str, size: int) -> Fraction:
    """Half-modulus exponent on the GL_1 factor of the parabolic with Levi
    GL_1 x (rest), for group 'Sp' (size 2n) or 'SO' (size k)."""
    if group == "Sp":
        if size % 2 or size < 2:
            raise ValueError("Sp needs an even size >= 2")
        roots = positive_roots("Sp", size // 2)
    elif group == "SO":
        if size < 2:
            raise ValueError("SO_k needs k >= 2")
        roots = positive_roots("SO_odd" if size % 2 else "SO_even", size // 2)
    else:
        raise ValueError(f"unknown group {group!r}")
    return Fraction(sum(r[0] for r in roots if r[0] > 0), 2)
