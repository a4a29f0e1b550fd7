"""Unipotent radicals U_{a,b,c} of Sp_{2(ab+c)}: coordinates, factorization,
characters, and root subgroups."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .groups import (
    GroupElement,
    J,
    is_symplectic,
    mirror,
    random_scalar,
    short_root_sign,
    sp_inverse,
)
from .matrix import Field, Matrix
from .scalars import GF, QQ


class AmbiguousSignError(ValueError):
    """Both signs of a short-root partner entry pass the form check."""


@dataclass(frozen=True)
class UabcShape:
    """Parabolic with Levi GL_a^b x Sp_{2c} inside Sp_{2(ab+c)}."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        # a = 0 gives the trivial group, which has no blocks to address
        if self.a < 1 or self.b < 1 or self.c < 0:
            raise ValueError("need a >= 1, b >= 1 and c >= 0")

    @property
    def N(self) -> int:
        return self.a * self.b + self.c

    @property
    def size(self) -> int:
        return 2 * self.N

    def block_sizes(self) -> list[int]:
        mid = [2 * self.c] if self.c else []
        return [self.a] * self.b + mid + [self.a] * self.b

    def block_of(self, pos: int) -> int:
        """0-based block index of the 1-based position pos."""
        acc = 0
        for k, s in enumerate(self.block_sizes()):
            acc += s
            if pos <= acc:
                return k
        raise ValueError(f"position {pos} outside size {self.size}")

    def x_block(self, i: int) -> tuple[int, int]:
        """0-based (row, col) offsets of GL-block (i, i+1)."""
        return self.a * (i - 1), self.a * i

    @property
    def y_offset(self) -> tuple[int, int]:
        return self.a * (self.b - 1), self.a * self.b

    @property
    def z_offset(self) -> tuple[int, int]:
        return self.a * (self.b - 1), self.a * self.b + 2 * self.c

    def roots(self) -> list[tuple[int, int]]:
        """Positions (i, j), 1-based, of root vectors spanning Lie(U)."""
        n = self.size
        return [(i, j) for i in range(1, self.N + 1) for j in range(i + 1, n + 1)
                if i + j <= n + 1 and self.block_of(i) < self.block_of(j)]

    def dim(self) -> int:
        return len(self.roots())


def _as_matrix(X, field: Field, shape: tuple[int, int]) -> Matrix:
    M = X if isinstance(X, Matrix) else Matrix(X, field)
    if M.shape != shape:
        raise ValueError(f"expected shape {shape}, got {M.shape}")
    if M.field != field:
        raise ValueError(f"expected entries in {field}, got {M.field}")
    return M


def _add_lie_entry(rows, p: int, q: int, x, n: int, field: Field):
    """rows += x * (root vector at 1-based (p, q))."""
    if x == 0:
        return
    rows[p - 1][q - 1] = field.add(rows[p - 1][q - 1], x)
    if q != mirror(p, n):
        s = field.coerce(short_root_sign(p, q, n))
        pm, qm = mirror(p, n), mirror(q, n)
        rows[qm - 1][pm - 1] = field.add(rows[qm - 1][pm - 1], field.mul(s, x))


def u_coordinate(shape: UabcShape, i: int, X, field: Field = QQ) -> GroupElement:
    """I with X in GL-block (i, i+1) and the partner -J tX J mirrored."""
    if not 1 <= i <= shape.b - 1:
        raise ValueError(f"coordinate index {i} outside [1, {shape.b - 1}]")
    a, n = shape.a, shape.size
    X = _as_matrix(X, field, (a, a))
    rows = Matrix.identity(n, field).tolist()
    r0, c0 = shape.x_block(i)
    for p in range(a):
        for q in range(a):
            _add_lie_entry(rows, r0 + p + 1, c0 + q + 1, X[p, q], n, field)
    return GroupElement.unchecked(Matrix._raw(rows, field), "Sp", n)


def in_mat0(Z: Matrix) -> bool:
    Ja = J(Z.nrows, Z.field)
    return Z.T @ Ja == Ja @ Z


def in_mat00(Z: Matrix) -> bool:
    Ja = J(Z.nrows, Z.field)
    return Z.T @ Ja == -(Ja @ Z)


def mat0_projection(Z: Matrix) -> Matrix:
    """(Z + J tZ J) / 2, the component of Z with tZ J = J Z."""
    Ja = J(Z.nrows, Z.field)
    return (Z + Ja @ Z.T @ Ja).scale(Fraction(1, 2))


def _u_prime_lie(shape: UabcShape, Y: Matrix | None, Z: Matrix) -> Matrix:
    a, c, n = shape.a, shape.c, shape.size
    f = Z.field
    rows = [[f.zero] * n for _ in range(n)]
    r0, y0 = shape.y_offset
    if Y is not None:
        for p in range(a):
            for q in range(2 * c):
                _add_lie_entry(rows, r0 + p + 1, y0 + q + 1, Y[p, q], n, f)
    # Z in Mat^0 is already invariant under the mirror, so it sits as is
    _, z0 = shape.z_offset
    for p in range(a):
        for q in range(a):
            rows[r0 + p][z0 + q] = Z[p, q]
    return Matrix._raw(rows, f)


def y_star(shape: UabcShape, Y: Matrix) -> Matrix:
    """The 2c x a block forced below Y by the form."""
    nl = _u_prime_lie(shape, Y, Matrix.zeros(shape.a, shape.a, Y.field))
    _, y0 = shape.y_offset
    _, z0 = shape.z_offset
    return nl.block(y0, y0 + 2 * shape.c, z0, z0 + shape.a)


def u_prime(shape: UabcShape, Y, Z, field: Field = QQ) -> GroupElement:
    """exp of the Lie element carrying Y and Z.

    The top-right block equals Z + Y Y*/2. The correction lies in Mat^00 and
    is what makes the element symplectic once Y != 0.
    """
    a, c, n = shape.a, shape.c, shape.size
    Z = _as_matrix(Z, field, (a, a))
    if not in_mat0(Z):
        raise ValueError("Z must satisfy tZ J = J Z")
    Ym = _as_matrix(Y, field, (a, 2 * c)) if c else None
    nl = _u_prime_lie(shape, Ym, Z)
    M = Matrix.identity(n, field) + nl + (nl @ nl).scale(Fraction(1, 2))
    return GroupElement.unchecked(M, "Sp", n)


def is_in_U(M: Matrix, shape: UabcShape) -> bool:
    """Block upper unitriangular for the shape's block sizes, and symplectic."""
    if M.shape != (shape.size, shape.size):
        return False
    starts = []
    acc = 0
    for s in shape.block_sizes():
        starts.append((acc, acc + s))
        acc += s
    for bi, (r0, r1) in enumerate(starts):
        for bj, (c0, c1) in enumerate(starts):
            if bj > bi:
                continue
            for i in range(r0, r1):
                for j in range(c0, c1):
                    want = 1 if (bi == bj and i == j) else 0
                    if M[i, j] != want:
                        return False
    return is_symplectic(M, shape.size)


@dataclass(frozen=True)
class UabcFactorization:
    """u = u_prime(Y, Z) * prod_i u_coordinate(i, X_i) * u1."""

    shape: UabcShape
    Y: Matrix | None
    Z: Matrix
    X: tuple
    u1: GroupElement

    def reassemble(self) -> GroupElement:
        f = self.Z.field
        g = u_prime(self.shape, self.Y, self.Z, f)
        for i, Xi in enumerate(self.X, start=1):
            g = g @ u_coordinate(self.shape, i, Xi, f)
        return g @ self.u1


def factorize(u: GroupElement, shape: UabcShape) -> UabcFactorization:
    M = u.matrix
    f = M.field
    if not is_in_U(M, shape):
        raise ValueError(f"element is not in U_{{{shape.a},{shape.b},{shape.c}}}")
    a, c = shape.a, shape.c
    X = tuple(M.block(r0, r0 + a, c0, c0 + a)
              for r0, c0 in (shape.x_block(i) for i in range(1, shape.b)))
    r0, y0 = shape.y_offset
    _, z0 = shape.z_offset
    Y = M.block(r0, r0 + a, y0, y0 + 2 * c) if c else None
    top = M.block(r0, r0 + a, z0, z0 + a)
    Z = top if Y is None else top - (Y @ y_star(shape, Y)).scale(Fraction(1, 2))
    if not in_mat0(Z):
        raise ValueError("Z-coordinate escaped Mat^0; element is not symplectic")
    head = u_prime(shape, Y, Z, f).matrix
    for i, Xi in enumerate(X, start=1):
        head = head @ u_coordinate(shape, i, Xi, f).matrix
    u1 = sp_inverse(head) @ M
    _check_residual(u1, shape)
    return UabcFactorization(shape, Y, Z, X, GroupElement.unchecked(u1, "Sp"))


def _check_residual(u1: Matrix, shape: UabcShape):
    a, c = shape.a, shape.c
    spots = [shape.x_block(i) for i in range(1, shape.b)]
    r0, y0 = shape.y_offset
    _, z0 = shape.z_offset
    blocks = [(r, cc, a, a) for r, cc in spots] + [(r0, y0, a, 2 * c), (r0, z0, a, a)]
    for r, cc, h, w in blocks:
        if w and not u1.block(r, r + h, cc, cc + w).is_zero():
            raise AssertionError("factorization residual is not clean")


def psi_U(u: GroupElement, shape: UabcShape, p: int | None = None):
    """Argument tr(X_1 + ... + X_{b-1}) of the character, as a field scalar."""
    fac = factorize(u, shape)
    f = u.field
    s = f.zero
    for Xi in fac.X:
        s = f.add(s, Xi.trace())
    if p is not None and f == QQ:
        return GF(p).wrap(GF(p).coerce(s))
    if p is not None and f != GF(p):
        raise ValueError(f"element lives over {f}, not F_{p}")
    return f.wrap(s)


def psi_alpha(Z, alpha: int, field: Field = QQ):
    """Trace of the top-left alpha x alpha block of Z in Mat_k^0."""
    Z = Z if isinstance(Z, Matrix) else Matrix(Z, field)
    k = Z.nrows
    if not Z.is_square() or not 0 <= 2 * alpha <= k:
        raise ValueError(f"need a square Z with alpha <= k/2, got alpha={alpha}, k={k}")
    if not in_mat0(Z):
        raise ValueError("Z must satisfy tZ J = J Z")
    if alpha == 0:
        return Z.field.wrap(Z.field.zero)
    return Z.field.wrap(Z.block(0, alpha, 0, alpha).trace())


def root_subgroup(kind: str, i: int, j: int, t, two_l: int, field: Field = QQ) -> GroupElement:
    """I + t e_{i,2l+1-i} (long) or I + t e'_{i,j} (short).

    The partner sign of e'_{i,j} is found by testing both candidates against
    the form with t = 1; if both pass, the choice is refused.
    """
    n = two_l
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"invalid position ({i}, {j})")
    I = Matrix.identity(n, field)
    if kind == "long":
        if j != mirror(i, n):
            raise ValueError("long root needs j = 2l + 1 - i")
        return GroupElement.unchecked(I.with_entries({(i - 1, j - 1): t}), "Sp", n)
    if kind != "short":
        raise ValueError(f"kind must be 'long' or 'short', got {kind!r}")
    if j == mirror(i, n):
        raise ValueError("short root needs i + j != 2l + 1")
    im, jm = mirror(i, n) - 1, mirror(j, n) - 1
    passing = []
    for s in (1, -1):
        probe = Matrix.identity(n, QQ).with_entries({(i - 1, j - 1): 1, (jm, im): s})
        if is_symplectic(probe, n):
            passing.append(s)
    if len(passing) != 1:
        if passing:
            raise AmbiguousSignError(f"both partner signs pass at ({i}, {j})")
        raise ValueError(f"no partner sign makes ({i}, {j}) symplectic")
    s = passing[0]
    tt = field.coerce(t)
    M = I.with_entries({(i - 1, j - 1): tt, (jm, im): field.mul(field.coerce(s), tt)})
    return GroupElement.unchecked(M, "Sp", n)


def commutator(u: GroupElement, v: GroupElement) -> GroupElement:
    return u @ v @ u.inverse() @ v.inverse()


def right_multiply_root(rows, i: int, j: int, t, n: int, field: Field):
    """rows <- rows * (I + t * root vector at (i, j)), by column operations."""
    if t == 0:
        return
    ci, cj = i - 1, j - 1
    jm, im = mirror(j, n) - 1, mirror(i, n) - 1
    long_root = j == mirror(i, n)
    if not long_root:
        st = field.mul(field.coerce(short_root_sign(i, j, n)), t)
        add_i = [field.mul(st, r[jm]) for r in rows]
    for r in rows:
        r[cj] = field.add(r[cj], field.mul(t, r[ci]))
    if not long_root:
        for r, x in zip(rows, add_i):
            r[im] = field.add(r[im], x)


def random_U(rng: random.Random, shape: UabcShape, field: Field, passes: int = 2) -> GroupElement:
    """Product of root elements over all roots of U, in shuffled order."""
    n = shape.size
    rows = Matrix.identity(n, field).tolist()
    roots = shape.roots()
    for _ in range(passes):
        order = roots[:]
        rng.shuffle(order)
        for i, j in order:
            right_multiply_root(rows, i, j, random_scalar(rng, field), n, field)
    return GroupElement.unchecked(Matrix._raw(rows, field), "Sp", n)


def random_mat0(rng: random.Random, a: int, field: Field) -> Matrix:
    Z = Matrix([[random_scalar(rng, field) for _ in range(a)] for _ in range(a)], field)
    return mat0_projection(Z)


def random_matrix(rng: random.Random, n: int, m: int, field: Field) -> Matrix:
    return Matrix([[random_scalar(rng, field) for _ in range(m)] for _ in range(n)], field)
