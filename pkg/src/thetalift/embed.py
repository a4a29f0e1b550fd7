"""Embeddings of SO_k x Sp_{2n} into larger symplectic groups, their cover
lift, the map from U'_{a,c} onto a Heisenberg group, and character
stabilization under the block-diagonal embedding."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    GroupElement,
    HeisenbergElement,
    J,
    is_special_orthogonal,
    is_symplectic,
    so_star,
    symplectic_form,
)
from .matrix import Field, Matrix
from .scalars import GF, MuR
from .unipotent import UabcShape, factorize, psi_U, right_multiply_root


def _need(x: GroupElement, tag: str, what: str):
    if x.tag != tag:
        raise ValueError(f"{what} must be tagged {tag}, got {x.tag}")


def tensor_form(k: int, n: int, field: Field) -> Matrix:
    """J_k (x) Omega_{2n}: the alternating form preserved by h (x) g."""
    return J(k, field).kron(symplectic_form(2 * n, field))


def darboux_permutation(G: Matrix) -> Matrix:
    """Signed-free permutation P with tP G P equal to the antidiagonal form.

    G must pair every basis vector with exactly one partner through a +-1
    entry, which is the case for tensor forms of antidiagonal forms.
    """
    n = G.nrows
    f = G.field
    partner = {}
    for x in range(n):
        nz = [y for y in range(n) if G[x, y] != 0]
        if len(nz) != 1:
            raise ValueError("form is not a signed perfect matching")
        partner[x] = nz[0]
    slots = []
    done = set()
    for x in range(n):
        if x in done:
            continue
        y = partner[x]
        if partner[y] != x or x == y:
            raise ValueError("form is not alternating")
        # orient so that G[first, second] = +1
        first, second = (x, y) if G[x, y] == f.one else (y, x)
        slots.append((first, second))
        done.update((x, y))
    rows = [[f.zero] * n for _ in range(n)]
    for s, (first, second) in enumerate(slots):
        rows[first][s] = f.one
        rows[second][n - 1 - s] = f.one
    return Matrix._raw(rows, f)


def iota1(h: GroupElement, g: GroupElement) -> GroupElement:
    """h (x) g in the tensor basis: g repeated k times down the diagonal for
    h = 1, and blocks h_ij I_{2n} for g = 1.

    The result preserves :func:`tensor_form`, not the antidiagonal form; see
    :func:`iota1_standard` for the conjugate landing in Sp_{2nk}.
    """
    _need(h, "SO", "h")
    _need(g, "Sp", "g")
    if h.field != g.field:
        raise ValueError("h and g over different fields")
    return GroupElement.unchecked(h.matrix.kron(g.matrix), "GL", h.size * g.size)


def iota1_standard(h: GroupElement, g: GroupElement) -> GroupElement:
    """P^{-1} (h (x) g) P with P a Darboux permutation for the tensor form."""
    M = iota1(h, g).matrix
    P = darboux_permutation(tensor_form(h.size, g.size // 2, M.field))
    return GroupElement.unchecked(P.T @ M @ P, "Sp", M.nrows)


def iota2(h: GroupElement, g: GroupElement, r: int) -> GroupElement:
    """diag(h, ..., h, g, h*, ..., h*) with (r-1)/2 copies each."""
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    _need(h, "SO", "h")
    _need(g, "Sp", "g")
    if h.field != g.field:
        raise ValueError("h and g over different fields")
    r1 = (r - 1) // 2
    hs = so_star(h.matrix)
    M = Matrix.block_diag([h.matrix] * r1 + [g.matrix] + [hs] * r1)
    return GroupElement.unchecked(M, "Sp", M.nrows)


def iota2_blocks(m: GroupElement, k: int, n: int, r: int) -> tuple[GroupElement, GroupElement]:
    """Recover (h, g) from an element of the image of iota2, or raise."""
    r1 = (r - 1) // 2
    M = m.matrix
    if M.nrows != 2 * n + k * (r - 1):
        raise ValueError("size does not match iota2 for these parameters")
    h = GroupElement.unchecked(M.block(0, k, 0, k), "SO", k)
    g0 = k * r1
    g = GroupElement.unchecked(M.block(g0, g0 + 2 * n, g0, g0 + 2 * n), "Sp", 2 * n)
    if not (is_special_orthogonal(h.matrix, k) and is_symplectic(g.matrix, 2 * n)):
        raise ValueError("diagonal blocks are not in SO_k x Sp_2n")
    if iota2(h, g, r).matrix != M:
        raise ValueError("element is not in the image of iota2")
    return h, g


@dataclass(frozen=True)
class CoverElement:
    """(g, epsilon) in the r-fold cover; epsilon in mu_r."""

    base: GroupElement
    epsilon: MuR


def iota2_cover(hc: CoverElement, gc: CoverElement, r: int) -> CoverElement:
    if hc.epsilon.order != r or gc.epsilon.order != r:
        raise ValueError(f"both covers must have degree {r}")
    return CoverElement(iota2(hc.base, gc.base, r), hc.epsilon * gc.epsilon)


def t_matrix(k: int, field: Field) -> Matrix:
    """I_k for k even, diag(I, 2, I) for k odd."""
    d = [1] * k
    if k % 2:
        d[k // 2] = 2
    return Matrix.diag(d, field)


def l_map(u: GroupElement, shape: UabcShape) -> HeisenbergElement:
    """(y_a, ..., y_1, tr(T_a Z) / 2), split as (X, Y, z) in H_{2ac+1}.

    Everything outside the U'_{a,c} coordinate is ignored.
    """
    if shape.c < 1:
        raise ValueError("the Heisenberg target needs c >= 1")
    fac = factorize(u, shape)
    f = u.field
    flat = [x for i in reversed(range(shape.a)) for x in fac.Y.row(i)]
    l = shape.a * shape.c
    z = f.mul(f.inv(f.coerce(2)), (t_matrix(shape.a, f) @ fac.Z).trace())
    return HeisenbergElement(tuple(flat[:l]), tuple(flat[l:]), z, f)


def l_map_defect(u: GroupElement, v: GroupElement, shape: UabcShape):
    """z(l(uv)) - z(l(u) l(v)); zero for every pair iff l is multiplicative
    (the X and Y parts are additive by construction)."""
    f = u.field
    lhs = l_map(u @ v, shape)
    rhs = l_map(u, shape) @ l_map(v, shape)
    if lhs.X != rhs.X or lhs.Y != rhs.Y:
        raise AssertionError("linear part of l is not additive")
    return f.wrap(f.sub(lhs.z, rhs.z))


@lru_cache(maxsize=None)
def _coordinate_generators(shape: UabcShape, field: Field) -> tuple:
    """((i, j), root element, psi value) for every root of U."""
    n = shape.size
    out = []
    for i, j in shape.roots():
        rows = Matrix.identity(n, field).tolist()
        right_multiply_root(rows, i, j, field.one, n, field)
        u = GroupElement.unchecked(Matrix._raw(rows, field), "Sp", n)
        out.append(((i, j), u, psi_U(u, shape)))
    return tuple(out)


def psi_invariant_under(m: GroupElement, k: int, n: int, r: int, p: int) -> bool:
    """psi_U(m u m^-1) == psi_U(u) on the root generators of U_{k,r1,n}.

    m must lie in the image of iota2 over F_p; other elements are refused.
    """
    if m.field != GF(p):
        raise ValueError(f"expected entries in F_{p}")
    iota2_blocks(m, k, n, r)
    shape = UabcShape(k, (r - 1) // 2, n)
    mi = m.inverse()
    for _, u, value in _coordinate_generators(shape, m.field):
        if psi_U(m @ u @ mi, shape) != value:
            return False
    return True


def stabilizes_psi(h: GroupElement, g: GroupElement, r: int, p: int) -> bool:
    if not is_special_orthogonal(h.matrix, h.size):
        raise ValueError("h is not in SO_k")
    if not is_symplectic(g.matrix, g.size):
        raise ValueError("g is not in Sp_2n")
    return psi_invariant_under(iota2(h, g, r), h.size, g.size // 2, r, p)
