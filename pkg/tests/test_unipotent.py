import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from thetalift.groups import is_symplectic, sp_root_matrix, t_element, tau_embed
from thetalift.groups import HeisenbergElement, heisenberg_commutator
from thetalift.matrix import Matrix
from thetalift.scalars import GF, QQ
from thetalift.unipotent import (
    AmbiguousSignError,
    UabcShape,
    commutator,
    factorize,
    in_mat0,
    is_in_U,
    psi_alpha,
    psi_U,
    random_mat0,
    random_matrix,
    random_U,
    root_subgroup,
    u_coordinate,
    u_prime,
)

F7 = GF(7)
seeds = st.integers(0, 10**6)
shapes = st.builds(UabcShape, st.integers(1, 3), st.integers(1, 3), st.integers(0, 2))


def test_shape_sizes():
    s = UabcShape(2, 3, 1)
    assert s.size == 2 * (2 * 3 + 1)
    assert s.block_sizes() == [2, 2, 2, 2, 2, 2, 2]
    assert UabcShape(1, 2, 0).block_sizes() == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        UabcShape(1, 0, 1)


@pytest.mark.parametrize("a, b, c", [(1, 1, 1), (2, 2, 1), (3, 2, 0), (1, 3, 2)])
def test_shape_dim_is_half_codim_of_levi(a, b, c):
    s = UabcShape(a, b, c)
    N = s.N
    levi = b * a * a + (2 * c * c + c)
    assert s.dim() == (2 * N * N + N - levi) // 2


def test_u_coordinate_examples():
    s = UabcShape(1, 2, 1)
    assert u_coordinate(s, 1, [[0]]).matrix.is_identity()
    u = u_coordinate(s, 1, [[5]]).matrix
    assert u[0, 1] == 5
    assert is_symplectic(u, 6)
    with pytest.raises(ValueError):
        u_coordinate(s, 2, [[1]])


@given(seeds, st.integers(1, 3), st.integers(2, 3))
def test_u_coordinate_block_is_additive(seed, a, b):
    rng = random.Random(seed)
    s = UabcShape(a, b, 1)
    i = rng.randint(1, b - 1)
    X, X2 = random_matrix(rng, a, a, F7), random_matrix(rng, a, a, F7)
    prod = u_coordinate(s, i, X, F7) @ u_coordinate(s, i, X2, F7)
    assert prod.matrix == u_coordinate(s, i, X + X2, F7).matrix
    assert (u_coordinate(s, i, X, F7) @ u_coordinate(s, i, X2, F7)).matrix == \
        (u_coordinate(s, i, X2, F7) @ u_coordinate(s, i, X, F7)).matrix


def test_u_prime_examples():
    s = UabcShape(1, 1, 1)
    assert u_prime(s, [[0, 0]], [[0]]).matrix.is_identity()
    u = u_prime(s, [[2, 3]], [[5]]).matrix
    assert is_symplectic(u, 4)
    assert (u[0, 1], u[0, 2]) == (2, 3)
    with pytest.raises(ValueError):
        u_prime(UabcShape(2, 1, 1), [[0, 0], [0, 0]], [[1, 0], [0, 0]])


@given(seeds, st.integers(1, 3), st.integers(0, 2))
def test_u_prime_central_direction(seed, a, c):
    rng = random.Random(seed)
    s = UabcShape(a, 1, c)
    Y = random_matrix(rng, a, 2 * c, F7) if c else None
    Z, Z2 = random_mat0(rng, a, F7), random_mat0(rng, a, F7)
    zero = Matrix.zeros(a, 2 * c, F7) if c else None
    lhs = u_prime(s, Y, Z, F7) @ u_prime(s, zero, Z2, F7)
    assert lhs.matrix == u_prime(s, Y, Z + Z2, F7).matrix
    assert is_symplectic(lhs.matrix, s.size)


def test_mat0_membership():
    assert in_mat0(Matrix([[1, 2], [3, 1]]))
    assert not in_mat0(Matrix([[1, 0], [0, 0]]))


def test_factorize_identity():
    s = UabcShape(2, 2, 1)
    fac = factorize(u_prime(s, [[0, 0], [0, 0]], [[0, 0], [0, 0]]), s)
    assert fac.Z.is_zero() and fac.Y.is_zero()
    assert all(X.is_zero() for X in fac.X)
    assert fac.u1.is_identity()


def test_factorize_recovers_coordinate():
    s = UabcShape(2, 2, 1)
    Y = [[1, 2], [3, 4]]
    Z = [[1, 2], [5, 1]]
    X = [[1, 6], [2, 3]]
    u = u_prime(s, Y, Z, F7) @ u_coordinate(s, 1, X, F7)
    fac = factorize(u, s)
    assert fac.X[0] == Matrix(X, F7)
    assert fac.Y == Matrix(Y, F7)
    assert fac.Z == Matrix(Z, F7)
    assert fac.u1.is_identity()


@settings(max_examples=40)
@given(seeds, shapes)
def test_factorize_roundtrip(seed, shape):
    u = random_U(random.Random(seed), shape, F7)
    assert is_symplectic(u.matrix, shape.size)
    assert is_in_U(u.matrix, shape)
    fac = factorize(u, shape)
    assert in_mat0(fac.Z)
    assert fac.reassemble().matrix == u.matrix


def test_factorize_rejects_non_members():
    s = UabcShape(1, 2, 1)
    with pytest.raises(ValueError):
        factorize(t_element(2, 6, F7), s)


def test_psi_U_examples():
    s = UabcShape(2, 3, 1)
    assert psi_U(u_prime(s, [[0, 0], [0, 0]], [[0, 0], [0, 0]], F7), s) == 0
    X = [[3, 1], [4, 6]]
    assert psi_U(u_coordinate(s, 2, X, F7), s) == 9 % 7
    assert psi_U(u_prime(s, [[1, 2], [3, 4]], [[1, 2], [5, 1]], F7), s) == 0
    assert psi_U(u_coordinate(s, 1, [[1, 0], [0, 1]]), s, p=7) == 2


@settings(max_examples=30)
@given(seeds, shapes)
def test_psi_U_is_additive(seed, shape):
    rng = random.Random(seed)
    u, v = random_U(rng, shape, F7), random_U(rng, shape, F7)
    assert psi_U(u @ v, shape) == psi_U(u, shape) + psi_U(v, shape)


def test_psi_U_vanishes_without_coordinates():
    s = UabcShape(2, 1, 1)
    assert psi_U(random_U(random.Random(3), s, F7), s) == 0


def test_psi_alpha_examples():
    assert psi_alpha(Matrix.zeros(4, 4), 1) == 0
    Z = Matrix([[5, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 5]])
    assert psi_alpha(Z, 1) == 5
    with pytest.raises(ValueError):
        psi_alpha(Z, 3)


@given(seeds, st.integers(2, 6))
def test_psi_alpha_depends_only_on_top_block(seed, k):
    rng = random.Random(seed)
    alpha = rng.randint(0, k // 2)
    Z = random_mat0(rng, k, F7)
    W = random_mat0(rng, k, F7)
    # overwrite everything outside the top-left alpha block of W by Z
    W2 = Z.with_block(0, 0, W.block(0, alpha, 0, alpha)) if alpha else Z
    if in_mat0(W2):
        assert psi_alpha(W2, alpha, F7) == psi_alpha(W, alpha, F7)


def test_root_subgroup_examples():
    assert root_subgroup("long", 1, 4, 0, 4).matrix.is_identity()
    for t in (1, 2, Fraction(-3, 5)):
        assert is_symplectic(root_subgroup("long", 1, 4, t, 4).matrix, 4)
    short = root_subgroup("short", 1, 2, 1, 4).matrix
    assert short[0, 1] == 1 and short[2, 3] in (1, -1)
    assert is_symplectic(short, 4)
    with pytest.raises(ValueError):
        root_subgroup("long", 1, 3, 1, 4)
    with pytest.raises(ValueError):
        root_subgroup("short", 1, 4, 1, 4)


@pytest.mark.parametrize("two_l", [2, 4, 6, 8])
def test_root_subgroup_signs_unambiguous_and_match_lie_roots(two_l):
    for i in range(1, two_l + 1):
        for j in range(1, two_l + 1):
            if i == j:
                continue
            kind = "long" if i + j == two_l + 1 else "short"
            try:
                g = root_subgroup(kind, i, j, 1, two_l)
            except AmbiguousSignError:
                pytest.fail(f"ambiguous sign at ({i}, {j})")
            assert g.matrix == Matrix.identity(two_l) + sp_root_matrix(i, j, two_l)


def test_commutator_examples():
    a = t_element(2, 4)
    b = t_element(3, 4)
    assert commutator(a, b).is_identity()
    u, v = HeisenbergElement((1, 2), (0, 1), 0), HeisenbergElement((3, 0), (1, 1), 2)
    lhs = commutator(tau_embed(u), tau_embed(v)).matrix
    assert lhs == tau_embed(heisenberg_commutator(u, v)).matrix
    x = root_subgroup("short", 1, 2, 1, 8)
    y = root_subgroup("short", 3, 4, 1, 8)
    assert commutator(x, y).is_identity()
