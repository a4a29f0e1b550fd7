import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetalift.groups import (
    GroupElement,
    HeisenbergElement,
    WeylElement,
    borel_modulus_exponent,
    borel_weights,
    heisenberg_commutator,
    heisenberg_mul,
    is_special_orthogonal,
    is_symplectic,
    parabolic_half_modulus_exponent,
    random_heisenberg,
    random_so,
    random_sp,
    sp_root_element,
    symplectic_form,
    t_element,
    tau_embed,
    tau_inverse,
    weyl_from_placements,
)
from thetalift.matrix import Matrix
from thetalift.scalars import GF, QQ

F7 = GF(7)
seeds = st.integers(0, 10**6)


def hand_form(m):
    """[[0, J], [-J, 0]] written out entry by entry."""
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][n - 1 - i] = 1
        rows[n - 1 - i][i] = -1
    return Matrix(rows)


@pytest.mark.parametrize("m", range(1, 6))
def test_symplectic_form_matches_hand_built(m):
    assert symplectic_form(2 * m) == hand_form(m)


def test_is_symplectic_examples():
    assert is_symplectic(Matrix.identity(4), 4)
    assert is_symplectic(Matrix.diag([2, Fraction(1, 2), 2, Fraction(1, 2)]), 4)
    assert not is_symplectic(Matrix.diag([2, 1, 1, 1]), 4)
    with pytest.raises(ValueError):
        is_symplectic(Matrix.identity(3), 4)


def test_is_special_orthogonal_examples():
    assert is_special_orthogonal(Matrix.identity(3), 3)
    assert is_special_orthogonal(Matrix.diag([3, 1, Fraction(1, 3)]), 3)
    assert not is_special_orthogonal(Matrix([[0, 1], [1, 0]]), 2)


def test_group_element_validates_membership():
    with pytest.raises(ValueError):
        GroupElement(Matrix.diag([2, 1, 1, 1]), "Sp", 4)
    GroupElement.unchecked(Matrix.diag([2, 1, 1, 1]), "Sp")


def test_t_element():
    assert t_element(1, 4).matrix.is_identity()
    assert t_element(2, 4).matrix == Matrix.diag([2, Fraction(1, 2), 2, Fraction(1, 2)])
    assert (t_element(2, 6) @ t_element(3, 6)).matrix == t_element(6, 6).matrix
    assert is_symplectic(t_element(5, 8).matrix, 8)
    with pytest.raises(ValueError):
        t_element(0, 4)


@given(seeds, st.integers(1, 6))
def test_symplectic_closed_under_products(seed, m):
    rng = random.Random(seed)
    A = random_sp(rng, 2 * m, F7, steps=2 * m)
    B = random_sp(rng, 2 * m, F7, steps=2 * m)
    assert is_symplectic(A.matrix, 2 * m)
    assert is_symplectic((A @ B).matrix, 2 * m)
    assert (A @ A.inverse()).is_identity()


@given(seeds, st.integers(2, 6))
def test_random_so_is_special_orthogonal(seed, k):
    h = random_so(random.Random(seed), k, F7)
    assert is_special_orthogonal(h.matrix, k)


@pytest.mark.parametrize("two_n", [2, 4, 6])
def test_every_root_element_is_symplectic(two_n):
    for i in range(1, two_n + 1):
        for j in range(1, two_n + 1):
            if i != j:
                assert is_symplectic(sp_root_element(i, j, 3, two_n).matrix, two_n)


def test_heisenberg_law_values():
    e = HeisenbergElement.identity(1)
    u = HeisenbergElement((1,), (0,), 0)
    v = HeisenbergElement((0,), (1,), 0)
    assert e @ u == u
    assert heisenberg_mul(u, v) == HeisenbergElement((1,), (1,), Fraction(1, 2))
    assert heisenberg_commutator(u, v) == HeisenbergElement((0,), (0,), 1)


def test_heisenberg_size_mismatch():
    with pytest.raises(ValueError):
        HeisenbergElement.identity(1) @ HeisenbergElement.identity(2)


@given(seeds, st.integers(1, 3))
def test_heisenberg_associative_with_inverses(seed, l):
    rng = random.Random(seed)
    u, v, w = (random_heisenberg(rng, l, F7) for _ in range(3))
    assert (u @ v) @ w == u @ (v @ w)
    assert u @ u.inverse() == HeisenbergElement.identity(l, F7)


def test_tau_examples():
    assert tau_embed(HeisenbergElement.identity(2)).matrix.is_identity()
    t = tau_embed(HeisenbergElement((1,), (0,), 0)).matrix
    assert is_symplectic(t, 4)
    assert t[0, 1] == 1 and t[2, 3] == -1


@given(seeds, st.integers(1, 3))
def test_tau_homomorphism_and_injective(seed, l):
    rng = random.Random(seed)
    u, v = random_heisenberg(rng, l, F7), random_heisenberg(rng, l, F7)
    tu = tau_embed(u)
    assert is_symplectic(tu.matrix, 2 * l + 2)
    assert tu.matrix @ tau_embed(v).matrix == tau_embed(u @ v).matrix
    assert tau_inverse(tu) == u


@given(seeds, st.integers(1, 3))
def test_tau_commutator(seed, l):
    rng = random.Random(seed)
    u, v = random_heisenberg(rng, l, F7), random_heisenberg(rng, l, F7)
    tu, tv = tau_embed(u), tau_embed(v)
    assert (tu @ tv @ tu.inverse() @ tv.inverse()).matrix == \
        tau_embed(heisenberg_commutator(u, v)).matrix


def test_weyl_element_validation():
    with pytest.raises(ValueError):
        WeylElement(Matrix([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        WeylElement(Matrix([[1, 1], [0, 1]]))
    w = WeylElement(Matrix([[0, 1], [-1, 0]]))
    assert w.placements() == [(1, 2, 1), (2, 1, -1)]


@given(st.permutations(range(1, 4)), st.lists(st.sampled_from([1, -1]), min_size=3, max_size=3))
def test_weyl_from_placements_is_symplectic(perm, signs):
    place = {i + 1: (perm[i], signs[i]) for i in range(3)}
    w = weyl_from_placements(6, place)
    assert is_symplectic(w.matrix, 6)
    Om = symplectic_form(6)
    assert w.inverse().matrix == Om.T @ w.matrix.T @ Om
    assert (w.matrix @ w.inverse().matrix).is_identity()


def test_weyl_conjugation_permutes_diagonal():
    w = weyl_from_placements(4, {1: (2, 1), 2: (1, 1)})
    d = [2, 3, Fraction(1, 3), Fraction(1, 2)]
    D = Matrix.diag(d)
    assert w.matrix @ D @ w.inverse().matrix == Matrix.diag(w.conjugate_diagonal(d))


def test_borel_modulus_examples():
    assert borel_modulus_exponent([1], 1) == 2
    assert borel_modulus_exponent([1, 1], 2) == 6
    assert borel_weights(3) == [6, 4, 2]
    with pytest.raises(ValueError):
        borel_modulus_exponent([1, 1], 3)


@pytest.mark.parametrize("N", range(1, 8))
def test_borel_weights_closed_form(N):
    assert borel_weights(N) == [2 * (N - i) + 2 for i in range(1, N + 1)]


@pytest.mark.parametrize("group, size, want", [
    ("Sp", 6, 3), ("SO", 6, 2), ("SO", 5, Fraction(3, 2)), ("SO", 2, 0)])
def test_parabolic_half_modulus(group, size, want):
    assert parabolic_half_modulus_exponent(group, size) == want


@pytest.mark.parametrize("n", range(1, 8))
def test_half_modulus_closed_forms(n):
    assert parabolic_half_modulus_exponent("Sp", 2 * n) == n
    assert parabolic_half_modulus_exponent("SO", n + 2) == Fraction(n + 2, 2) - 1
