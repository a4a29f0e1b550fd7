from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetalift.groups import is_symplectic
from thetalift.matrix import Matrix
from thetalift.orbits import (
    OrbitComparison,
    SymplecticPartition,
    centralizer_dim_oracle,
    composite_is_valid,
    dimension_equation,
    dominance,
    dual_group,
    gk_dim,
    hook_not_below_oc,
    hook_partition,
    hook_vs_oc,
    is_symplectic_partition,
    jordan_type,
    nilpotent_representative,
    o_c,
    oracle_table,
    orbit_dim,
    orbit_dim_oracle,
    symplectic_partitions,
    transpose,
)
from thetalift.groups import symplectic_form

G, L, E, I = (OrbitComparison.GREATER, OrbitComparison.LESS, OrbitComparison.EQUAL,
              OrbitComparison.INCOMPARABLE)
odd_r = st.sampled_from([3, 5, 7, 9, 11, 13])
even = st.integers(0, 30).map(lambda x: 2 * x)


def test_is_symplectic_partition_examples():
    assert is_symplectic_partition((2, 1, 1), 4)
    assert not is_symplectic_partition((3, 1), 4)
    assert is_symplectic_partition((4, 4, 4, 1, 1), 14)
    with pytest.raises(ValueError):
        SymplecticPartition((3, 1), 4)


def test_symplectic_partition_counts():
    # number of nilpotent orbits of sp_2n for n = 1..6
    assert [len(symplectic_partitions(2 * n)) for n in range(1, 7)] == [2, 4, 8, 14, 24, 40]


def test_dominance_examples():
    assert dominance((4,), (2, 2)) is G
    assert dominance((8, 1, 1, 1, 1), (3, 3, 3, 3)) is I
    assert dominance((3, 3, 2), (3, 3, 2)) is E
    assert dominance((2, 2), (4,)) is L
    with pytest.raises(ValueError):
        dominance((2,), (2, 2))


@given(st.integers(1, 6).map(lambda n: 2 * n).flatmap(
    lambda t: st.tuples(*[st.sampled_from(symplectic_partitions(t))] * 3)))
def test_dominance_is_a_partial_order(triple):
    a, b, c = triple
    ge = lambda x, y: dominance(x, y) in (G, E)
    assert dominance(a, a) is E
    if ge(a, b) and ge(b, a):
        assert a == b
    if ge(a, b) and ge(b, c):
        assert ge(a, c)
    flip = {G: L, L: G, E: E, I: I}
    assert dominance(b, a) is flip[dominance(a, b)]


@pytest.mark.parametrize("r, two_l, parts", [
    (3, 4, (2, 2)), (5, 4, (4,)), (3, 8, (3, 3, 2)), (3, 6, (3, 3)), (5, 10, (5, 5)),
    (3, 0, ()), (7, 14, (7, 7)), (5, 12, (5, 5, 2))])
def test_o_c_values(r, two_l, parts):
    assert o_c(r, two_l).parts == parts


@given(odd_r, even)
def test_o_c_is_symplectic_and_periodic(r, two_l):
    lam = o_c(r, two_l)
    assert is_symplectic_partition(lam.parts, two_l)
    bigger = o_c(r, two_l + 2 * r)
    assert bigger.parts == tuple(sorted((r, r) + lam.parts, reverse=True))


def test_o_c_rejects_bad_input():
    with pytest.raises(ValueError):
        o_c(4, 4)
    with pytest.raises(ValueError):
        o_c(3, 5)


def test_transpose():
    assert transpose((3, 3, 2)) == (3, 3, 2)
    assert transpose((4, 1)) == (2, 1, 1, 1)


@pytest.mark.parametrize("parts, two_n, dim", [
    ((1, 1, 1, 1), 4, 0), ((2,), 2, 2), ((3, 3, 2), 8, 24), ((2, 2), 4, 6),
    ((2, 1, 1), 4, 4), ((4,), 4, 8), ((3, 3, 3, 3), 12, 52)])
def test_orbit_dim_values(parts, two_n, dim):
    assert orbit_dim(parts, two_n) == dim
    assert orbit_dim_oracle(parts, two_n) == dim


def test_centralizer_of_zero_orbit_is_everything():
    assert centralizer_dim_oracle((1, 1, 1, 1), 4) == 10


@pytest.mark.parametrize("two_n", [2, 4, 6, 8])
def test_representatives_have_requested_jordan_type(two_n):
    Om = symplectic_form(two_n)
    for lam in symplectic_partitions(two_n):
        X = nilpotent_representative(lam, two_n)
        assert jordan_type(X) == lam.parts
        # X lies in sp: tX Om + Om X = 0
        assert (X.T @ Om + Om @ X).is_zero()


def test_orbit_dim_agrees_with_oracle_exhaustively():
    table = oracle_table(12)
    assert len(table) == 92
    for lam, two_n, formula, oracle in table:
        assert formula == oracle, (lam, two_n)


@pytest.mark.parametrize("N", range(1, 7))
def test_minimal_orbit_gk_dim(N):
    assert gk_dim((2,) + (1,) * (2 * N - 2), 2 * N) == N


def test_gk_dim_values():
    assert gk_dim((1, 1), 2) == 0
    assert gk_dim((3, 3, 2), 8) == 12


@pytest.mark.parametrize("rkn, sides", [((3, 3, 1), 16), ((3, 4, 2), 38), ((5, 3, 1), 46)])
def test_dimension_equation_anchors(rkn, sides):
    assert dimension_equation(*rkn) == (sides, sides)


@pytest.mark.parametrize("r", [3, 5, 7, 9])
def test_dimension_equation_grid(r):
    for k in range(2, 13):
        lhs, rhs = dimension_equation(r, k, k // 2)
        assert lhs == rhs and isinstance(lhs, Fraction)


def test_hook_partition():
    assert hook_partition(3, 12).parts == (8, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        hook_partition(6, 12)


def test_hook_instance():
    assert hook_vs_oc(3, 3, 12) is I


def test_hook_can_dominate_o_c():
    # smallest case where the hook orbit is comparable with o_c
    assert hook_partition(3, 10).parts == (8, 1, 1)
    assert o_c(3, 10).parts == (3, 3, 2, 2)
    assert hook_vs_oc(3, 3, 10) is G


@pytest.mark.parametrize("r", [3, 5, 7])
def test_hook_never_below_o_c(r):
    for two_l in range(2 * r + 4, 50, 2):
        for m in range(r, two_l):
            if 2 * m + 2 < two_l:
                assert hook_not_below_oc(r, m, two_l)


def test_composite_validity():
    assert composite_is_valid(3, (2, 2), 10)
    assert not composite_is_valid(2, (2,), 6)
    assert not composite_is_valid(3, (4,), 10)


@pytest.mark.parametrize("family, size, r, want", [
    ("Sp", 6, 3, "SO_7(C)"), ("Sp", 6, 4, "Sp_6(C)"), ("SO", 7, 3, "Sp_6(C)"),
    ("SO", 7, 2, "SO_7(C)"), ("SO", 6, 5, "SO_6(C)"), ("SO", 6, 2, "SO_6(C)")])
def test_dual_group_table(family, size, r, want):
    assert str(dual_group(family, size, r)) == want


def test_dual_group_rejects_bad_family():
    with pytest.raises(ValueError):
        dual_group("GL", 3, 3)
