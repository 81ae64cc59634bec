from fractions import Fraction

import pytest

from conftest import TABLE1
from nsk.errors import GenusTooSmall, Hyperelliptic, NotSymmetric
from nsk.invariants import (
    canonical_normal_degree,
    monomial_curve_invariants,
    normal_degree_general,
    smooth_or_lci_consistency,
)
from nsk.semigroup import enumerate_by_genus, from_generators


def test_3_5():
    inv = monomial_curve_invariants(from_generators([3, 5]))
    assert (inv.genus, inv.tjurina, inv.normal_degree, inv.normal_rank) == (4, 8, 30, 2)
    assert inv.slope == 15 and inv.slope.denominator == 1
    assert (inv.delta, inv.theta, inv.lambda_, inv.deligne) == (4, 4, 1, 8)
    assert (inv.ambient_dim, inv.curve_degree) == (3, 6)


@pytest.mark.parametrize("gens,g,tau,deg", [((6, 8, 9, 10, 11), 7, 17, 99), ((4, 6, 9), 6, 12, 70)])
def test_examples(gens, g, tau, deg):
    inv = monomial_curve_invariants(from_generators(gens))
    assert (inv.genus, inv.tjurina, inv.normal_degree) == (g, tau, deg)


def test_4_6_9_matches_projective_scroll_degree():
    inv = monomial_curve_invariants(from_generators([4, 6, 9]))
    assert inv.normal_degree == 2 * (inv.genus - 1) * (inv.genus + 1)


@pytest.mark.parametrize("gens,g,tau,deg", TABLE1)
def test_invariant_identities(gens, g, tau, deg):
    inv = monomial_curve_invariants(from_generators(gens))
    assert inv.deligne == 3 * inv.delta - inv.theta
    assert inv.theta == 1 + inv.genus - inv.lambda_
    assert inv.slope * inv.normal_rank == inv.normal_degree
    assert inv.normal_degree == canonical_normal_degree(inv.genus, inv.tjurina)
    assert isinstance(inv.slope, Fraction)


def test_general_formula_examples():
    assert normal_degree_general(4, 3, 6, 5, 5) == 30
    assert normal_degree_general(0, 2, 1, 0, 0) == 1


@pytest.mark.parametrize("d", range(1, 9))
def test_plane_curve_degree_is_d_squared(d):
    g = (d - 1) * (d - 2) // 2
    assert normal_degree_general(g, 2, d, 3, 3) == d * d


def test_lci_consistency():
    assert smooth_or_lci_consistency(4, 3, 6) == 30
    assert smooth_or_lci_consistency(5, 4, 8) == 48
    for g in range(3, 20):
        assert smooth_or_lci_consistency(g, g - 1, 2 * g - 2) == 2 * (g * g - 1)


def test_symmetric_identities_and_ci_rows():
    for g in range(3, 9):
        for S in enumerate_by_genus(g, symmetric=True, non_hyperelliptic=True):
            inv = monomial_curve_invariants(S)
            assert (inv.lambda_, inv.theta, inv.deligne) == (1, g, 2 * g)
            if S.embedding_dimension <= 3:
                assert inv.tjurina == 2 * g
                assert inv.normal_degree == 2 * (g * g - 1)


def test_rejections():
    with pytest.raises(NotSymmetric):
        monomial_curve_invariants(from_generators([4, 5, 7]))
    with pytest.raises(Hyperelliptic):
        monomial_curve_invariants(from_generators([2, 9]))
    with pytest.raises(GenusTooSmall):
        monomial_curve_invariants(from_generators([2, 3]))
