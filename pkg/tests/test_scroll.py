from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nsk.errors import ArityMismatch, BadBSum, BadPartition
from nsk.invariants import normal_degree_general
from nsk.scroll import (
    DivisorClass,
    H,
    R,
    ScrollModel,
    canonical_class,
    ci_projective_stability,
    enumerate_tetragonal,
    intersection_number,
    parse_class,
    tetragonal_invariants,
    tetragonal_model,
)
from oracles import expand_intersection

S111 = ScrollModel((1, 1, 1))
classes = st.builds(DivisorClass, st.integers(-6, 6), st.integers(-6, 6))


def test_pic_relations():
    assert intersection_number(S111, [H, H, H]) == 3
    assert intersection_number(S111, [H, H, R]) == 1
    assert intersection_number(S111, [R, R, H]) == 0


def test_arity():
    with pytest.raises(ArityMismatch):
        intersection_number(S111, [H, H])


@given(e=st.lists(st.integers(0, 5), min_size=2, max_size=4), data=st.data())
@settings(max_examples=100, deadline=None)
def test_matches_full_expansion(e, data):
    S = ScrollModel(tuple(e))
    cs = data.draw(st.lists(classes, min_size=S.dim, max_size=S.dim))
    assert intersection_number(S, cs) == expand_intersection(S.degree, [(c.a, c.b) for c in cs])


@given(x=classes, y=classes, z=classes, w=classes, k=st.integers(-4, 4), perm=st.permutations(range(3)))
@settings(max_examples=100, deadline=None)
def test_multilinear_and_symmetric(x, y, z, w, k, perm):
    S = ScrollModel((3, 1, 0))
    base = [x, y, z]
    assert intersection_number(S, [base[i] for i in perm]) == intersection_number(S, base)
    lhs = intersection_number(S, [x + k * w, y, z])
    assert lhs == intersection_number(S, [x, y, z]) + k * intersection_number(S, [w, y, z])


@pytest.mark.parametrize("e,expected", [((1, 1, 1), DivisorClass(-3, 1)), ((2, 2), DivisorClass(-2, 2)),
                                        ((3, 0, 0), DivisorClass(-3, 1))])
def test_canonical_class(e, expected):
    assert canonical_class(ScrollModel(e)) == expected


def test_scroll_model_fields():
    S = ScrollModel((0, 3, 0))
    assert S.e_list == (3, 0, 0)
    assert (S.dim, S.degree, S.ambient_dim, S.smooth, S.vertex_dim) == (3, 3, 5, False, 1)
    assert ScrollModel((1, 1, 1)).vertex_dim is None


def test_parse_class():
    assert parse_class("2H-1R") == DivisorClass(2, -1)
    assert parse_class("1H+0R") == H
    assert parse_class("-3H+1R") == DivisorClass(-3, 1)
    with pytest.raises(ValueError):
        parse_class("2H")


def test_tetragonal_flags():
    m = tetragonal_model(6, [1, 1, 1], 1, 0)
    assert m.admissible and not m.bielliptic and not m.has_g25
    assert tetragonal_model(6, [3, 0, 0], 1, 0).bielliptic
    assert tetragonal_model(6, [2, 1, 0], 2, -1).has_g25


def test_tetragonal_errors():
    with pytest.raises(BadPartition):
        tetragonal_model(6, [1, 1, 2], 1, 0)
    with pytest.raises(BadPartition):
        tetragonal_model(6, [2, 1], 1, 0)
    with pytest.raises(BadBSum):
        tetragonal_model(6, [1, 1, 1], 1, 1)
    with pytest.raises(BadBSum):
        tetragonal_model(7, [2, 1, 1], 4, -2)


def test_genus6_invariants():
    rep = tetragonal_invariants(tetragonal_model(6, [1, 1, 1], 1, 0))
    assert (rep.hc, rep.rc, rep.deg_n_scroll, rep.mu_scroll) == (10, 4, 36, 18)
    assert rep.deg_n_projective == 70
    assert rep.mu_projective == Fraction(70, 4)
    assert rep.unstable_in_p


def test_genus7_invariants():
    for m in enumerate_tetragonal(7):
        rep = tetragonal_invariants(m)
        assert rep.deg_n_scroll == 40
        assert rep.deg_n_projective == 96


@pytest.mark.parametrize("g", range(6, 31))
def test_closed_form_identities_over_genus(g):
    for m in enumerate_tetragonal(g):
        assert canonical_class(m.scroll) + m.y1 + m.y2 == H
        rep = tetragonal_invariants(m)
        assert rep.adjunction_genus == g
        assert rep.rc == 4
        assert rep.hc == 2 * g - 2
        assert sum(rep.summand_degrees) == rep.deg_n_scroll == 4 * g + 12
        assert rep.deg_n_projective - rep.deg_n_scroll == 2 * (g * g - 2 * g - 7)
        assert rep.deg_n_projective == 2 * (g - 1) * (g + 1)
        assert rep.mu_projective < rep.mu_scroll
        assert max(rep.summand_degrees) >= rep.mu_scroll


def test_genus5_boundary():
    for m in enumerate_tetragonal(5):
        rep = tetragonal_invariants(m)
        assert rep.mu_scroll == rep.mu_projective == 16
        assert not rep.unstable_in_p


def test_enumerate_genus6():
    models = enumerate_tetragonal(6)
    assert {m.scroll.e_list for m in models} == {(3, 0, 0), (2, 1, 0), (1, 1, 1)}
    general = [m for m in models if m.scroll.smooth and not m.bielliptic and not m.has_g25]
    assert {m.scroll.e_list for m in general} == {(1, 1, 1)}
    assert {m.scroll.e_list for m in models if m.general} == {(1, 1, 1)}


def test_enumerate_genus7_partitions():
    assert {m.scroll.e_list for m in enumerate_tetragonal(7)} == {
        (4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1)}
    assert all(m.b1 + m.b2 == 2 and m.b1 >= m.b2 >= -1 for m in enumerate_tetragonal(7))


def test_ci_genus4():
    rep = ci_projective_stability(3, [2, 3])
    assert (rep.curve_degree, rep.genus, rep.deg_n, rep.mu, rep.verdict) == (6, 4, 30, 15, "unstable")
    assert set(rep.summand_slopes) == {12, 18}


def test_ci_genus5():
    rep = ci_projective_stability(4, [2, 2, 2])
    assert (rep.curve_degree, rep.genus, rep.deg_n, rep.mu, rep.verdict) == (8, 5, 48, 16, "polystable")
    assert rep.summand_slopes == (16, 16, 16)


def test_ci_elliptic_quartic():
    rep = ci_projective_stability(3, [2, 2])
    assert (rep.curve_degree, rep.genus, rep.deg_n, rep.mu, rep.verdict) == (4, 1, 16, 8, "polystable")


@pytest.mark.parametrize("n,degs", [(3, [2, 4]), (3, [3, 3]), (4, [2, 2, 3]), (5, [2, 2, 2, 2])])
def test_ci_agrees_with_general_formula(n, degs):
    rep = ci_projective_stability(n, degs)
    e = tau = 7  # any equal pair cancels
    assert rep.deg_n == normal_degree_general(rep.genus, n, rep.curve_degree, tau, e)


def test_ci_arity():
    with pytest.raises(ArityMismatch):
        ci_projective_stability(4, [2, 2])
