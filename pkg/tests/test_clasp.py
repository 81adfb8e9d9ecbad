import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clasptools.clasp import (
    TYPE_II,
    TYPE_X,
    ClaspParams,
    conway_model,
    enumerate_params,
    kadokami_kawamura_excluded,
    link_to_params,
    model_coefficients,
    p0_model,
    params_to_link,
    typeX_parity_obstruction,
    typeX_sum_of_squares_search,
)
from clasptools.laurent import LaurentPoly

P = LaurentPoly.parse

signs = st.sampled_from([1, -1])
small = st.integers(min_value=-6, max_value=6)
types = st.sampled_from([TYPE_X, TYPE_II])
params = st.builds(ClaspParams, signs, signs, small, small, small, types)


def test_conway_model_frozen_examples():
    assert conway_model(ClaspParams(1, 1, 1, 1, 0, TYPE_II)) == P("1 + 2*z^2 + 1*z^4")
    assert conway_model(ClaspParams(1, 1, 0, 0, 0, TYPE_II)) == P("1")
    assert conway_model(ClaspParams(1, 1, 0, 0, 0, TYPE_X)) == P("1 + 1*z^2")


@given(params)
@settings(max_examples=200, deadline=None)
def test_conway_model_shape(p):
    m = conway_model(p)
    assert m.coefficient(0, 0) == 1
    assert all(ez in (0, 2, 4) and ev == 0 for (ev, ez), _ in m.items())


@given(params)
@settings(max_examples=200, deadline=None)
def test_clasp_relabeling_symmetry(p):
    assert conway_model(p.swapped()) == conway_model(p)


def test_link_to_params():
    assert link_to_params(0, 0, 0) == (0, 0, 0)
    assert link_to_params(-1, 1, 1) == (1, 0, 0)


@given(small, small, small)
@settings(max_examples=100, deadline=None)
def test_link_round_trip(l, l1, l2):
    assert link_to_params(*params_to_link(l, l1, l2)) == (l, l1, l2)


def test_enumerate_params_examples():
    sols = enumerate_params(2, 1, TYPE_II, 3)
    assert ClaspParams(1, 1, 1, 1, 0, TYPE_II) in sols
    assert sols == sorted(sols)
    base = enumerate_params(0, 0, TYPE_II, 0)
    assert len(base) == 4
    assert {(p.eps1, p.eps2) for p in base} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert all(p.l1 == p.l2 == p.l == 0 for p in base)
    # Kadokami-Kawamura congruence pair: no solutions of either type.
    assert enumerate_params(2, 3, TYPE_II, 10) == []
    assert enumerate_params(2, 3, TYPE_X, 10) == []


@given(st.integers(-4, 4), st.integers(-4, 4), types)
@settings(max_examples=40, deadline=None)
def test_enumerate_params_matches_brute_force(a2, a4, disk_type):
    bound = 4
    brute = []
    for e1 in (1, -1):
        for e2 in (1, -1):
            for l1 in range(-bound, bound + 1):
                for l2 in range(-bound, bound + 1):
                    for l in range(-bound, bound + 1):
                        p = ClaspParams(e1, e2, l1, l2, l, disk_type)
                        if model_coefficients(p) == (a2, a4):
                            brute.append(p)
    assert enumerate_params(a2, a4, disk_type, bound) == sorted(brute)


def test_typeX_parity_obstruction():
    assert typeX_parity_obstruction(0, 1)
    assert not typeX_parity_obstruction(1, 1)
    assert typeX_parity_obstruction(2, -1)


@given(signs, signs, st.integers(-10, 10), st.integers(-10, 10), st.integers(-10, 10))
@settings(max_examples=300, deadline=None)
def test_parity_obstruction_contrapositive(e1, e2, l1, l2, l):
    # Parameter-level parity law: a type-X model with odd a4 has odd a2.
    a2, a4 = model_coefficients(ClaspParams(e1, e2, l1, l2, l, TYPE_X))
    if a4 % 2 == 1:
        assert a2 % 2 == 1


def test_kadokami_kawamura():
    assert kadokami_kawamura_excluded(2, 3)
    assert not kadokami_kawamura_excluded(2, 1)
    assert kadokami_kawamura_excluded(-2, -5)
    assert not kadokami_kawamura_excluded(1, 3)


def test_p0_model_trefoil_arithmetic():
    one = LaurentPoly.one()
    m = p0_model(ClaspParams(1, 1, 0, 0, 0, TYPE_X), one, one)
    assert m == P("2*v^2 + -1*v^4")


def test_p0_model_type_ii_second_evaluation():
    # Independent hand evaluation of the type II formula at
    # eps = (+1, -1), all linking numbers zero, companions 1:
    #   v^0 + v^-1(v^-1 - v) - v^1(v^-1 - v) - v^0 (v^-1 - v)^2
    one = LaurentPoly.one()
    w = P("1*v^-1 + -1*v")
    expect = (
        LaurentPoly.one()
        + w.shift(-1, 0)
        - w.shift(1, 0)
        - w * w
    )
    got = p0_model(ClaspParams(1, -1, 0, 0, 0, TYPE_II), one, one, one)
    assert got == expect


def test_p0_model_argument_validation():
    one = LaurentPoly.one()
    with pytest.raises(ValueError):
        p0_model(ClaspParams(1, 1, 0, 0, 0, TYPE_II), one, one)
    with pytest.raises(ValueError):
        p0_model(ClaspParams(1, 1, 0, 0, 0, TYPE_X), one, one, one)


@given(params, st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=100, deadline=None)
def test_p0_model_specializes_to_one_at_v_1(p, c1, c2):
    # Any companion polynomials with value 1 at v = 1 (true of every p0).
    comp1 = P("1") + LaurentPoly({(2, 0): c1, (0, 0): -c1})
    comp2 = P("1") + LaurentPoly({(-2, 0): c2, (0, 0): -c2})
    comp3 = comp1 * comp2
    if p.disk_type == TYPE_II:
        m = p0_model(p, comp1, comp2, comp3)
    else:
        m = p0_model(p, comp1, comp2)
    assert m.substitute_v(1) == LaurentPoly.one()


def test_sum_of_squares_examples():
    r = typeX_sum_of_squares_search(P("1*v^4"), 1, 1, 3, 8)
    assert r.status == "found" and r.f1.is_zero() and r.f2.is_zero()
    r = typeX_sum_of_squares_search(P("2*v^2 + -1*v^4"), 1, 1, 3, 8)
    assert r.status == "found"
    assert (r.f1 * r.f1) + (r.f2 * r.f2) == P("2*v^4")
    r = typeX_sum_of_squares_search(P("1*v^2 + 1"), 1, 1, 3, 8)
    assert r.status == "refuted"


def _brute_square_pairs(r, e1, e2, D, C):
    """Literal enumeration over the bounded parity-class boxes."""
    cands = [LaurentPoly.zero()]
    for parity in (0, 1):
        slots = [s for s in range(-D, D + 1) if s % 2 == parity]
        def grow(i, cur):
            if i == len(slots):
                if any(cur.values()):
                    cands.append(LaurentPoly({(s, 0): c for s, c in cur.items()}))
                return
            for c in range(-C, C + 1):
                cur[slots[i]] = c
                grow(i + 1, cur)
            del cur[slots[i]]
        grow(0, {})
    for f1 in cands:
        for f2 in cands:
            if (f1 * f1).shift(0, 0, e1) + (f2 * f2).shift(0, 0, e2) == r:
                return f1, f2
    return None


@given(
    st.dictionaries(st.sampled_from([-2, 0, 2]), st.integers(-4, 4), max_size=3),
    signs,
    signs,
)
@settings(max_examples=30, deadline=None)
def test_sum_of_squares_search_is_complete_on_small_box(terms, e1, e2):
    D, C = 2, 2
    r = LaurentPoly({(s, 0): c for s, c in terms.items()})
    p0_like = r * P("1*v^-2 + -1") + LaurentPoly.term(1, ev=2 * (e1 + e2))
    res = typeX_sum_of_squares_search(p0_like, e1, e2, D, C)
    brute = _brute_square_pairs(r, e1, e2, D, C)
    if brute is None:
        assert res.status == "inconclusive"
    else:
        assert res.status == "found"


def test_p0_model_reproduces_census_witness():
    # End-to-end pipeline: the two-bridge knot 6_2 arises from a type-II
    # clasp disk over the Hopf-sum chain (all companions unknots); some
    # enumerated parameter choice must reproduce its measured p0 exactly.
    from clasptools.census import load_census
    from clasptools.skein import SkeinEngine

    eng = SkeinEngine()
    d = load_census()["6_2"]
    a2, a4 = eng.conway_coefficients(d)
    target = eng.p0(d)
    one = LaurentPoly.one()
    sols = enumerate_params(a2, a4, TYPE_II, 5)
    witnesses = [p for p in sols if p0_model(p, one, one, one) == target]
    assert witnesses
    assert ClaspParams(1, -1, 1, 2, -1, TYPE_II) in witnesses
