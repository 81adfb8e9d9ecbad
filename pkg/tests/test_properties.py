"""Randomized structural properties over braid-closure diagrams.

Closed braids give an endless supply of valid oriented diagrams, which
makes them a good fuzzing substrate for the surgery operations and the
skein engines.
"""

from hypothesis import given, settings
from hypothesis import strategies as st

from clasptools.diagram import Diagram
from clasptools.laurent import LaurentPoly, extract_p_i
from clasptools.skein import SkeinEngine
from clasptools.tangle import closed_braid

import oracle

eng = SkeinEngine()

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, min_size=1, max_size=7)


def build(word):
    return closed_braid(word, 3)


@given(words)
@settings(max_examples=60, deadline=None)
def test_simplify_preserves_homfly(word):
    d = build(word)
    assert eng.homfly(d.simplify()) == eng.homfly(d)


@given(words, st.integers(0, 10))
@settings(max_examples=60, deadline=None)
def test_skein_relation_random_crossing(word, pick):
    d = build(word)
    if d.num_crossings == 0:
        return
    k = pick % d.num_crossings
    pos = d if d.signs[k] > 0 else d.switch_crossing(k)
    neg = d.switch_crossing(k) if d.signs[k] > 0 else d
    vinv = LaurentPoly.term(1, ev=-1)
    v = LaurentPoly.term(1, ev=1)
    z = LaurentPoly.term(1, ez=1)
    assert vinv * eng.homfly(pos) - v * eng.homfly(neg) == z * eng.homfly(d.smooth_crossing(k))


@given(words)
@settings(max_examples=50, deadline=None)
def test_invariant_routes_agree(word):
    d = build(word)
    P = eng.homfly(d)
    assert eng.conway(d) == P.substitute_v(1)
    assert eng.p0(d) == extract_p_i(P, d.num_components, 0)


@given(words)
@settings(max_examples=25, deadline=None)
def test_engine_matches_oracle_on_random_diagrams(word):
    d = build(word)
    if d.num_crossings > 7:
        return
    assert eng.homfly(d) == oracle.homfly_bruteforce(d)


@given(words, st.integers(0, 10))
@settings(max_examples=60, deadline=None)
def test_switch_is_involution(word, pick):
    d = build(word)
    if d.num_crossings == 0:
        return
    k = pick % d.num_crossings
    assert d.switch_crossing(k).switch_crossing(k).canonical_code() == d.canonical_code()


@given(words, st.integers(0, 10))
@settings(max_examples=60, deadline=None)
def test_smoothing_changes_component_count_by_one(word, pick):
    d = build(word)
    if d.num_crossings == 0:
        return
    k = pick % d.num_crossings
    assert abs(d.smooth_crossing(k).num_components - d.num_components) == 1


@given(words)
@settings(max_examples=40, deadline=None)
def test_mirror_is_involution_and_negates_writhe(word):
    d = build(word)
    m = d.mirror()
    assert m.writhe() == -d.writhe()
    assert m.mirror().canonical_code() == d.canonical_code()


@given(words)
@settings(max_examples=40, deadline=None)
def test_pd_text_round_trip_random(word):
    # Knot PD codes always re-parse exactly; multi-component codes either
    # re-parse exactly or raise the documented ambiguity error (a
    # component lying entirely over the rest has two structurally valid
    # label readings).
    from clasptools.diagram import DiagramError

    d = build(word)
    if d.num_crossings == 0:
        return
    try:
        back = Diagram(d.crossings, d.free_loops)
    except DiagramError as e:
        assert d.num_components > 1 and "ambiguous" in str(e)
        return
    assert back.signs == d.signs


@given(words)
@settings(max_examples=30, deadline=None)
def test_reversing_all_components_preserves_homfly(word):
    # Reversing every component of a link preserves HOMFLY.
    d = build(word)
    rev = d.reverse_components(range(len(d.components)))
    assert eng.homfly(rev) == eng.homfly(d)


@given(words)
@settings(max_examples=30, deadline=None)
def test_linking_matrix_symmetry_and_mirror(word):
    d = build(word)
    n = d.num_components
    m = d.mirror()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            assert d.linking_number(i, j) == d.linking_number(j, i)
            assert m.linking_number(i, j) == -d.linking_number(i, j)
