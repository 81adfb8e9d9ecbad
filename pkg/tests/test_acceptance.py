"""Acceptance criteria, one test each, with the stated time budgets.

Every check is exact (integer/polynomial equality); each test prints a
single PASS line on success.  Criterion 4 requires the five named
11-/12-crossing census knots whose PD codes are table data unavailable
to this build; it runs faithfully and fails with the blocking analysis
when those entries are absent.
"""

import time

import pytest

from clasptools.census import COROLLARY12_NAMES, load_census, load_exceptional
from clasptools.clasp import (
    TYPE_II,
    TYPE_X,
    ClaspParams,
    enumerate_params,
    kadokami_kawamura_excluded,
    typeX_parity_obstruction,
)
from clasptools.laurent import LaurentPoly
from clasptools.openbook import OpenBookTriple, classify_triple, classified_trivial_set
from clasptools.skein import SkeinEngine
from clasptools.tangle import (
    ExtendedRational,
    MontesinosDesc,
    continued_fraction,
    evaluate_continued_fraction,
    montesinos_diagram,
    montesinos_equivalent,
    theorem1_catalog,
)

import oracle

ENGINE = SkeinEngine()
CENSUS = load_census(engine=ENGINE)


def _elapsed_guard(t0, limit, label):
    dt = time.time() - t0
    assert dt < limit, f"{label} took {dt:.1f}s, budget {limit}s"
    return dt


def test_criterion_1_skein_oracle_equivalence():
    t0 = time.time()
    checked = 0
    for name, d in sorted(CENSUS.items()):
        if d.num_crossings > 9:
            continue
        P = oracle.homfly_bruteforce(d)
        assert ENGINE.homfly(d) == P, name
        assert ENGINE.conway(d) == P.substitute_v(1), name
        assert ENGINE.p0(d) == oracle.p0_bruteforce(d), name
        checked += 1
    assert checked >= 6
    dt = _elapsed_guard(t0, 60, "criterion 1")
    print(f"\nPASS criterion 1: oracle equivalence on {checked} census diagrams "
          f"(homfly, conway, p0 exact) in {dt:.1f}s")


def test_criterion_2_theorem_2_1_realization():
    t0 = time.time()
    tre, f8 = CENSUS["3_1"], CENSUS["4_1"]
    targets = {
        "3_1#3_1": tre.connected_sum(tre),
        "3_1#4_1": tre.connected_sum(f8),
        "4_1#4_1": f8.connected_sum(f8),
        "3_1#mirror(3_1)": tre.connected_sum(tre.mirror()),
    }
    for name, d in targets.items():
        a2, a4 = ENGINE.conway_coefficients(d)
        sols = enumerate_params(a2, a4, TYPE_II, 5)
        assert sols, f"{name}: no type-II parameters within bound 5"
    a2, a4 = ENGINE.conway_coefficients(targets["3_1#3_1"])
    assert (a2, a4) == (2, 1)
    assert ClaspParams(1, 1, 1, 1, 0, TYPE_II) in enumerate_params(2, 1, TYPE_II, 5)
    dt = _elapsed_guard(t0, 1, "criterion 2")
    print(f"\nPASS criterion 2: type-II parameters realize all four connected sums "
          f"in {dt:.2f}s")


def test_criterion_3_kadokami_kawamura_consistency():
    t0 = time.time()
    pairs = 0
    for a2 in range(-10, 11):
        for a4 in range(-11, 12):
            if not (a4 % 8 == 3 and a2 % 4 == 2):
                continue
            assert kadokami_kawamura_excluded(a2, a4)
            assert enumerate_params(a2, a4, TYPE_II, 50) == [], (a2, a4)
            assert enumerate_params(a2, a4, TYPE_X, 50) == [], (a2, a4)
            pairs += 1
    assert pairs == 18
    dt = _elapsed_guard(t0, 30, "criterion 3")
    print(f"\nPASS criterion 3: {pairs} excluded (a2, a4) pairs have empty "
          f"parameter sets at bound 50 in {dt:.1f}s")


def test_criterion_4_corollary_1_2_reproduction():
    t0 = time.time()
    missing = [n for n in COROLLARY12_NAMES if n not in CENSUS]
    if missing:
        pytest.fail(
            "criterion 4 BLOCKED: census lacks PD codes for "
            + ", ".join(missing)
            + ". These are pure knot-table data; this build environment has no "
            "knot-table source (no network, no table package on the internal "
            "mirror), and no independent derivation "
            "route for these specific diagrams exists. Fabricating codes would corrupt "
            "the reproduction, so the criterion is left honestly failing. "
            "Dropping correct PD codes into data/census.tsv makes this test "
            "run in full."
        )
    entries = theorem1_catalog(6, census=CENSUS, exceptional=load_exceptional())
    catalog_pairs = []
    for e in entries:
        if e.diagram is None:
            continue
        catalog_pairs.append((ENGINE.conway(e.diagram), ENGINE.p0(e.diagram)))
    for name in COROLLARY12_NAMES:
        d = CENSUS[name]
        nabla = ENGINE.conway(d)
        a2, a4 = nabla.coefficient(0, 2), nabla.coefficient(0, 4)
        assert a2 % 2 == 0, name
        assert a4 in (1, -1), name
        assert typeX_parity_obstruction(a2, a4), name
        p0 = ENGINE.p0(d)
        for cn, cp in catalog_pairs:
            assert not (cn == nabla and cp in (p0, p0.invert_v())), name
    dt = _elapsed_guard(t0, 300, "criterion 4")
    print(f"\nPASS criterion 4: all five knots obstructed and catalog-free in {dt:.0f}s")


def test_criterion_5_montesinos_identities():
    t0 = time.time()
    tre = CENSUS["3_1"]
    pairs = [
        ("-2/3,2,1/2", ENGINE.homfly(CENSUS["6_2"])),
        ("-2/3,-2,1/2", ENGINE.homfly(CENSUS["6_3"])),
        ("-2/5,2,1/2", ENGINE.homfly(CENSUS["7_7"])),
        ("-2/5,-2,1/2", ENGINE.homfly(CENSUS["7_6"].mirror())),
        ("-2/3,inf,-2/3", ENGINE.homfly(tre.connected_sum(tre))),
        ("-2/3,inf,-2/5", ENGINE.homfly(tre.connected_sum(CENSUS["4_1"]))),
        ("-2/5,inf,-2/5", ENGINE.homfly(CENSUS["4_1"].connected_sum(CENSUS["4_1"]))),
    ]
    for desc, expected in pairs:
        got = ENGINE.homfly(montesinos_diagram(MontesinosDesc.parse(desc)))
        assert got == expected, desc
    dt = _elapsed_guard(t0, 60, "criterion 5")
    print(f"\nPASS criterion 5: {len(pairs)} Montesinos identities hold exactly "
          f"in {dt:.1f}s")


def test_criterion_6_openbook_classification():
    t0 = time.time()
    checked = 0
    for a in range(-5, 6):
        for b in range(-5, 6):
            for c in range(-5, 6):
                if not (abs(a) <= abs(b) <= abs(c)):
                    continue
                v = classify_triple(OpenBookTriple(a, b, c))
                assert v.verdict != "inconclusive", (a, b, c)
                expected = classified_trivial_set((a, b, c))
                assert (v.verdict == "trivial-pi1") == expected, (a, b, c, v.verdict)
                checked += 1
    dt = _elapsed_guard(t0, 120, "criterion 6")
    print(f"\nPASS criterion 6: trivial pi1 exactly on the known list over "
          f"{checked} triples, zero inconclusive, in {dt:.1f}s")


def test_criterion_7_catalog_structure():
    t0 = time.time()
    entries = theorem1_catalog(3, census=CENSUS, exceptional=load_exceptional())
    with_diagram = 0
    flagged = 0
    for e in entries:
        if e.diagram is None:
            flagged += 1
            assert e.family == "iv" and e.note, e.name
            continue
        with_diagram += 1
        nabla = ENGINE.conway(e.diagram)
        assert nabla.z_degree() == 4, e.name
        assert nabla.coefficient(0, 4) in (1, -1), e.name
        a2 = nabla.coefficient(0, 2)
        assert enumerate_params(a2, nabla.coefficient(0, 4), TYPE_II, 10), e.name
    assert flagged in (0, 12)
    dt = _elapsed_guard(t0, 120, "criterion 7")
    note = f" ({flagged} exceptional entries shipped without diagrams)" if flagged else ""
    print(f"\nPASS criterion 7: {with_diagram} catalog knots have degree-4 monic "
          f"Conway polynomials and type-II parameters in {dt:.0f}s{note}")


def test_criterion_8_property_suites():
    t0 = time.time()
    vinv = LaurentPoly.term(1, ev=-1)
    v = LaurentPoly.term(1, ev=1)
    z = LaurentPoly.term(1, ez=1)
    # Skein relation at every crossing of every census diagram.
    crossings = 0
    for name, d in sorted(CENSUS.items()):
        for k in range(d.num_crossings):
            pos = d if d.signs[k] > 0 else d.switch_crossing(k)
            neg = d.switch_crossing(k) if d.signs[k] > 0 else d
            sm = d.smooth_crossing(k)
            assert vinv * ENGINE.homfly(pos) - v * ENGINE.homfly(neg) == z * ENGINE.homfly(sm), (name, k)
            crossings += 1
    # HOMFLY multiplicativity under connected sum.
    names = ["3_1", "4_1", "6_2"]
    for n1 in names:
        for n2 in names:
            s = CENSUS[n1].connected_sum(CENSUS[n2])
            assert ENGINE.homfly(s) == ENGINE.homfly(CENSUS[n1]) * ENGINE.homfly(CENSUS[n2])
    # p0 split-union formula.
    factor = LaurentPoly({(-2, 0): 1, (0, 0): -1})
    for n1 in names:
        for n2 in names:
            u = CENSUS[n1].disjoint_union(CENSUS[n2])
            assert ENGINE.p0(u) == factor * ENGINE.p0(CENSUS[n1]) * ENGINE.p0(CENSUS[n2])
    # Continued-fraction round trips (200 rationals, |p|, q <= 40).
    import random

    rng = random.Random(20250808)
    done = 0
    while done < 200:
        p = rng.randint(-40, 40)
        q = rng.randint(1, 40)
        if p == 0:
            continue
        r = ExtendedRational(p, q)
        cf = continued_fraction(r)
        assert evaluate_continued_fraction(cf) == r.as_fraction()
        done += 1
    # Montesinos equivalence axioms on random triples.
    def rand_desc():
        def f():
            while True:
                p = rng.randint(-9, 9)
                if p:
                    return ExtendedRational(p, rng.randint(1, 9))
        return MontesinosDesc.of(f(), f(), f())

    for _ in range(150):
        m1, m2, m3 = rand_desc(), rand_desc(), rand_desc()
        assert montesinos_equivalent(m1, m1)
        assert montesinos_equivalent(m1, m2) == montesinos_equivalent(m2, m1)
        if montesinos_equivalent(m1, m2) and montesinos_equivalent(m2, m3):
            assert montesinos_equivalent(m1, m3)
    dt = _elapsed_guard(t0, 300, "criterion 8")
    print(f"\nPASS criterion 8: skein identity at {crossings} crossings, "
          f"multiplicativity, split-union, round-trips, equivalence axioms in {dt:.1f}s")
