from __future__ import annotations

from math import factorial

import pytest

from quadset import harness
from quadset.core import automorphism_count, canonical_form, trivial_set
from quadset.errors import ConsistencyViolation
from quadset.harness import (
    PROFILES,
    QUANTUM_BINOMIAL,
    TheoremReport,
    enumerate_labeled,
    enumerate_sets,
    lemma_violations,
    main_theorem_report,
    orbit_shape_violations,
    raw_table_census,
    survey,
)
from quadset.words import boundary_letters


def test_theorem_examples(e4):
    rep = main_theorem_report(e4)
    assert (rep.cond_garside, rep.cond_regular_quantum, rep.cond_skew, rep.cond_ybe) == (True,) * 4
    assert rep.consistent and rep.delta == (0, 1, 2, 3)
    assert main_theorem_report(trivial_set(5)).consistent


def test_theorem_on_non_braided(nb4):
    rep = main_theorem_report(nb4)
    assert rep.consistent and not rep.cond_ybe


def test_two_letters_has_one_class():
    classes = list(enumerate_sets(2, PROFILES["quantum-binomial-lri"]))
    assert classes == [trivial_set(2)]


@pytest.mark.parametrize("profile", sorted(PROFILES))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_raw_oracle(n, profile):
    labelled = list(enumerate_labeled(n, PROFILES[profile]))
    classes = {canonical_form(s).r_table for s in labelled}
    assert raw_table_census(n, PROFILES[profile]) == (len(labelled), len(classes))


@pytest.mark.parametrize("profile", sorted(PROFILES))
def test_orbit_stabilizer_at_four(profile):
    labelled = list(enumerate_labeled(4, PROFILES[profile]))
    assert len({s.r_table for s in labelled}) == len(labelled)
    classes = list(enumerate_sets(4, PROFILES[profile]))
    assert sum(factorial(4) // automorphism_count(s) for s in classes) == len(labelled)


def test_enumeration_needs_supported_profile():
    with pytest.raises(ValueError):
        list(enumerate_labeled(3, {"square-free"}))
    with pytest.raises(ValueError):
        list(enumerate_labeled(3, {"bogus"}))


def test_survey_two():
    rep = survey(2)
    assert rep.braided == 1 and rep.non_braided == 0
    (record,) = [r for r in rep.records if r.theorem is not None]
    assert record.qset == trivial_set(2)
    assert record.theorem.consistent and record.theorem.cond_ybe


def test_survey_three_and_four(e4, t4):
    rep3 = survey(3)
    assert rep3.profiles["quantum-binomial-lri"]["classes"] == raw_table_census(
        3, PROFILES["quantum-binomial-lri"]
    )[1]
    rep4 = survey(4)
    keys = {r.qset.r_table for r in rep4.records}
    assert canonical_form(e4).r_table in keys
    assert canonical_form(t4).r_table in keys
    assert all(r.theorem.consistent for r in rep4.records if r.theorem is not None)


def test_survey_is_deterministic():
    assert survey(3).as_dict() == survey(3).as_dict()


def test_survey_bound():
    with pytest.raises(ValueError):
        survey(6)
    with pytest.raises(ValueError):
        survey(0)


def test_survey_reports_violations(monkeypatch):
    def broken(s, cap=None):
        return TheoremReport(True, False, True, True)

    monkeypatch.setattr(harness, "main_theorem_report", broken)
    with pytest.raises(ConsistencyViolation) as info:
        survey(2)
    assert info.value.qset == trivial_set(2)


def test_lemma_suite_on_e4(e4):
    assert lemma_violations(e4, (0, 1, 2, 3)) == []


def test_middle_block_tails(b3):
    # braided, Delta = 012, yet the suffix 12 has tails {0, 2}
    assert main_theorem_report(b3).delta == (0, 1, 2)
    heads, tails = boundary_letters(b3, (1, 2))
    assert heads == {1, 2}
    assert tails == {0, 2}
    assert lemma_violations(b3, (0, 1, 2)) == []


def test_orbit_shapes(e4, nolri4):
    assert orbit_shape_violations(e4) == []
    for n in (2, 3, 4):
        for s in enumerate_sets(n, PROFILES["quantum-binomial-lri"]):
            assert orbit_shape_violations(s) == []
    # without lri the length-3 shapes can break
    assert "orbit of 220 has unexpected shape" in orbit_shape_violations(nolri4)


def test_quantum_binomial_without_lri_is_never_braided():
    for n in (3, 4):
        for s in enumerate_sets(n, QUANTUM_BINOMIAL):
            p = harness.check_properties(s)
            if not p.lri:
                assert not p.braided
