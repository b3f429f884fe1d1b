from __future__ import annotations

import itertools
from math import comb

from hypothesis import given, settings, strategies as st

from oracles import gf2_span_size
from quadset.core import trivial_set
from quadset.garside import left_divides
from quadset.harness import PROFILES, enumerate_sets
from quadset.koszul import (
    frobenius_check,
    gf2_rank,
    is_regular_quantum_monoid,
    koszul_presentation,
)
from quadset.presentations import find_skew_ordering, relations
from quadset.words import normal_form, orbit, square_free_elements


def test_presentation_counts(e4, t3):
    kp = koszul_presentation(t3)
    assert len(kp.binomial_relations) == 3 and len(kp.square_relations) == 3
    assert all(b.sign == 1 for b in kp.binomial_relations)
    kp = koszul_presentation(e4)
    assert [(b.first, b.second) for b in kp.binomial_relations] == [
        (rel.lhs, rel.rhs) for rel in relations(e4)
    ]
    assert len(kp.square_relations) == 4
    kp = koszul_presentation(trivial_set(1))
    assert kp.binomial_relations == [] and kp.square_relations == [(0, 0)]


def test_e4_frobenius(e4):
    rep = frobenius_check(e4)
    assert rep.dims == [1, 4, 6, 4, 1, 0]
    assert rep.socle_ok and rep.pairing_ok and rep.grassmann
    assert rep.principal == (0, 1, 2, 3)
    assert rep.regular_presentation == (0, 1, 2, 3)
    assert rep.pairing_ranks == [1, 4, 6, 4, 1]


def test_trivial_frobenius(t4):
    rep = frobenius_check(t4)
    assert rep.dims == [1, 4, 6, 4, 1, 0]
    assert rep.principal == (0, 1, 2, 3)
    assert is_regular_quantum_monoid(trivial_set(5))[0]


def test_non_braided_is_not_regular_quantum(nb4):
    ok, rep = is_regular_quantum_monoid(nb4)
    assert not ok
    assert not (rep.socle_ok and rep.pairing_ok and rep.regular_presentation)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda c: st.lists(st.integers(0, 2**c - 1), max_size=6).map(lambda rows: (rows, c))
))
def test_gf2_rank_against_span(data):
    rows, n_cols = data
    assert 2 ** gf2_rank(rows, n_cols) == gf2_span_size(rows)


def test_frobenius_invariants_on_census():
    for n in (2, 3, 4):
        for s in enumerate_sets(n, PROFILES["quantum-binomial"]):
            rep = frobenius_check(s)
            assert rep.dims[0] == 1 and rep.dims[1] == n
            assert (rep.principal is not None) == (rep.dims[n] == 1)
            if rep.grassmann:
                assert rep.socle_ok
                assert rep.dims == [comb(n, d) for d in range(n + 1)] + [0]
            if rep.socle_ok and rep.pairing_ok:
                for level in square_free_elements(s, n - 1):
                    for a in level:
                        assert left_divides(s, a, rep.principal)
                        assert _right_divides(s, a, rep.principal)
            ordering = find_skew_ordering(s)
            if ordering is not None:
                # square-free normal forms are the strictly ascending monomials
                for d, level in enumerate(square_free_elements(s, n), start=1):
                    forms = {normal_form(s, a, ordering) for a in level}
                    assert forms == set(itertools.combinations(ordering, d))


def _right_divides(s, a, w):
    spellings = orbit(s, a).members
    return any(v[len(w) - len(a):] in spellings for v in orbit(s, w).members)
