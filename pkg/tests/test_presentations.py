from __future__ import annotations

import itertools
from math import comb

from hypothesis import given, settings

from conftest import involutive_sets, lri_sets
from oracles import table, word_classes
from quadset.core import check_properties, trivial_set
from quadset.harness import PROFILES, enumerate_sets
from quadset.presentations import (
    find_skew_ordering,
    hilbert_dims,
    is_skew_type,
    ore_and_cancellation_check,
    overlaps_resolve,
    relations,
)
from quadset.words import orbit


def test_relation_lists(e4, t3, nolri4):
    assert [str(rel) for rel in relations(t3)] == ["10=01", "20=02", "21=12"]
    assert [str(rel) for rel in relations(e4)] == ["10=01", "31=02", "21=03", "30=12", "20=13", "32=23"]
    assert len(relations(nolri4)) == 6
    for rel in relations(e4):
        assert e4.r(*rel.lhs) == rel.rhs and rel.lhs != rel.rhs


def test_ore_holds_on_e4(e4):
    assert ore_and_cancellation_check(e4).ok


def test_ore_fails_on_degenerate_set(degenerate3):
    assert not check_properties(degenerate3).left_nondegenerate
    rep = ore_and_cancellation_check(degenerate3)
    assert not rep.left_ore
    s, t, sols = rep.left_ore_witness
    assert s != t and len(sols) != 1


def test_skew_examples(e4, t4):
    assert is_skew_type(e4, (0, 1, 2, 3)).ok
    for ordering in itertools.permutations(range(4)):
        assert is_skew_type(t4, ordering).ok
    rep = is_skew_type(e4, (2, 0, 3, 1))
    assert not rep.ok and rep.witness is not None


def test_skew_search(e4, nb4):
    assert find_skew_ordering(e4) == (0, 1, 2, 3)
    assert find_skew_ordering(trivial_set(5)) == (0, 1, 2, 3, 4)
    assert find_skew_ordering(nb4) is None


def test_hilbert_examples(e4, t4):
    assert hilbert_dims(e4, 3) == [1, 4, 10, 20]
    assert hilbert_dims(t4, 4) == [1, 4, 10, 20, 35]
    assert hilbert_dims(trivial_set(2), 5) == [1, 2, 3, 4, 5, 6]


@settings(max_examples=40, deadline=None)
@given(involutive_sets(max_n=3))
def test_hilbert_matches_oracle(s):
    assert hilbert_dims(s, 3) == [1] + [len(word_classes(table(s), s.n, k)) for k in (1, 2, 3)]


def _lri_quantum_binomial(n):
    return list(enumerate_sets(n, PROFILES["quantum-binomial-lri"]))


def test_skew_consequences_on_census():
    for n in (2, 3, 4):
        for s in _lri_quantum_binomial(n):
            ordering = find_skew_ordering(s)
            if ordering is None:
                continue
            rank = {x: i for i, x in enumerate(ordering)}
            assert hilbert_dims(s, 3) == [comb(n + d - 1, d) for d in range(4)]
            # the head-drop condition also gives i < j'
            for rel in relations(s):
                a, b = rel.lhs, rel.rhs
                if rank[a[0]] < rank[a[1]]:
                    a, b = b, a
                assert rank[a[1]] < rank[b[1]]
            key = lambda w: [rank[c] for c in w]
            for x, y in itertools.product(ordering, repeat=2):
                normal = min(orbit(s, (x, y)).members, key=key) == (x, y)
                assert normal == (rank[x] <= rank[y])


def test_overlaps_agree_with_triple_check():
    for n in (3, 4):
        for s in _lri_quantum_binomial(n):
            for ordering in itertools.permutations(range(n)):
                rep = is_skew_type(s, ordering)
                if rep.cond_i and rep.cond_ii:
                    assert overlaps_resolve(s, ordering) == rep.cond_iii


@settings(max_examples=60, deadline=None)
@given(lri_sets(max_n=4))
def test_skew_search_iff_braided(s):
    p = check_properties(s)
    if p.quantum_binomial:
        assert (find_skew_ordering(s) is not None) == p.braided
