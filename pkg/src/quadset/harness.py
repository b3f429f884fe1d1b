"""Exhaustive census of small quadratic sets and the equivalence battery.

Candidates are generated from left-action tables rather than raw r-tables:

* with lri, ``r(x, y) = (L_x(y), L_y^-1(x))``;
* for involutive left-nondegenerate sets, ``r(x, y) = (L_x(y), L_{L_x(y)}^-1(x))``,
  since the first component of ``r(r(x, y)) = (x, y)`` pins the right action.

Square-free sets have ``L_x(x) = x``, which cuts each row to (n-1)! choices.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from math import comb, factorial
from typing import Iterable, Iterator

from .core import (
    PropertyReport,
    QuadraticSet,
    automorphism_count,
    build_set,
    canonical_form,
    check_properties,
    invert,
    left_action_of,
)
from .errors import ConsistencyViolation, NoCandidateDelta
from .garside import eta_chain, is_regular_garside
from .koszul import frobenius_check
from .presentations import (
    find_skew_ordering,
    hilbert_dims,
    is_skew_type,
    ore_and_cancellation_check,
    relations,
)
from .words import (
    DEFAULT_CAP,
    Word,
    boundary_letters,
    equal_in_monoid,
    orbit,
    square_free_elements,
)

log = logging.getLogger(__name__)

MAX_N = 5
LARGE_N = 6
# the involutive-nondegenerate profile has no square-free cut and grows as (n!)^n
FULL_PROFILE_MAX_N = 4

SQUARE_FREE = "square-free"
INVOLUTIVE = "involutive"
NONDEGENERATE = "nondegenerate"
LRI = "lri"
QUANTUM_BINOMIAL = frozenset({SQUARE_FREE, INVOLUTIVE, NONDEGENERATE})

PROFILES = {
    "involutive-nondegenerate": frozenset({INVOLUTIVE, NONDEGENERATE}),
    "quantum-binomial": QUANTUM_BINOMIAL,
    "quantum-binomial-lri": QUANTUM_BINOMIAL | {LRI},
}


@dataclasses.dataclass(frozen=True)
class TheoremReport:
    cond_garside: bool
    cond_regular_quantum: bool
    cond_skew: bool
    cond_ybe: bool
    skew_ordering: tuple | None = None
    delta: Word | None = None

    @property
    def consistent(self) -> bool:
        return len({self.cond_garside, self.cond_regular_quantum, self.cond_skew, self.cond_ybe}) == 1

    def as_dict(self) -> dict:
        return {
            "regular_garside": self.cond_garside,
            "regular_quantum": self.cond_regular_quantum,
            "skew_type": self.cond_skew,
            "ybe": self.cond_ybe,
            "consistent": self.consistent,
            "skew_ordering": list(self.skew_ordering) if self.skew_ordering else None,
            "delta": list(self.delta) if self.delta else None,
        }


def main_theorem_report(s: QuadraticSet, cap: int = DEFAULT_CAP) -> TheoremReport:
    props = check_properties(s)
    ordering = find_skew_ordering(s, cap)
    regular_quantum = frobenius_check(s, cap).regular_quantum
    try:
        garside = is_regular_garside(s, cap)
        cond_garside, delta = garside.regular, garside.delta
    except NoCandidateDelta:
        cond_garside, delta = False, None
    return TheoremReport(
        cond_garside=cond_garside,
        cond_regular_quantum=regular_quantum,
        cond_skew=ordering is not None,
        cond_ybe=props.braided,
        skew_ordering=ordering,
        delta=delta if cond_garside else None,
    )


# -- enumeration ---------------------------------------------------------------

def _row_choices(n: int, x: int, square_free: bool) -> list[tuple[int, ...]]:
    perms = itertools.permutations(range(n))
    if square_free:
        return [p for p in perms if p[x] == x]
    return list(perms)


def _is_perm(row) -> bool:
    return len(set(row)) == len(row)


def _partial_ok(L: list, inv: list, k: int, n: int, use_lri: bool) -> bool:
    """Checks that only involve rows 0..k, run after placing row k."""
    if use_lri:
        # involutivity of r(x, y) = (L_x(y), L_y^-1(x)) at every decided pair
        for x in range(k + 1):
            for y in range(k + 1):
                u, v = L[x][y], inv[y][x]
                if u <= k and L[u][v] != x:
                    return False
                if v <= k and u <= k and inv[v][u] != y:
                    return False
        return True
    # right nondegeneracy of r(x, y) = (L_x(y), L_{L_x(y)}^-1(x))
    for y in range(n):
        seen = set()
        for x in range(k + 1):
            u = L[x][y]
            if u <= k:
                v = inv[u][x]
                if v in seen:
                    return False
                seen.add(v)
    return True


def _left_actions(n: int, square_free: bool, use_lri: bool) -> Iterator[tuple]:
    choices = [_row_choices(n, x, square_free) for x in range(n)]
    L: list = [None] * n
    inv: list = [None] * n

    def extend(k: int):
        for row in choices[k]:
            L[k], inv[k] = row, invert(row)
            if _partial_ok(L, inv, k, n, use_lri):
                if k == n - 1:
                    yield tuple(L)
                else:
                    yield from extend(k + 1)
        L[k] = inv[k] = None

    yield from extend(0)


def enumerate_labeled(n: int, constraints: Iterable[str]) -> Iterator[QuadraticSet]:
    """Every labelled set satisfying ``constraints`` (no isomorphism dedup).

    Supported: any profile containing lri, or containing both involutive
    and nondegenerate.
    """
    constraints = frozenset(constraints)
    unknown = constraints - {SQUARE_FREE, INVOLUTIVE, NONDEGENERATE, LRI}
    if unknown:
        raise ValueError(f"unknown constraints {sorted(unknown)}")
    use_lri = LRI in constraints
    if not use_lri and not {INVOLUTIVE, NONDEGENERATE} <= constraints:
        raise ValueError("enumeration needs lri, or both involutive and nondegenerate")

    sq = SQUARE_FREE in constraints
    pairs = [(x, y) for x in range(n) for y in range(n)]
    # pruning is only sound when the pruned property is required
    prune = INVOLUTIVE in constraints if use_lri else True
    source = (
        _left_actions(n, sq, use_lri)
        if prune
        else itertools.product(*[_row_choices(n, x, sq) for x in range(n)])
    )
    for L in source:
        inv = [invert(p) for p in L]
        if use_lri:
            flat = [(L[x][y], inv[y][x]) for x, y in pairs]
        else:
            flat = [(L[x][y], inv[L[x][y]][x]) for x, y in pairs]
        if len(set(flat)) != n * n:
            continue
        if INVOLUTIVE in constraints and any(
            flat[u * n + v] != (x, y) for (x, y), (u, v) in zip(pairs, flat)
        ):
            continue
        if NONDEGENERATE in constraints:
            right = [[flat[x * n + y][1] for x in range(n)] for y in range(n)]
            if not all(_is_perm(row) for row in right):
                continue
        if sq and any(flat[x * n + x] != (x, x) for x in range(n)):
            continue
        yield build_set(n, flat)


def _sorted_classes(sets: Iterable[QuadraticSet]) -> tuple[list[QuadraticSet], int]:
    classes: dict = {}
    raw = 0
    for s in sets:
        raw += 1
        c = canonical_form(s)
        classes.setdefault(c.r_table, c)
    return [classes[k] for k in sorted(classes)], raw


def enumerate_sets(n: int, constraints: Iterable[str]) -> Iterator[QuadraticSet]:
    """One canonical representative per isomorphism class, in canonical order."""
    classes, _ = _sorted_classes(enumerate_labeled(n, constraints))
    yield from classes


def raw_table_census(n: int, constraints: Iterable[str]) -> tuple[int, int]:
    """Independent oracle: scan every bijection of X x X.

    Returns ``(labelled count, class count)``.  Only feasible for n <= 3.
    Each property is evaluated straight from its definition here, without
    the action-table machinery used elsewhere.
    """
    constraints = frozenset(constraints)
    pairs = [(x, y) for x in range(n) for y in range(n)]
    X = range(n)
    count = 0
    keys = set()
    for images in itertools.permutations(pairs):
        r = dict(zip(pairs, images))
        if SQUARE_FREE in constraints and any(r[(x, x)] != (x, x) for x in X):
            continue
        if INVOLUTIVE in constraints and any(r[r[p]] != p for p in pairs):
            continue
        if NONDEGENERATE in constraints:
            left_ok = all(len({r[(x, y)][0] for y in X}) == n for x in X)
            right_ok = all(len({r[(x, y)][1] for x in X}) == n for y in X)
            if not (left_ok and right_ok):
                continue
        if LRI in constraints:
            la = lambda x, y: r[(x, y)][0]
            ra = lambda y, x: r[(x, y)][1]  # x^y
            if not all(ra(x, la(x, y)) == y and la(x, ra(x, y)) == y for x in X for y in X):
                continue
        count += 1
        keys.add(
            min(
                tuple(
                    tuple(perm[c] for c in r[(inv[a], inv[b])])
                    for a in X
                    for b in X
                )
                for perm in itertools.permutations(X)
                for inv in [invert(perm)]
            )
        )
    return count, len(keys)


# -- lemma-level checks -----------------------------------------------------------

def orbit_shape_violations(s: QuadraticSet) -> list[str]:
    """Length-3 orbit facts for quantum binomial sets: xxx alone, yyx and yxx triples."""
    out = []
    for x in range(s.n):
        if orbit(s, (x, x, x)).members != {(x, x, x)}:
            out.append(f"orbit of {x}{x}{x} is not a singleton")
    for x, y in itertools.permutations(range(s.n), 2):
        x1, y1 = s.r(y, x)
        x2, y1b = s.r(y, x1)
        expected = {(y, y, x), (y, x1, y1), (x2, y1b, y1)}
        if y1b != y1 or orbit(s, (y, y, x)).members != expected:
            out.append(f"orbit of {y}{y}{x} has unexpected shape")
        y1c, y2 = s.r(y1, x)
        expected = {(y, x, x), (x1, y1, x), (x1, x1, y2)}
        if y1c != x1 or orbit(s, (y, x, x)).members != expected:
            out.append(f"orbit of {y}{x}{x} has unexpected shape")
    return out


def lemma_violations(s: QuadraticSet, delta: Word, cap: int = DEFAULT_CAP) -> list[str]:
    """Structural checks on a regular Garside element ``delta``.

    The generators are enumerated in the order ``delta`` spells them.
    """
    n = s.n
    out = []
    x = tuple(delta)
    if not is_skew_type(s, x, cap).ok:
        out.append("not of skew type under the order spelled by Delta")
    if orbit(s, delta, cap).size != factorial(n):
        out.append("Delta orbit size differs from n!")
    heads, tails = boundary_letters(s, delta, cap)
    if heads != set(range(n)) or tails != set(range(n)):
        out.append("some atom is not a head and a tail of Delta")

    top = orbit(s, delta, cap).members
    levels = square_free_elements(s, n, cap)
    for k, level in enumerate(levels, start=1):
        pairs_seen = {}
        for a in level:
            h, t = boundary_letters(s, a, cap)
            if len(h) != k or len(t) != k:
                out.append(f"{a} has {len(h)} heads and {len(t)} tails")
            key = (frozenset(h), frozenset(t))
            if key in pairs_seen:
                out.append(f"heads/tails do not separate {a} and {pairs_seen[key]}")
            pairs_seen[key] = a
            if not any(w[:k] in orbit(s, a, cap).members for w in top):
                out.append(f"{a} is not a left divisor of Delta")
            if not any(w[n - k :] in orbit(s, a, cap).members for w in top):
                out.append(f"{a} is not a right divisor of Delta")

    for j in range(n - 1):
        heads, _ = boundary_letters(s, x[j:], cap)
        if heads != set(x[j:]):
            out.append(f"heads of suffix {x[j:]} differ from its letters")

    etas = []
    for j in range(n - 1):
        chain = eta_chain(s, x, j)
        etas.append(chain.final)
        if not equal_in_monoid(s, chain.xi, x[j + 1 :], cap):
            out.append(f"xi product for j={j} differs from x_(j+1)..x_n")
        if not equal_in_monoid(s, x[j + 1 :] + (chain.final,), x[j:], cap):
            out.append(f"x_(j+1)..x_n eta_{j} differs from x_j..x_n")
        for m in range(1, len(chain.xi)):
            if chain.xi[m] == chain.eta[m - 1]:
                out.append(f"xi/eta coincidence in chain j={j}")
    if len(set(etas)) != len(etas):
        out.append("eta_1..eta_(n-1) are not pairwise distinct")

    rank = {c: i for i, c in enumerate(x)}
    for a, b in itertools.combinations_with_replacement(x, 2):
        if min(orbit(s, (a, b), cap).members, key=lambda w: [rank[c] for c in w]) != (a, b):
            out.append(f"ordered pair {a}{b} is not normal")
    for a, b in itertools.permutations(x, 2):
        if rank[a] > rank[b] and min(
            orbit(s, (a, b), cap).members, key=lambda w: [rank[c] for c in w]
        ) == (a, b):
            out.append(f"descending pair {a}{b} is normal")

    for rel in relations(s):
        if not any(
            w[:2] == rel.lhs and (rel.rhs + w[2:]) in top for w in top
        ):
            out.append(f"relation {rel} is not witnessed inside Delta")
    return out


# -- census -------------------------------------------------------------------

@dataclasses.dataclass
class CensusRecord:
    qset: QuadraticSet
    properties: PropertyReport
    theorem: TheoremReport | None
    tags: list[str]
    hilbert: list[int] | None = None
    frobenius_dims: list[int] | None = None

    def as_dict(self) -> dict:
        la = left_action_of(self.qset)
        doc: dict = {"n": self.qset.n}
        if la is not None:
            doc["left_action"] = la
        else:
            doc["r_table"] = self.qset.as_rows()
        props = self.properties.as_dict()
        props.pop("fixed_points")
        return {
            "set": doc,
            "tags": self.tags,
            "properties": props,
            "theorem": self.theorem.as_dict() if self.theorem else None,
            "hilbert_dims": self.hilbert,
            "frobenius_dims": self.frobenius_dims,
        }


@dataclasses.dataclass
class CensusReport:
    n: int
    profiles: dict
    braided: int
    non_braided: int
    records: list[CensusRecord]
    checks: list[str]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "profiles": self.profiles,
            "quantum_binomial_lri": {"braided": self.braided, "non_braided": self.non_braided},
            "checks_passed": self.checks,
            "classes": [rec.as_dict() for rec in self.records],
        }


def _require(ok: bool, check: str, s: QuadraticSet, detail: str = "") -> None:
    if not ok:
        raise ConsistencyViolation(check, s, detail)


def survey(n: int, max_n: int = MAX_N, cap: int = DEFAULT_CAP) -> CensusReport:
    """Run every profile at order ``n`` and assert the equivalence battery.

    Raises ConsistencyViolation on the first failed check.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n={n} outside the configured range 1..{max_n}")
    profiles: dict = {}
    checks: list[str] = []

    # involutive + nondegenerate: fixed points, relation count, Ore
    if n <= FULL_PROFILE_MAX_N:
        classes, raw = _sorted_classes(enumerate_labeled(n, PROFILES["involutive-nondegenerate"]))
        profiles["involutive-nondegenerate"] = {"labelled": raw, "classes": len(classes)}
        _check_orbit_stabilizer(classes, raw)
    else:
        classes = []
        profiles["involutive-nondegenerate"] = {"labelled": None, "classes": None, "skipped": True}
        log.info("involutive-nondegenerate profile skipped at n=%d", n)
    for s in classes:
        p = check_properties(s)
        _require(len(p.fixed_points) == n, "fixed point count", s, str(p.fixed_points))
        _require(p.relation_count == comb(n, 2), "relation count", s, str(p.relation_count))
        _require(ore_and_cancellation_check(s).ok, "2-cancellation and Ore", s)
        if p.lri:
            _require(p.cyclic, "lri and involutive imply cyclic", s)
        _require(p.braided == (p.l1 and p.r1 and p.lr3), "braided iff l1, r1, lr3", s)
    if classes:
        checks += ["fixed point count", "relation count", "2-cancellation and Ore",
                   "lri and involutive imply cyclic"]

    # quantum binomial: YBE <=> l1 <=> r1 <=> lr3, braided => lri and cyclic
    classes, raw = _sorted_classes(enumerate_labeled(n, QUANTUM_BINOMIAL))
    profiles["quantum-binomial"] = {"labelled": raw, "classes": len(classes)}
    _check_orbit_stabilizer(classes, raw)
    for s in classes:
        p = check_properties(s)
        _require(len({p.braided, p.l1, p.r1, p.lr3}) == 1, "braided iff l1 iff r1 iff lr3", s)
        if p.braided:
            _require(p.lri and p.cyclic, "braided implies lri and cyclic", s)
        _require(
            sorted(p.fixed_points) == [(x, x) for x in range(n)], "fixed points are the diagonal", s
        )
        if p.lri:
            bad = orbit_shape_violations(s)
            _require(not bad, "length-3 orbit shapes", s, "; ".join(bad))
    checks += ["braided iff l1 iff r1 iff lr3", "braided implies lri and cyclic",
               "length-3 orbit shapes (lri)"]

    # quantum binomial + lri: the four-way equivalence
    lri_labeled = list(enumerate_labeled(n, PROFILES["quantum-binomial-lri"]))
    classes, raw = _sorted_classes(lri_labeled)
    profiles["quantum-binomial-lri"] = {"labelled": raw, "classes": len(classes)}
    _check_orbit_stabilizer(classes, raw)
    records = []
    braided = 0
    for s in classes:
        p = check_properties(s)
        report = main_theorem_report(s, cap)
        _require(report.consistent, "four-way equivalence", s, str(report.as_dict()))
        frob = frobenius_check(s, cap)
        hilbert = None
        tags = ["quantum-binomial", "lri"]
        if p.braided:
            braided += 1
            tags.append("braided")
            hilbert = hilbert_dims(s, n + 1, cap)
            _require(
                hilbert == [comb(n + d - 1, d) for d in range(n + 2)], "PBW Hilbert dims", s
            )
            _require(frob.grassmann, "quantum Grassmann dims", s, str(frob.dims))
            garside = is_regular_garside(s, cap)
            _require(garside.comprehensive, "comprehensive Garside", s)
            bad = lemma_violations(s, report.delta, cap)
            _require(not bad, "lemma suite", s, "; ".join(bad))
        records.append(CensusRecord(s, p, report, tags, hilbert, frob.dims))
    checks += ["four-way equivalence", "PBW Hilbert dims", "quantum Grassmann dims",
               "comprehensive Garside", "lemma suite"]

    # non-lri quantum binomial classes are reported too, without a theorem report
    lri_keys = {s.r_table for s in classes}
    for s in enumerate_sets(n, QUANTUM_BINOMIAL):
        if s.r_table not in lri_keys:
            records.append(CensusRecord(s, check_properties(s), None, ["quantum-binomial"]))

    return CensusReport(n, profiles, braided, len(classes) - braided, records, checks)


def _check_orbit_stabilizer(classes: list[QuadraticSet], raw: int) -> None:
    if not classes:
        return
    n = classes[0].n
    total = sum(factorial(n) // automorphism_count(s) for s in classes)
    _require(total == raw, "labelled count equals sum of class orbit sizes", classes[0],
             f"{total} != {raw}")
