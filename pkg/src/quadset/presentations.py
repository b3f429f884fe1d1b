"""Defining relations of S(X, r), skew-polynomial type and Hilbert dimensions."""

from __future__ import annotations

import dataclasses
import itertools
from typing import Sequence

from .core import QuadraticSet
from .words import DEFAULT_CAP, Word, equal_in_monoid, order_key, orbit, orbit_classes


@dataclasses.dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word  # the lex-min side

    def __str__(self) -> str:
        return "".join(map(str, self.lhs)) + "=" + "".join(map(str, self.rhs))


def relations(s: QuadraticSet) -> list[Relation]:
    """One relation per unordered pair {p, r(p)} with r(p) != p, sorted by rhs."""
    found = set()
    for p in s.pairs():
        q = s.r(*p)
        if q != p:
            lo, hi = sorted((p, q))
            found.add(Relation(hi, lo))
    return sorted(found, key=lambda rel: (rel.rhs, rel.lhs))


@dataclasses.dataclass(frozen=True)
class OreReport:
    cancellation: bool
    left_ore: bool
    right_ore: bool
    cancellation_witness: tuple | None = None
    left_ore_witness: tuple | None = None
    right_ore_witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.cancellation and self.left_ore and self.right_ore


def ore_and_cancellation_check(s: QuadraticSet) -> OreReport:
    """Exhaustive 2-cancellation and left/right Ore checks on length-2 words.

    For ``s != t`` the Ore condition asks for exactly one pair ``(a, b)`` with
    ``sa = tb`` (resp. ``as = bt``) in S, and that pair must have ``a != b``.
    For ``s == t`` the only solutions allowed are ``a == b``, which is the
    cancellation law again.
    """
    X = range(s.n)
    eq = lambda u, v: equal_in_monoid(s, u, v)

    cancel_w = None
    for x, a, b in itertools.product(X, repeat=3):
        if a != b and (eq((x, a), (x, b)) or eq((a, x), (b, x))):
            cancel_w = (x, a, b)
            break

    def ore(side: str):
        for p, q in itertools.product(X, repeat=2):
            if p == q:
                continue
            if side == "left":
                sols = [(a, b) for a, b in itertools.product(X, repeat=2) if eq((p, a), (q, b))]
            else:
                sols = [(a, b) for a, b in itertools.product(X, repeat=2) if eq((a, p), (b, q))]
            if len(sols) != 1 or sols[0][0] == sols[0][1]:
                return (p, q, tuple(sols))
        return None

    left_w, right_w = ore("left"), ore("right")
    return OreReport(
        cancellation=cancel_w is None,
        left_ore=left_w is None,
        right_ore=right_w is None,
        cancellation_witness=cancel_w,
        left_ore_witness=left_w,
        right_ore_witness=right_w,
    )


@dataclasses.dataclass(frozen=True)
class SkewReport:
    ordering: tuple[int, ...]
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii


def _oriented(s: QuadraticSet, rank: dict) -> list[tuple[Word, Word]]:
    """Relations as (descending side, other side) pairs under ``rank``."""
    out = []
    for rel in relations(s):
        a, b = rel.lhs, rel.rhs
        if rank[a[0]] <= rank[a[1]] and rank[b[0]] > rank[b[1]]:
            a, b = b, a
        out.append((a, b))
    return out


def is_skew_type(
    s: QuadraticSet, ordering: Sequence[int], cap: int = DEFAULT_CAP
) -> SkewReport:
    ordering = tuple(ordering)
    rank = {x: i for i, x in enumerate(ordering)}
    n = s.n

    # (i) xx in no relation, every xy with x != y in exactly one
    cond_i, witness = True, None
    for x in range(n):
        if s.r(x, x) != (x, x):
            cond_i, witness = False, ((x, x), s.r(x, x))
            break
    if cond_i:
        for p in s.pairs():
            q = s.r(*p)
            if p[0] != p[1] and (q == p or s.r(*q) != p):
                cond_i, witness = False, (p, q)
                break

    # (ii) x_j x_i = x_i' x_j' with i < j forces i' < j' and j > i'
    bad = _shape_violation(s, ordering)
    cond_ii = bad is None
    witness = witness or bad

    # (iii) every ordered length-3 monomial is normal
    cond_iii = True
    key = order_key(ordering)
    for a, b, c in itertools.combinations_with_replacement(ordering, 3):
        w = (a, b, c)
        smallest = min(orbit(s, w, cap).members, key=key)
        if smallest != w:
            cond_iii = False
            witness = witness or w
            break

    return SkewReport(ordering, cond_i, cond_ii, cond_iii, witness)


def _shape_violation(s: QuadraticSet, ordering: Sequence[int]):
    rank = {x: i for i, x in enumerate(ordering)}
    for desc, other in _oriented(s, rank):
        j, i = rank[desc[0]], rank[desc[1]]
        i2, j2 = rank[other[0]], rank[other[1]]
        if not (j > i and i2 < j2 and j > i2):
            return (desc, other)
    return None


def find_skew_ordering(s: QuadraticSet, cap: int = DEFAULT_CAP) -> tuple[int, ...] | None:
    """First ordering, in lexicographic order over permutations, of skew type."""
    for ordering in itertools.permutations(range(s.n)):
        if _shape_violation(s, ordering) is not None:
            continue
        if is_skew_type(s, ordering, cap).ok:
            return ordering
    return None


def overlaps_resolve(s: QuadraticSet, ordering: Sequence[int]) -> bool:
    """Classical critical-pair check for the rewriting system desc -> asc.

    Each overlap ``z y x`` with ``z > y > x`` is rewritten at both positions
    and the irreducible descendants of the two branches must meet.  Assumes
    conditions (i) and (ii) hold, so every descending pair has a rule.
    """
    rank = {x: i for i, x in enumerate(ordering)}
    rules = {desc: other for desc, other in _oriented(s, rank)}

    def descendants(w: Word) -> set:
        irreducible, stack, seen = set(), [w], {w}
        while stack:
            cur = stack.pop()
            moved = False
            for i in range(len(cur) - 1):
                rhs = rules.get(cur[i : i + 2])
                if rhs is not None:
                    moved = True
                    nxt = cur[:i] + rhs + cur[i + 2 :]
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            if not moved:
                irreducible.add(cur)
        return irreducible

    for x, y, z in itertools.combinations(ordering, 3):
        first = rules[(z, y)] + (x,)
        second = (z,) + rules[(y, x)]
        if not descendants(first) & descendants(second):
            return False
    return True


def hilbert_dims(s: QuadraticSet, max_deg: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Number of elements of S in each degree 0..max_deg."""
    return [1] + [len(orbit_classes(s, d, cap)) for d in range(1, max_deg + 1)]
