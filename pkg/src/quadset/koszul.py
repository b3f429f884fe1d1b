"""Koszul dual data, square-free dimensions and the Frobenius property.

The pairing is evaluated sign-free on the monoid with zero S^!: the entry
for ``(u, v)`` is 1 exactly when ``uv`` equals the principal monomial W in
S.  Invertibility is decided by rank over GF(2).
"""

from __future__ import annotations

import dataclasses
from math import comb
from typing import Sequence

from .core import QuadraticSet
from .presentations import relations
from .words import DEFAULT_CAP, Word, order_key, orbit, square_free_elements


@dataclasses.dataclass(frozen=True)
class SignedBinomial:
    """``first + sign * second`` in the dual generators."""

    first: Word
    second: Word
    sign: int = 1


@dataclasses.dataclass(frozen=True)
class KoszulPresentation:
    binomial_relations: list[SignedBinomial]
    square_relations: list[Word]
    zero_relations: list[int]  # x with xx = 0 in S^!


def koszul_presentation(s: QuadraticSet) -> KoszulPresentation:
    # x_j x_i - x_i' x_j' in R0 becomes xi_j xi_i + xi_i' xi_j'
    binomials = [SignedBinomial(rel.lhs, rel.rhs, +1) for rel in relations(s)]
    return KoszulPresentation(
        binomial_relations=binomials,
        square_relations=[(x, x) for x in range(s.n)],
        zero_relations=list(range(s.n)),
    )


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclasses.dataclass(frozen=True)
class FrobeniusReport:
    dims: list[int]  # square-free elements in degrees 0..n+1
    socle_ok: bool
    pairing_ok: bool
    grassmann: bool
    principal: Word | None
    regular_presentation: Word | None
    pairing_ranks: list[int] = dataclasses.field(default_factory=list)

    @property
    def frobenius(self) -> bool:
        return self.socle_ok and self.pairing_ok

    @property
    def regular_quantum(self) -> bool:
        return self.frobenius and self.regular_presentation is not None


def regular_presentations(s: QuadraticSet, w: Sequence[int], cap: int = DEFAULT_CAP) -> list[Word]:
    """Spellings of ``w`` by n distinct letters that are lex-min in the orbit
    under the order they themselves list."""
    members = orbit(s, w, cap).members
    found = []
    for cand in sorted(members):
        if len(set(cand)) != s.n or len(cand) != s.n:
            continue
        if min(members, key=order_key(cand)) == cand:
            found.append(cand)
    return found


def pairing_matrix(
    s: QuadraticSet, rows: list[Word], cols: list[Word], top: Word, cap: int = DEFAULT_CAP
) -> list[int]:
    """Row bitsets of the matrix with entry 1 iff ``u v == top`` in S."""
    spellings = orbit(s, top, cap).members
    out = []
    for u in rows:
        bits = 0
        for k, v in enumerate(cols):
            if u + v in spellings:
                bits |= 1 << k
        out.append(bits)
    return out


def frobenius_check(s: QuadraticSet, cap: int = DEFAULT_CAP) -> FrobeniusReport:
    n = s.n
    by_degree = [[()]] + square_free_elements(s, n + 1, cap)
    dims = [len(level) for level in by_degree]
    socle_ok = dims[n] == 1 and dims[n + 1] == 0
    grassmann = all(dims[d] == comb(n, d) for d in range(n + 1)) and dims[n + 1] == 0

    principal = by_degree[n][0] if dims[n] == 1 else None
    ranks: list[int] = []
    pairing_ok = False
    regular = None
    if principal is not None:
        pairing_ok = True
        for d in range(n + 1):
            rows, cols = by_degree[d], by_degree[n - d]
            rank = gf2_rank(pairing_matrix(s, rows, cols, principal, cap), len(cols))
            ranks.append(rank)
            if not (len(rows) == len(cols) == rank):
                pairing_ok = False
        found = regular_presentations(s, principal, cap)
        regular = found[0] if found else None

    return FrobeniusReport(dims, socle_ok, pairing_ok, grassmann, principal, regular, ranks)


def is_regular_quantum_monoid(
    s: QuadraticSet, cap: int = DEFAULT_CAP
) -> tuple[bool, FrobeniusReport]:
    report = frobenius_check(s, cap)
    return report.regular_quantum, report
