"""Divisors of a candidate Garside element and the regular Garside test."""

from __future__ import annotations

import dataclasses
import itertools
from typing import Sequence

from .core import QuadraticSet
from .errors import IndexOutOfRange, NoCandidateDelta, NotSquareFree, RelationLookupFailed
from .koszul import regular_presentations
from .presentations import relations
from .words import (
    DEFAULT_CAP,
    Word,
    equal_in_monoid,
    is_square_free_word,
    normal_form,
    orbit,
    orbit_classes,
    square_free_elements,
)

Graded = list[set]


@dataclasses.dataclass(frozen=True)
class GarsideReport:
    delta: Word
    delta_regular: bool
    left_divisors: Graded
    right_divisors: Graded
    sigma_equal: bool
    generates: bool
    delta_cancel: bool
    atom_lcms: dict
    lcms_minimal: bool
    comprehensive: bool
    square_free_coverage: bool

    @property
    def garside(self) -> bool:
        return (
            self.sigma_equal
            and self.generates
            and self.delta_cancel
            and self.lcms_minimal
            and all(v is not None for v in self.atom_lcms.values())
        )

    @property
    def regular(self) -> bool:
        return self.garside and self.delta_regular and self.square_free_coverage


def divisors(
    s: QuadraticSet, delta: Sequence[int], cap: int = DEFAULT_CAP
) -> tuple[Graded, Graded]:
    """Left and right divisors of ``delta``, graded by degree, as lex-min reps.

    ``a`` left-divides ``delta`` iff some spelling of ``delta`` starts with a
    spelling of ``a``, so the divisors are read off the prefixes and
    suffixes of the orbit members.
    """
    delta = tuple(delta)
    if len(delta) != s.n or not is_square_free_word(s, delta, cap):
        raise NotSquareFree(f"{list(delta)} is not a square-free word of length {s.n}")
    members = orbit(s, delta, cap).members
    k_max = len(delta)
    left = [set() for _ in range(k_max + 1)]
    right = [set() for _ in range(k_max + 1)]
    for w in members:
        for k in range(k_max + 1):
            left[k].add(w[:k])
            right[k].add(w[k_max - k :])
    nf = lambda w: normal_form(s, w, cap=cap) if w else ()
    return [{nf(w) for w in lvl} for lvl in left], [{nf(w) for w in lvl} for lvl in right]


def left_divides(s: QuadraticSet, u: Sequence[int], v: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    u, v = tuple(u), tuple(v)
    if len(u) > len(v):
        return False
    if not u:
        return True
    spellings_u = orbit(s, u, cap).members
    return any(w[: len(u)] in spellings_u for w in orbit(s, v, cap).members)


def atom_lcm(s: QuadraticSet, a: int, b: int, cap: int = DEFAULT_CAP) -> Word | None:
    """The unique length-2 element ``a x = b y``; None when there is no unique one."""
    if a == b:
        raise IndexOutOfRange("atom_lcm needs two distinct atoms")
    sols = [
        (x, y)
        for x, y in itertools.product(range(s.n), repeat=2)
        if equal_in_monoid(s, (a, x), (b, y), cap)
    ]
    if len(sols) != 1:
        return None
    x, _ = sols[0]
    return normal_form(s, (a, x), cap=cap)


def _lcm_is_minimal(s: QuadraticSet, a: int, b: int, lcm: Word, sigma: set, cap: int) -> bool:
    common = [
        d for d in sigma if left_divides(s, (a,), d, cap) and left_divides(s, (b,), d, cap)
    ]
    return lcm in common and all(left_divides(s, lcm, d, cap) for d in common)


def _injective(values: list) -> bool:
    return len(set(values)) == len(values)


def find_delta(s: QuadraticSet, cap: int = DEFAULT_CAP) -> Word:
    """The unique square-free element of degree n, preferring a regular spelling."""
    top = square_free_elements(s, s.n, cap)[-1]
    if len(top) != 1:
        raise NoCandidateDelta(f"{len(top)} square-free elements of degree {s.n}")
    regular = regular_presentations(s, top[0], cap)
    return regular[0] if regular else top[0]


def is_regular_garside(s: QuadraticSet, cap: int = DEFAULT_CAP) -> GarsideReport:
    n = s.n
    delta = find_delta(s, cap)
    delta_regular = bool(regular_presentations(s, delta, cap))
    left, right = divisors(s, delta, cap)
    sigma = set().union(*left)

    sigma_equal = left == right
    generates = all((x,) in left[1] for x in range(n))

    # Delta a = Delta b or a Delta = b Delta forces a = b, for a, b in Sigma
    delta_cancel = True
    for level in left:
        if len(level) < 2:
            continue  # nothing to separate, and Delta Delta has a large orbit
        level = sorted(level)
        after = [normal_form(s, delta + a, cap=cap) for a in level]
        before = [normal_form(s, a + delta, cap=cap) for a in level]
        if not (_injective(after) and _injective(before)):
            delta_cancel = False
            break

    lcms = {}
    minimal = True
    for a, b in itertools.combinations(range(n), 2):
        lcm = atom_lcm(s, a, b, cap)
        lcms[(a, b)] = lcm
        if lcm is None or not _lcm_is_minimal(s, a, b, lcm, sigma, cap):
            minimal = False

    comprehensive = generates and all(
        normal_form(s, rel.lhs, cap=cap) in left[2] for rel in relations(s)
    )

    coverage = True
    for level in square_free_elements(s, n, cap):
        for a in level:
            if a not in left[len(a)] or a not in right[len(a)]:
                coverage = False

    return GarsideReport(
        delta=delta,
        delta_regular=delta_regular,
        left_divisors=left,
        right_divisors=right,
        sigma_equal=sigma_equal,
        generates=generates,
        delta_cancel=delta_cancel,
        atom_lcms=lcms,
        lcms_minimal=minimal,
        comprehensive=comprehensive,
        square_free_coverage=coverage,
    )


def cancellative_up_to(s: QuadraticSet, degree: int, cap: int = DEFAULT_CAP) -> bool:
    """Left and right cancellation by single letters on all elements of degree < ``degree``.

    Cancelling one letter at a time covers every cancellation ``ua = ub``
    with ``|ua| <= degree``.
    """
    for d in range(1, degree):
        reps = [o.representative for o in orbit_classes(s, d, cap)]
        for x in range(s.n):
            if not _injective([normal_form(s, (x,) + a, cap=cap) for a in reps]):
                return False
            if not _injective([normal_form(s, a + (x,), cap=cap) for a in reps]):
                return False
    return True


@dataclasses.dataclass(frozen=True)
class EtaChain:
    xi: Word
    eta: Word

    @property
    def final(self) -> int:
        return self.eta[-1]


def eta_chain(s: QuadraticSet, ordering: Sequence[int], j: int) -> EtaChain:
    """Successive relation lookups ``xi eta = eta_prev x_m`` starting at ``x_j x_{j+1}``.

    ``j`` is 0-based, ``0 <= j <= n - 2``; ``x_m`` is ``ordering[m]``.
    """
    x = tuple(ordering)
    n = s.n
    if not 0 <= j <= n - 2:
        raise IndexOutOfRange(f"j must lie in 0..{n - 2}, got {j}")
    xi, eta = [], []
    prev = x[j]
    for m in range(j + 1, n):
        pair = (prev, x[m])
        image = s.r(*pair)
        if image == pair or s.r(*image) != pair:
            raise RelationLookupFailed(f"{pair} lies in no two-sided relation")
        xi.append(image[0])
        eta.append(image[1])
        prev = image[1]
    return EtaChain(tuple(xi), tuple(eta))
