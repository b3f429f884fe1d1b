"""Equality, normal forms, heads and tails of words in the monoid S(X, r).

Two words are equal in S exactly when they lie in the same orbit of the
group generated by the maps ``r`` applied at adjacent positions, so
everything here is driven by a breadth-first orbit closure.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from typing import Iterable, Sequence

from .core import QuadraticSet
from .errors import IndexOutOfRange, OrbitCapExceeded

DEFAULT_CAP = 100_000

Word = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Orbit:
    representative: Word  # lex-min member under 0 < 1 < ... < n-1
    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.members


def as_word(s: QuadraticSet, w: Iterable[int]) -> Word:
    w = tuple(w)
    for c in w:
        if not (isinstance(c, int) and 0 <= c < s.n):
            raise IndexOutOfRange(f"letter {c!r} out of range for n={s.n}")
    return w


def orbit(s: QuadraticSet, w: Sequence[int], cap: int = DEFAULT_CAP) -> Orbit:
    w = as_word(s, w)
    cached = s._orbits.get(w)
    if cached is not None:
        if cached.size > cap:
            raise OrbitCapExceeded(cap, w)
        return cached

    table, n = s.r_table, s.n
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            a, b = table[cur[i] * n + cur[i + 1]]
            nxt = cur[:i] + (a, b) + cur[i + 2 :]
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise OrbitCapExceeded(cap, w)
                queue.append(nxt)

    result = Orbit(min(seen), frozenset(seen))
    for member in seen:
        s._orbits[member] = result
    return result


def equal_in_monoid(
    s: QuadraticSet, u: Sequence[int], v: Sequence[int], cap: int = DEFAULT_CAP
) -> bool:
    u, v = as_word(s, u), as_word(s, v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    return v in orbit(s, u, cap)


def order_key(ordering: Sequence[int]):
    """Sort key for words under the degree-lex order listing ``ordering`` ascending."""
    rank = {x: i for i, x in enumerate(ordering)}
    return lambda word: (len(word), tuple(rank[c] for c in word))


def normal_form(
    s: QuadraticSet,
    w: Sequence[int],
    ordering: Sequence[int] | None = None,
    cap: int = DEFAULT_CAP,
) -> Word:
    orb = orbit(s, w, cap)
    if ordering is None or list(ordering) == list(range(s.n)):
        return orb.representative
    if sorted(ordering) != list(range(s.n)):
        raise IndexOutOfRange(f"ordering {list(ordering)} is not a permutation of X")
    return min(orb.members, key=order_key(ordering))


def has_square(w: Sequence[int]) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def is_square_free_word(s: QuadraticSet, w: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    return not any(has_square(m) for m in orbit(s, w, cap).members)


def boundary_letters(
    s: QuadraticSet, w: Sequence[int], cap: int = DEFAULT_CAP
) -> tuple[frozenset, frozenset]:
    """Heads and tails of ``w``: letters that can start or end some spelling."""
    if len(w) < 1:
        raise IndexOutOfRange("heads and tails need a non-empty word")
    members = orbit(s, w, cap).members
    return frozenset(m[0] for m in members), frozenset(m[-1] for m in members)


def square_free_elements(
    s: QuadraticSet, max_len: int, cap: int = DEFAULT_CAP
) -> list[list[Word]]:
    """Square-free elements of S by degree.

    Entry ``d - 1`` lists the lex-min representatives of degree ``d``.
    Every prefix of a square-free element is square-free, so degree ``d``
    is reached by extending degree ``d - 1`` representatives by one letter.
    """
    if max_len < 1:
        raise IndexOutOfRange("max_len must be at least 1")
    out: list[list[Word]] = []
    frontier: list[Word] = [()]
    for _ in range(max_len):
        found = set()
        for rep in frontier:
            for x in range(s.n):
                orb = orbit(s, rep + (x,), cap)
                if orb.representative in found:
                    continue
                if not any(has_square(m) for m in orb.members):
                    found.add(orb.representative)
        frontier = sorted(found)
        out.append(frontier)
    return out


def orbit_classes(s: QuadraticSet, degree: int, cap: int = DEFAULT_CAP) -> list[Orbit]:
    """All orbits on X^degree, i.e. the elements of S of that degree."""
    seen: set = set()
    classes = []
    for w in itertools.product(range(s.n), repeat=degree):
        if w in seen:
            continue
        orb = orbit(s, w, cap)
        seen.update(orb.members)
        classes.append(orb)
    return classes
