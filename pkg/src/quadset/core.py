"""Finite quadratic sets (X, r) and their pointwise properties.

Generators are the indices ``0..n-1``.  The map ``r`` is stored flat:
``r_table[x * n + y] == (u, v)`` means ``r(x, y) = (u, v)``, where
``u = left[x][y]`` is the left action of ``x`` on ``y`` and
``v = right[y][x]`` is the right action of ``y`` on ``x``.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Mapping, Sequence

from .errors import IndexOutOfRange, NotABijection, NotAPermutation

Pair = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class QuadraticSet:
    n: int
    r_table: tuple[Pair, ...]
    left: tuple[tuple[int, ...], ...] = dataclasses.field(compare=False, repr=False)
    right: tuple[tuple[int, ...], ...] = dataclasses.field(compare=False, repr=False)
    # word -> Orbit memo, filled lazily by the words module
    _orbits: dict = dataclasses.field(
        default_factory=dict, compare=False, repr=False, hash=False
    )

    def r(self, x: int, y: int) -> Pair:
        return self.r_table[x * self.n + y]

    def pairs(self) -> Iterable[Pair]:
        return itertools.product(range(self.n), repeat=2)

    def as_rows(self) -> list[list[int]]:
        """The table as a list of ``[x, y, u, v]`` rows, row-major in (x, y)."""
        return [[x, y, *self.r(x, y)] for x, y in self.pairs()]


@dataclasses.dataclass(frozen=True)
class PropertyReport:
    involutive: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    square_free: bool
    lri: bool
    cl1: bool
    cl2: bool
    cr1: bool
    cr2: bool
    l1: bool
    r1: bool
    lr3: bool
    braided: bool
    fixed_points: list[Pair]
    relation_count: int

    @property
    def nondegenerate(self) -> bool:
        return self.left_nondegenerate and self.right_nondegenerate

    @property
    def cyclic(self) -> bool:
        return self.cl1 and self.cl2 and self.cr1 and self.cr2

    @property
    def quantum_binomial(self) -> bool:
        return self.involutive and self.nondegenerate and self.square_free

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["fixed_points"] = [list(p) for p in self.fixed_points]
        return d


def build_set(n: int, r_table: Mapping[Pair, Pair] | Sequence) -> QuadraticSet:
    """Validate a pair map and derive its action tables.

    ``r_table`` is either a mapping ``(x, y) -> (u, v)`` or a sequence of
    ``n*n`` images listed row-major in ``(x, y)``.
    """
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    if isinstance(r_table, Mapping):
        missing = [p for p in itertools.product(range(n), repeat=2) if p not in r_table]
        if missing:
            raise IndexOutOfRange(f"table is not total: no image for {missing[0]}")
        for key in r_table:
            if not all(isinstance(a, int) and 0 <= a < n for a in key) or len(key) != 2:
                raise IndexOutOfRange(f"pair {key} out of range for n={n}")
        flat = [r_table[p] for p in itertools.product(range(n), repeat=2)]
    else:
        flat = list(r_table)
        if len(flat) != n * n:
            raise IndexOutOfRange(f"expected {n * n} images, got {len(flat)}")

    images: list[Pair] = []
    seen: dict[Pair, Pair] = {}
    for idx, img in enumerate(flat):
        img = tuple(img)
        src = divmod(idx, n)
        if len(img) != 2 or not all(isinstance(a, int) and 0 <= a < n for a in img):
            raise IndexOutOfRange(f"image {img} of {src} out of range for n={n}")
        if img in seen:
            raise NotABijection(seen[img], src, img)
        seen[img] = src
        images.append(img)

    left = tuple(tuple(images[x * n + y][0] for y in range(n)) for x in range(n))
    right = tuple(tuple(images[x * n + y][1] for x in range(n)) for y in range(n))
    return QuadraticSet(n, tuple(images), left, right)


def _check_permutation(row: Sequence[int], n: int, label: str) -> tuple[int, ...]:
    row = tuple(row)
    if sorted(row) != list(range(n)):
        raise NotAPermutation(f"{label} = {list(row)} is not a permutation of 0..{n - 1}")
    return row


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def build_from_left_action(n: int, L: Sequence[Sequence[int]]) -> QuadraticSet:
    """Build ``r(x, y) = (L[x](y), L[y]^-1(x))``.

    The result satisfies lri by construction; whether it is involutive or
    nondegenerate has to be checked separately.
    """
    if len(L) != n:
        raise NotAPermutation(f"expected {n} left actions, got {len(L)}")
    rows = [_check_permutation(L[x], n, f"L[{x}]") for x in range(n)]
    inv = [invert(p) for p in rows]
    return build_set(n, [(rows[x][y], inv[y][x]) for x in range(n) for y in range(n)])


def trivial_set(n: int) -> QuadraticSet:
    """The flip ``r(x, y) = (y, x)``; its monoid is free abelian."""
    return build_set(n, [(y, x) for x in range(n) for y in range(n)])


def left_action_of(s: QuadraticSet) -> list[list[int]] | None:
    """Return the left action rows if ``s`` is exactly the lri set they build."""
    try:
        rebuilt = build_from_left_action(s.n, s.left)
    except (NotAPermutation, NotABijection):
        return None
    return [list(row) for row in s.left] if rebuilt == s else None


def is_braided(s: QuadraticSet) -> bool:
    """Check r12 r23 r12 == r23 r12 r23 on every triple."""
    r = s.r
    for x, y, z in itertools.product(range(s.n), repeat=3):
        # left side: r12, r23, r12
        a, b = r(x, y)
        b, c = r(b, z)
        a, b = r(a, b)
        # right side: r23, r12, r23
        q, w = r(y, z)
        p, q = r(x, q)
        q, w = r(q, w)
        if (a, b, c) != (p, q, w):
            return False
    return True


def _is_perm(row: Sequence[int]) -> bool:
    return len(set(row)) == len(row)


def check_properties(s: QuadraticSet) -> PropertyReport:
    n, L, R = s.n, s.left, s.right
    X = range(n)
    pairs = list(s.pairs())
    triples = list(itertools.product(X, repeat=3))

    fixed = [p for p in pairs if s.r(*p) == p]
    relation_classes = {frozenset((p, s.r(*p))) for p in pairs if s.r(*p) != p}

    return PropertyReport(
        involutive=all(s.r(*s.r(*p)) == p for p in pairs),
        left_nondegenerate=all(_is_perm(L[x]) for x in X),
        right_nondegenerate=all(_is_perm(R[y]) for y in X),
        square_free=all(s.r(x, x) == (x, x) for x in X),
        lri=all(R[x][L[x][y]] == y and L[x][R[x][y]] == y for x, y in pairs),
        cl1=all(L[R[x][y]][x] == L[y][x] for x, y in pairs),
        cl2=all(L[L[x][y]][x] == L[y][x] for x, y in pairs),
        cr1=all(R[L[x][y]][x] == R[y][x] for x, y in pairs),
        cr2=all(R[R[x][y]][x] == R[y][x] for x, y in pairs),
        l1=all(L[x][L[y][z]] == L[L[x][y]][L[R[y][x]][z]] for x, y, z in triples),
        r1=all(R[z][R[y][x]] == R[R[z][y]][R[L[y][z]][x]] for x, y, z in triples),
        lr3=all(
            R[L[R[y][x]][z]][L[x][y]] == L[R[L[y][z]][x]][R[z][y]]
            for x, y, z in triples
        ),
        braided=is_braided(s),
        fixed_points=fixed,
        relation_count=len(relation_classes),
    )


def relabel(s: QuadraticSet, perm: Sequence[int]) -> QuadraticSet:
    """Rename generator ``x`` to ``perm[x]``."""
    n = s.n
    flat: list[Pair] = [(0, 0)] * (n * n)
    for x, y in s.pairs():
        u, v = s.r(x, y)
        flat[perm[x] * n + perm[y]] = (perm[u], perm[v])
    return build_set(n, flat)


def _relabelled_key(s: QuadraticSet, perm: Sequence[int], inv: Sequence[int]) -> tuple:
    n = s.n
    out = []
    for a in range(n):
        for b in range(n):
            u, v = s.r_table[inv[a] * n + inv[b]]
            out.append(perm[u])
            out.append(perm[v])
    return tuple(out)


def canonical_form(s: QuadraticSet) -> QuadraticSet:
    """Relabelling with the lexicographically smallest flattened r-table."""
    best_key, best_perm = None, None
    for perm in itertools.permutations(range(s.n)):
        key = _relabelled_key(s, perm, invert(perm))
        if best_key is None or key < best_key:
            best_key, best_perm = key, perm
    return relabel(s, best_perm)


def automorphism_count(s: QuadraticSet) -> int:
    return sum(
        1 for perm in itertools.permutations(range(s.n)) if relabel(s, perm) == s
    )
