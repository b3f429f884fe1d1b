"""Exception types shared across the package."""

from __future__ import annotations


class QuadSetError(Exception):
    """Base class for every error raised by quadset."""


class IndexOutOfRange(QuadSetError, ValueError):
    pass


class NotABijection(QuadSetError, ValueError):
    """Two distinct pairs are sent to the same image."""

    def __init__(self, pair, other, image):
        self.pair = tuple(pair)
        self.other = tuple(other)
        self.image = tuple(image)
        super().__init__(
            f"at ({pair[0]},{pair[1]}): ({pair[0]},{pair[1]}) and "
            f"({other[0]},{other[1]}) both map to ({image[0]},{image[1]})"
        )


class NotAPermutation(QuadSetError, ValueError):
    pass


class NotSquareFree(QuadSetError, ValueError):
    pass


class OrbitCapExceeded(QuadSetError, RuntimeError):
    """An orbit grew past the configured cap; raise the cap and retry."""

    def __init__(self, cap: int, word=None):
        self.cap = cap
        self.word = word
        super().__init__(f"orbit of {word} exceeds cap {cap}")


class RelationLookupFailed(QuadSetError, LookupError):
    pass


class NoCandidateDelta(QuadSetError, LookupError):
    """There is no unique square-free element of top degree."""


class ConsistencyViolation(QuadSetError, AssertionError):
    """A census check failed. Carries the offending set."""

    def __init__(self, check: str, qset, detail: str = ""):
        self.check = check
        self.qset = qset
        self.detail = detail
        msg = f"{check} violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
