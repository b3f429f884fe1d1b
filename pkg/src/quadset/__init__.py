"""Exact computations on finite quadratic sets and their monoids."""

from .core import (
    PropertyReport,
    QuadraticSet,
    build_from_left_action,
    build_set,
    canonical_form,
    check_properties,
    trivial_set,
)
from .errors import (
    ConsistencyViolation,
    IndexOutOfRange,
    NoCandidateDelta,
    NotABijection,
    NotAPermutation,
    NotSquareFree,
    OrbitCapExceeded,
    QuadSetError,
    RelationLookupFailed,
)

__version__ = "0.1.0"
