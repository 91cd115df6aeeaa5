"""Exact-arithmetic solvers and certificates for Bezout ideal problems in
subalgebras of bounded analytic functions on the unit disk."""

from .errors import (
    DiskIdealError,
    DomainError,
    DimensionMismatchError,
    IllConditionedError,
    InadmissibleDenominatorError,
    IndeterminateRootError,
    InstanceError,
    InvalidKSetError,
    NeitherCaseError,
    NoExponentError,
    NonDivisibleError,
    NotExpandableError,
    NotInIdealError,
    NotReducibleError,
    ZeroConstantTermError,
)
from .ring import (
    DEFAULT_GRID,
    GRat,
    GridSpec,
    Poly,
    RFunc,
    VecFn,
    den_admissible,
    derivative_at_zero,
    sup_norm_estimate,
    taylor_coeff,
)

__all__ = [
    "DiskIdealError", "DomainError", "DimensionMismatchError",
    "IllConditionedError", "InadmissibleDenominatorError",
    "IndeterminateRootError", "InstanceError", "InvalidKSetError",
    "NeitherCaseError", "NoExponentError", "NonDivisibleError",
    "NotExpandableError", "NotInIdealError", "NotReducibleError",
    "ZeroConstantTermError",
    "DEFAULT_GRID", "GRat", "GridSpec", "Poly", "RFunc", "VecFn",
    "den_admissible", "derivative_at_zero", "sup_norm_estimate",
    "taylor_coeff",
]
