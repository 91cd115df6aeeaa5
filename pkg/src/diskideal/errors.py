"""Exception hierarchy.

Every failure mode that carries mathematical meaning gets its own class so
callers (and the CLI exit-code mapping) can distinguish "the input violates a
hypothesis" from "the requested object does not exist".
"""


class DiskIdealError(Exception):
    """Base class for all library errors."""


class DomainError(DiskIdealError):
    """Evaluation requested outside the closed unit disk."""


class InadmissibleDenominatorError(DiskIdealError):
    """A denominator has a root inside (or on) the closed unit disk."""


class IndeterminateRootError(DiskIdealError):
    """A root modulus is too close to 1 to certify at floating tolerance.

    Raised when the exact root-location test and the floating cross-check
    disagree; the instance is ill-posed at desk scale.
    """


class NonDivisibleError(DiskIdealError):
    """An exact division (by a Blaschke product, z^m, or another function)
    has a nonzero remainder or would leave the admissible-denominator model."""


class NotExpandableError(DiskIdealError):
    """A B-adic expansion level has no constant coefficient."""

    def __init__(self, message, level=None, witness=None):
        super().__init__(message)
        self.level = level
        self.witness = witness


class NotInIdealError(DiskIdealError):
    """The target function is not in the ideal generated by the tuple."""


class IllConditionedError(DiskIdealError):
    """Root configuration too close to the unit circle to resolve."""


class InvalidKSetError(DiskIdealError):
    """A derivative-index set does not define an algebra, or a shift m lies
    in the set."""


class NeitherCaseError(DiskIdealError):
    """Degenerate instance outside both solvable cases of the shifted
    constructions: the shifted index set is not an algebra and the shift does
    not exceed the largest index.  Refused rather than guessed."""


class NotReducibleError(DiskIdealError):
    """A coefficient index is not divisible by the requested period d."""


class NoExponentError(DiskIdealError):
    """Radical-membership search exhausted its exponent budget."""


class DimensionMismatchError(DiskIdealError):
    """Vector/operator dimensions are incompatible."""


class InstanceError(DiskIdealError):
    """An instance file or record violates its declared invariants
    (membership of the data in the declared algebra, base-solution residual,
    malformed fields)."""


class ZeroConstantTermError(DiskIdealError):
    """The constant part of F vanishes; the caller must use the shifted
    (zero-case) solver instead."""
