"""Exception types shared across the package."""


class BetaringError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(BetaringError):
    """Group closure grew past the configured element cap."""


class DegreeCap(BetaringError):
    """An operation would produce a degree above the configured maximum."""


class SizeCap(BetaringError):
    """A G-set construction would exceed the configured point cap."""


class NotASubgroup(BetaringError):
    """A purported subgroup is not contained in the ambient group."""


class IntegralityViolation(BetaringError):
    """An exact computation produced a non-integer where an integer is forced."""


class NotEffective(BetaringError):
    """An operation requiring nonnegative coefficients got a virtual element."""


class PrecisionMismatch(BetaringError):
    """Witt vectors of different precisions were combined."""
