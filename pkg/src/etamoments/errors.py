"""Exception taxonomy shared across the package."""


class EtamomentsError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(EtamomentsError, ValueError):
    """An argument violates a documented precondition."""


class DomainError(EtamomentsError, ValueError):
    """A numeric argument lies outside the validated domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class NearZeroError(EtamomentsError, ArithmeticError):
    """A denominator is numerically too close to zero (disk-condition violation)."""


class DivergenceError(DomainError):
    """An improper integral diverges for the given parameters."""


class CacheError(EtamomentsError, RuntimeError):
    """A prime-table cache file is missing, truncated, or corrupt."""


class ContourPoleError(EtamomentsError, ValueError):
    """A sampling contour touches or encloses the pole at s = 1/2."""


class InsufficientSieveError(EtamomentsError, ValueError):
    """The available step function is truncated too early for the requested scan."""


class DiskValidationError(EtamomentsError, ValueError):
    """Base class for disk-validation failures; one named subclass per condition."""

    condition = "invalid-disk"


class DiskHalfNotContainedError(DiskValidationError):
    """The disk does not contain the point 1/2."""

    condition = "disk does not contain 1/2"


class DiskReachesThirdError(DiskValidationError):
    """The disk reaches Re <= 1/3."""

    condition = "disk reaches Re <= 1/3"


class DiskCenterError(DiskValidationError):
    """The disk center does not satisfy Re(s0) > 1."""

    condition = "center has Re(s0) <= 1"


class DiskImagBoundError(DiskValidationError):
    """The disk is too high: zero-freeness of zeta(s), zeta(2s) is not guaranteed."""

    condition = "disk exceeds the certified zero-free height (|Im(s0)| + h >= 7)"
