"""Exception types shared across the package."""


class FockGeomError(Exception):
    """Base class for all package-specific errors."""


class TruncationOverflowError(FockGeomError):
    """A truncated computation failed its tail-mass guard.

    The caller should retry at a larger dimension (typically doubled).
    """


class DecompositionSingularError(FockGeomError):
    """Gauss decomposition attempted on a matrix with d = 0."""


class GuardRangeError(FockGeomError, ValueError):
    """Parameters outside the validated range |alpha| <= 2, |beta| <= 1."""


class InternalConsistencyError(FockGeomError):
    """A quantity that should be real (or otherwise constrained) is not."""
