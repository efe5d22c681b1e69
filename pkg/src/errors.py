"""Typed errors raised across the checker."""


class GrowthCheckError(Exception):
    """Base class for every error raised by this package."""

    pass


class InputError(GrowthCheckError):
    """Raised when a caller violates an input contract."""

    pass


class NotPrime(InputError):
    """Raised when a prime was required but a composite was given."""

    pass


class BadReduction(InputError):
    """Raised when a prime divides the conductor but good reduction was required."""

    pass


class SupersingularInput(InputError):
    """Raised when an ordinary prime was required but a_p is divisible by p."""

    pass


class OrdinaryInput(InputError):
    """Raised when a supersingular prime was required but a_p is a unit mod p."""

    pass


class NonzeroTraceSupersingular(InputError):
    """Raised for supersingular primes with a_p != 0 (only p = 3 with a_3 = ±3)."""

    pass


class RamifiedPrime(InputError):
    """Raised when p divides the field discriminant but p had to be unramified."""

    pass


class RamifiedBadPrime(InputError):
    """Raised when a bad prime of the curve ramifies in the field."""

    pass


class RamifiedTwist(InputError):
    """Raised when a twisting discriminant shares a factor with the conductor."""

    pass


class NonSplitPrime(InputError):
    """Raised when p had to split in the field but is inert or ramified."""

    pass


class SignMismatch(InputError):
    """Raised when a symbol's sign does not match the parity of a character."""

    pass


class UnknownCurve(InputError):
    """Raised when a curve label is not in the loaded table."""

    pass


class CurveLoadError(InputError):
    """Raised when a curve file line cannot be parsed or fails verification."""

    pass


class ConfigError(InputError):
    """Raised when the run configuration is invalid."""

    pass


class ComputationError(GrowthCheckError):
    """Raised when a computation cannot deliver a trustworthy result."""

    pass


class PrecisionExhausted(ComputationError):
    """Raised when no digit of a result survives the precision bookkeeping."""

    pass


class NotDivisible(ComputationError):
    """Raised when an exact series division leaves a nonzero remainder."""

    pass


class NormCompatibilityFailed(ComputationError):
    """Raised when stabilized elements at consecutive levels do not agree."""

    pass


class NonRationalResult(ComputationError):
    """Raised when a value expected in the base field has an alpha-component."""

    pass


class EigenspaceNotRankOne(ComputationError):
    """Raised when Hecke operators fail to cut the eigenspace down to a line."""

    pass


class NormalizationAmbiguous(ComputationError):
    """Raised when a numerical L-value cannot be rationalized reliably."""

    pass


class NoNonvanishingTwist(ComputationError):
    """Raised when no auxiliary twist with nonzero central value is found."""

    pass


class ResourceLimit(ComputationError):
    """Raised when a computation would exceed a configured size bound."""

    pass
