"""Exception hierarchy shared by every module.

The CLI maps :class:`InputError` to exit code 2 and :class:`CapExceeded`
to exit code 3.
"""


class PowerSemigroupError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PowerSemigroupError, ValueError):
    """Malformed or out-of-domain input."""


class CofinitenessError(InputError):
    """Generators with gcd != 1 do not generate a cofinite semigroup."""


class GroundSetError(InputError):
    """An element does not belong to the ground semigroup."""


class PreconditionError(InputError):
    """An operation was called outside its documented precondition."""


class CapExceeded(PowerSemigroupError, RuntimeError):
    """A configured size or time cap was exceeded."""


class ThresholdOverflow(CapExceeded):
    """A tail threshold grew past the configured maximum."""
