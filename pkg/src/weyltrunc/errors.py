"""Exception and warning types shared across the package.

CLI exit-code mapping: ConfigurationError / DomainError / OverflowGuardError
are usage errors (exit 2), ResourceCapError is a refused computation
(exit 3), InvariantViolationError is a failed mathematical check (exit 1).
"""


class WeyltruncError(Exception):
    """Base class for all package errors."""


class ConfigurationError(WeyltruncError):
    """Invalid type/rank/p/m combination or bad run configuration."""


class DomainError(WeyltruncError):
    """An operation was called outside its stated precondition."""


class ResourceCapError(WeyltruncError):
    """An enumeration would exceed a configured cap; nothing was computed."""


class InvariantViolationError(WeyltruncError):
    """A uniqueness or consistency property that must hold was violated."""


class OverflowGuardError(WeyltruncError):
    """Weight coordinates exceed the checked-arithmetic magnitude guard."""


class NonPrimeWarning(UserWarning):
    """The affine parameter p is not prime (allowed, but worth flagging)."""


class LargeRankWarning(UserWarning):
    """Rank above the comfortable enumeration range was requested."""
