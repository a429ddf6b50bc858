"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class CarmpolyError(Exception):
    """Base class for all library errors."""


class DomainError(CarmpolyError, ValueError):
    """Input is outside the mathematical domain of the operation (CLI exit 1)."""


class RangeError(CarmpolyError, ValueError):
    """Value leaves the supported 64-bit range (CLI exit 1)."""


class ResourceError(CarmpolyError, RuntimeError):
    """Request exceeds a configured resource ceiling (CLI exit 3)."""
