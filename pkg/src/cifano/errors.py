"""Exception hierarchy shared by the toolkit and mapped to CLI exit codes."""


class CifanoError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ParameterError(CifanoError, ValueError):
    """Invalid (m, k, d) tuple, modulus or index."""

    exit_code = 2


class RegimeError(CifanoError):
    """The requested experiment does not apply to the parameter regime."""

    exit_code = 3


class CapExceededError(CifanoError):
    """An enumeration would exceed its configured size cap."""

    exit_code = 4

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class VerificationError(CifanoError):
    """A replayed certificate or an internal cross-check disagreed."""

    exit_code = 5
