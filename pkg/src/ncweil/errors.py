"""Exception types shared across the package."""


class NcweilError(Exception):
    pass


class ConfigurationError(NcweilError):
    """Incompatible objects combined (mismatched truncation orders, modes, bases)."""


class DomainError(NcweilError, ValueError):
    """Input outside the mathematical domain of an operation."""


class UnknownGeneratorError(NcweilError, KeyError):
    pass


class UnknownPresetError(NcweilError, KeyError):
    pass


class WindowOverflowError(NcweilError):
    """Result of an operation escapes a hard enumeration window."""


class WindowNotStabilizedError(NcweilError):
    """A windowed solver found an operator image escaping the window.

    Carries the escaping element so reports can name a witness.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CheckFailure(NcweilError, AssertionError):
    """A verification suite assertion failed; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
