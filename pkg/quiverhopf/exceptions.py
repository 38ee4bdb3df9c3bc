# quiverhopf/exceptions.py
from typing import Any, Optional


class QuiverHopfError(Exception):
    """Base class for all library errors."""


class BoundExceededError(QuiverHopfError, ValueError):
    """A configured enumeration or degree bound was exceeded."""

    def __init__(self, what: str, value: int, bound: int):
        self.what = what
        self.value = value
        self.bound = bound
        super().__init__(f"{what} = {value} exceeds the configured bound {bound}")


class PreconditionError(QuiverHopfError, ValueError):
    """An operation was called on data outside its domain."""


class UnsupportedGroupError(QuiverHopfError, NotImplementedError):
    """The operation is not available for this kind of group."""


class ScalarModeError(QuiverHopfError, TypeError):
    """Two scalars live in fields that cannot be combined."""


class ConfigError(QuiverHopfError, ValueError):
    """A config file could not be parsed into domain objects."""


class VerificationError(QuiverHopfError, AssertionError):
    """An identity that should hold was found to fail."""

    def __init__(self, check: str, message: str, witness: Optional[Any] = None):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {message}")
