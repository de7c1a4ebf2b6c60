"""Zeno Darwin exceptions."""

from __future__ import annotations


class ZenoDarwinError(Exception):
    """Base exception for all simulator errors."""


class NonHermitianError(ZenoDarwinError, ValueError):
    """Matrix is not Hermitian within tolerance."""

    def __init__(self, asymmetry: float) -> None:
        self.asymmetry = asymmetry
        super().__init__(f"Matrix is not Hermitian (max asymmetry {asymmetry:.3e})")


class NotNormalizedError(ZenoDarwinError, ValueError):
    """Probability vector does not sum to one."""

    def __init__(self, total: float) -> None:
        self.total = total
        super().__init__(f"Probabilities sum to {total!r}, expected 1")


class OutOfRangeError(ZenoDarwinError, ValueError):
    """Argument outside of its valid domain."""


class InvalidParamsError(ZenoDarwinError, ValueError):
    """Model parameters are out of range or inconsistent with the model kind."""

    def __init__(self, msg: str, *, field: str | None = None) -> None:
        self.field = field
        super().__init__(msg)


class UnsupportedModelError(ZenoDarwinError, NotImplementedError):
    """Operation is not defined for the given model kind."""


class TooLargeError(ZenoDarwinError, ValueError):
    """Exact state vector would exceed the oracle size cap."""


class BadSubsetError(ZenoDarwinError, ValueError):
    """Invalid subsystem selection for a partial trace."""


class InvalidConfigError(ZenoDarwinError, ValueError):
    """Sweep configuration is invalid."""

    def __init__(self, msg: str, *, field: str | None = None) -> None:
        self.field = field
        super().__init__(msg)


class UnknownPresetError(InvalidConfigError):
    """Figure preset name is not known."""


class ConfigParseError(InvalidConfigError):
    """Config file could not be parsed."""

    def __init__(
        self, msg: str, *, field: str | None = None, line: int | None = None
    ) -> None:
        self.line = line
        super().__init__(msg, field=field)


class UsageError(ZenoDarwinError):
    """Invalid or conflicting command line flags."""
