"""Exception hierarchy shared by the engines and the command line."""

from __future__ import annotations


class CyError(Exception):
    """Base class for every error raised by this package."""


class MissingSymbol(CyError, KeyError):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"no value assigned to symbol {self.name!r}"


class InvalidRecord(CyError, ValueError):
    """An invariant record violates its structural or numeric constraints."""


class OutOfRange(CyError, ValueError):
    pass


class UnknownPreset(CyError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown preset"


class TooFewFactors(CyError, ValueError):
    pass


class SingularLinearization(CyError, ValueError):
    pass


class InvalidSelfIntersection(CyError, ValueError):
    pass


class PreconditionViolated(CyError, ValueError):
    pass


class NonUnitConstantTerm(CyError, ValueError):
    pass


class MissingFrobeniusData(CyError, ValueError):
    pass


class RenderError(CyError, ValueError):
    pass


class RegistryConflict(CyError, ValueError):
    """Two sources declare the same Weil symbol with different attributes."""


class SpecError(CyError, ValueError):
    """A malformed factor or record specification on the command line."""
