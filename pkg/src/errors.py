"""Exception hierarchy shared by the engine and the CLI.

Every error carries the process exit code the CLI maps it to.
"""
from typing import Optional


class HeisenbergError(Exception):
    """Base class for all engine errors"""

    exit_code = 3


class DomainError(HeisenbergError, ValueError):
    """Input outside the domain of an operation"""

    exit_code = 3


class ShapeMismatch(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class InvNotSupported(DomainError):
    pass


class BadIndex(DomainError):
    pass


class NotClassical(DomainError):
    pass


class UnsupportedLeading(DomainError):
    pass


class NotElliptic(DomainError):
    pass


class TruncationTooShallow(DomainError):
    pass


class LogResidueUnsupported(DomainError):
    pass


class CubatureNoConvergence(DomainError):
    pass


class ModulusMismatch(DomainError):
    pass


class NonIsometricAction(DomainError):
    pass


class NotDegreeZero(DomainError):
    pass


class WrongShape(DomainError):
    pass


class NonInvertibleSymbol(DomainError):
    pass


class NotInFiltration(DomainError):
    pass


class DescriptorInvalid(DomainError):
    pass


class GroupMismatch(DomainError):
    pass


class DocumentError(HeisenbergError):
    """Malformed symbol, group or matrix document"""

    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}, column {column or 1}: "
        super().__init__(f"{location}{message}")


class VerificationFailure(HeisenbergError):
    """A verification suite reported failing cases"""

    exit_code = 1
