"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LieopError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(LieopError):
    """Operands have incompatible dimensions."""


class NotInvertible(LieopError):
    """Square matrix with zero determinant."""


class NoSolution(LieopError):
    """Inconsistent linear system."""


class ValidationError(LieopError):
    """A structural axiom failed at construction time.

    Carries the CheckReport with the failing witnesses.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionFailure(LieopError):
    """A composite check's hypothesis failed.

    Distinct from the check's own conditions failing: the verdict of the
    composite check is undefined when a hypothesis does not hold.
    """

    def __init__(self, name, report=None):
        super().__init__(f"precondition failed: {name}")
        self.name = name
        self.report = report


class StructureCheckError(LieopError):
    """A derived object failed the verification it is guaranteed to pass."""


class GridCapExceeded(LieopError):
    """Candidate count of an exhaustive search exceeds the configured cap."""


class DocumentError(LieopError):
    """A document failed to parse; carries the offending JSON path."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
