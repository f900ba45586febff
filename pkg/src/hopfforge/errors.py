"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HopfForgeError(Exception):
    """Base class for all errors raised by hopfforge."""


class FieldMismatch(HopfForgeError, ValueError):
    """Two scalars or matrices live over different ground fields."""


class DivisionByZero(HopfForgeError, ZeroDivisionError):
    """Division by the zero scalar."""


class GradingMismatch(HopfForgeError, ValueError):
    """Objects carry different grading groups or braidings."""


class ShapeMismatch(HopfForgeError, ValueError):
    """Domains and codomains of morphisms do not fit together."""


class NonHomogeneous(HopfForgeError, ValueError):
    """A matrix would map a basis vector of one degree into another degree."""

    def __init__(self, message: str, row: int, col: int):
        super().__init__(message)
        self.row = row
        self.col = col


class MissingStructure(HopfForgeError, ValueError):
    """A structure map required by a check is absent from a bundle."""


class PreconditionFailed(HopfForgeError):
    """A hypothesis of an operation is violated; ``label`` names the failing law."""

    def __init__(self, label: str, detail: str = ""):
        super().__init__(f"{label}: {detail}" if detail else label)
        self.label = label
        self.detail = detail


class CheckFailed(PreconditionFailed):
    """A verification performed inside a construction failed."""


class FactorizationFailed(HopfForgeError):
    """A morphism does not factor through a mono (or epi) as required."""


class InvalidMatchedPair(HopfForgeError, ValueError):
    """Action tables of a matched pair of groups do not produce a group."""


class BundleFormatError(HopfForgeError, ValueError):
    """A structure bundle file is malformed; ``path`` locates the problem."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
