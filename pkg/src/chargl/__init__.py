"""Exact characters of equivariant D-modules on spaces of matrices."""

from .grothendieck import StabilizationFailure, VirtualRep, Window
from .spaces import General, MatrixSpace, Skew, Symmetric
from .weights import Parity, Term, straighten

__all__ = [
    "General",
    "MatrixSpace",
    "Parity",
    "Skew",
    "StabilizationFailure",
    "Symmetric",
    "Term",
    "VirtualRep",
    "Window",
    "straighten",
]

__version__ = "0.1.0"
