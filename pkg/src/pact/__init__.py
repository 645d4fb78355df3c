"""Partial group actions on finite-dimensional algebras, with exact arithmetic."""

from .exactfield import GF, QQ, Field, LinearMap, Subspace
from .groups import Group, cyclic, klein_four, symmetric
from .algebra import Algebra, Ideal, make_algebra

__all__ = [
    "GF", "QQ", "Field", "LinearMap", "Subspace",
    "Group", "cyclic", "klein_four", "symmetric",
    "Algebra", "Ideal", "make_algebra",
]
__version__ = "0.1.0"
