"""Operator theory of the symmetrized bidisc, backed by a C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import SymbidiscError, Tolerances

__all__ = [name for name in dir() if not name.startswith("_")]
