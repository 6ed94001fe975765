"""Exact computation with graph polytopes, interior polynomials and h*-certificates."""

from ._bgpoly import *  # noqa: F401,F403
from ._bgpoly import __doc__ as _core_doc

__version__ = "0.1.0"
