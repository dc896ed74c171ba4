"""Finite incidence structures, binomial configurations, hyperplane
decompositions and Pascal triangles of configurations."""

from binconf._core import *  # noqa: F401,F403
from binconf._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
