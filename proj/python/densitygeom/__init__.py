"""Geometry of finite-dimensional density matrices.

Thin Python layer over the C++ core: generalized Gell-Mann bases, coherence
vectors, eigenvalue-simplex chambers and strata, Casimir invariants and
von Neumann entropy.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
