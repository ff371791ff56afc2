"""Tamely ramified extensions of local fields and cyclic group cohomology."""

from ._tamecoh import *  # noqa: F401,F403
from ._tamecoh import __version__  # noqa: F401
