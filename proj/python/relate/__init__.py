"""Relating edges, shedding vertices and the SAT to RE reduction chain."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
