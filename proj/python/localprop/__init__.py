"""Local-property colorings of K_n, difference sets and distinct distances."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
