"""Off-diagonal geometric phases for unitarily transported mixed states."""

from offdiag._core import *  # noqa: F401,F403
from offdiag._core import __doc__  # noqa: F401

__version__ = "0.1.0"
