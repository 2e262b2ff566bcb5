"""Time-dependent Aharonov-Bohm phase and three-crystal interferometer."""

from ._abfringe import *  # noqa: F401,F403
from ._abfringe import __doc__  # noqa: F401

__version__ = "0.1.0"
