"""Pose and power planning for a two-drone transmitter/jammer team."""

from ._aerojam import *  # noqa: F401,F403
from ._aerojam import __doc__  # noqa: F401

__version__ = "0.1.0"
