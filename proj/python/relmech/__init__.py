"""Special-relativistic mechanics: tensors, worldlines, fields and orbits."""

from _relmech import *  # noqa: F401,F403
