"""Membership in finite semigroups given by Cayley tables."""

from ._core import *  # noqa: F401,F403
from ._core import CsmError, Semigroup  # noqa: F401
