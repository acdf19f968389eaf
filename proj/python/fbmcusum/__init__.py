"""Cusum tests for changes in the Hurst exponent or volatility of fractional Brownian motion."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
