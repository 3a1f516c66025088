"""
stirsort - costs of rearranging stirred binary configurations

Exact and heuristic minimum-cost sorting under block transpositions,
logarithmic lower-bound certificates and a torus shear-flow mixing
explorer.
"""

import logging

from .errors import StirsortError

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = ['StirsortError', '__version__']
