"""
Sublevel sets of the local circuit model w(u) = u^(a+b) + u^b.
"""

from typing import Tuple

import numpy as np
from scipy import ndimage

from utils.errors import InputError


def critical_modulus(a: int, b: int) -> float:
    """|w| at the nonzero critical points: R^b a / (a + b) with R = (b / (a + b))^(1/a)."""
    radius = (b / (a + b)) ** (1.0 / a)
    return radius ** b * a / (a + b)


def contour_census(a: int, b: int, r: float, grid: int = 401, extent: float = 2.0) -> int:
    """Connected components of {u : |u^(a+b) + u^b| < r} on a square grid over [-extent, extent]^2."""
    if a < 1 or b < 1:
        raise InputError(f"circuit exponents must be positive, got a={a}, b={b}")
    if r <= 0:
        raise InputError(f"radius must be positive, got {r}")
    axis = np.linspace(-extent, extent, grid)
    u = axis[None, :] + 1j * axis[:, None]
    mask = np.abs(u ** (a + b) + u ** b) < r
    _, count = ndimage.label(mask)
    return int(count)


def census_pair(a: int, b: int, grid: int = 401) -> Tuple[int, int]:
    """Component counts just below and just above the critical modulus (at v/2 and 2v)."""
    v = critical_modulus(a, b)
    return contour_census(a, b, v / 2, grid), contour_census(a, b, 2 * v, grid)
