"""
Critical points and values of one-variable polynomials, and polished fibers.
"""

from typing import List, Sequence, Tuple

import numpy as np

from config.settings import settings
from utils.errors import DerivativeVanishesError
from utils.logger import setup_logger

logger = setup_logger(__name__)

NEWTON_ITERATIONS = 60


def _scale(coefficients: np.ndarray, z: complex) -> float:
    """sum |a_k| |z|^k, the natural size of p(z) for a relative residual."""
    return float(np.polyval(np.abs(coefficients), abs(z))) or 1.0


def polish_roots(coefficients: Sequence[complex], roots: Sequence[complex], residual: float = None) -> List[complex]:
    """Newton refinement of approximate roots until |p(z)| <= residual * sum |a_k||z|^k."""
    residual = settings.REFINE_RESIDUAL if residual is None else residual
    p = np.asarray(coefficients, dtype=complex)
    dp = np.polyder(p)
    polished = []
    for z in roots:
        z = complex(z)
        for _ in range(NEWTON_ITERATIONS):
            value = complex(np.polyval(p, z))
            if abs(value) <= residual * _scale(p, z):
                break
            slope = complex(np.polyval(dp, z))
            if slope == 0:
                break
            z -= value / slope
        else:
            logger.debug("polish_roots: residual not reached at z=%s", z)
        polished.append(z)
    return polished


def critical_data(coefficients: Sequence[complex]) -> List[Tuple[complex, complex]]:
    """
    (critical point, critical value) pairs of p, coefficients highest degree
    first. Points are companion-matrix eigenvalues of p' polished by Newton.
    """
    p = np.trim_zeros(np.asarray(coefficients, dtype=complex), "f")
    if len(p) < 2:
        raise DerivativeVanishesError("derivative of a constant polynomial vanishes identically")
    dp = np.polyder(p)
    if len(dp) == 1:
        return []
    points = polish_roots(dp, np.roots(dp))
    return [(z, complex(np.polyval(p, z))) for z in points]


def fiber(coefficients: Sequence[complex], w: complex) -> List[complex]:
    """Roots of p(z) = w, sorted by argument in [0, 2 pi)."""
    p = np.array(coefficients, dtype=complex)
    p[-1] -= w
    roots = polish_roots(p, np.roots(p))
    return sorted(roots, key=lambda z: float(np.angle(z)) % (2 * np.pi))
