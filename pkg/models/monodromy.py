"""
Data models for regeneration families and radar screens (floating point).
"""

import cmath
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class HeightFunction:
    """Integer height on {0, ..., n+1} whose lower hull breaks exactly at J."""
    n: int
    values: Tuple[int, ...]
    breakpoints: Tuple[int, ...]
    slopes: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.values[i]

    def slope_at_stage(self, i: int) -> int:
        """Slope of the lower hull on [k_{i-1}, k_i] (stages are 1-based)."""
        return self.slopes[i - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {"values": list(self.values), "breakpoints": list(self.breakpoints), "slopes": list(self.slopes)}


@dataclass(frozen=True)
class RegenerationFamily:
    """
    psi(c, s, t)(z) = sum_{i=1}^{n+1} c_i s^{eta(i)} z^i + s^{eta(0)} t.

    The fiber over t is a level set of f(z) = sum_{i>=1} c_i s^{eta(i)} z^i,
    so the monodromy lab works in the w-plane of f.
    """
    coefficients: Tuple[complex, ...]
    height: HeightFunction
    s: float
    t: complex = 0j

    @property
    def n(self) -> int:
        return self.height.n

    def scaled(self) -> List[complex]:
        """a_i = c_i s^{eta(i)} for i = 0..n+1 (a_0 multiplies t)."""
        return [self.coefficients[i] * self.s ** self.height(i) for i in range(self.n + 2)]

    def f_coefficients(self) -> np.ndarray:
        """Coefficients of f, highest degree first (numpy.polyval order)."""
        a = self.scaled()
        return np.array([a[i] for i in range(self.n + 1, 0, -1)] + [0j], dtype=complex)

    def evaluate(self, z: complex, t: complex = None) -> complex:
        t = self.t if t is None else t
        a = self.scaled()
        return complex(np.polyval(self.f_coefficients(), z)) + a[0] * t

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coefficients": [[c.real, c.imag] for c in self.coefficients],
            "height": self.height.to_dict(),
            "s": self.s,
        }


@dataclass(frozen=True)
class RadarScreen:
    """
    Critical values v_1..v_r in decreasing modulus, their logarithmic lifts,
    and one staircase polyline per value in the log plane, each ending at
    the common base point.
    """
    values: Tuple[complex, ...]
    lifts: Tuple[complex, ...]
    paths: Tuple[Tuple[complex, ...], ...]
    epsilon: float
    base: complex
    offsets: Tuple[float, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def is_fundamental(self) -> bool:
        return all(0 <= w.imag < 2 * np.pi for w in self.lifts)

    def exp_path(self, j: int, samples_per_segment: int = 64) -> List[complex]:
        """Path j (0-based) sampled and exponentiated into the w-plane."""
        return [cmath.exp(p) for p in sample_polyline(self.paths[j], samples_per_segment)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "values": [[v.real, v.imag] for v in self.values],
            "lifts": [[w.real, w.imag] for w in self.lifts],
            "epsilon": self.epsilon,
            "paths": [[[p.real, p.imag] for p in path] for path in self.paths],
        }


def sample_polyline(points: Sequence[complex], samples_per_segment: int) -> List[complex]:
    out: List[complex] = [points[0]]
    for a, b in zip(points, points[1:]):
        for k in range(1, samples_per_segment + 1):
            out.append(a + (b - a) * k / samples_per_segment)
    return out
