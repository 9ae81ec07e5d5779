"""
Predictor-corrector continuation of the fiber {z : f(z) = w} along a path
w = exp(lambda), lambda running over a polyline in the log plane.
"""

import cmath
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from utils.errors import DerivativeVanishesError, MarginViolationError, MatchingAmbiguityError
from utils.latency_tracker import measure_latency
from utils.logger import setup_logger
from utils.metrics import metrics

logger = setup_logger(__name__)

CORRECTOR_ITERATIONS = 12


@dataclass
class TrackResult:
    permutation: Tuple[int, ...]
    end_fiber: Tuple[complex, ...]
    steps: int
    min_step: float
    halvings: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "permutation": list(self.permutation),
            "end_fiber": [[z.real, z.imag] for z in self.end_fiber],
            "steps": self.steps,
            "min_step": self.min_step,
            "halvings": self.halvings,
        }


def _nearest_gaps(z: np.ndarray) -> np.ndarray:
    if len(z) < 2:
        return np.full(len(z), np.inf)
    distances = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(distances, np.inf)
    return distances.min(axis=1)


def _correct(p: np.ndarray, dp: np.ndarray, z: np.ndarray, w: complex, tolerance: float) -> Optional[np.ndarray]:
    magnitudes = np.abs(p)
    for _ in range(CORRECTOR_ITERATIONS):
        residual = np.polyval(p, z) - w
        scale = np.polyval(magnitudes, np.abs(z)) + abs(w)
        if np.all(np.abs(residual) <= tolerance * scale):
            return z
        slope = np.polyval(dp, z)
        if np.any(slope == 0):
            return None
        z = z - residual / slope
    return None


def match_fibers(fiber: Sequence[complex], reference: Sequence[complex], gap_ratio: float = None) -> Tuple[int, ...]:
    """permutation[i] = index of the reference point nearest to fiber[i]; must be a bijection."""
    gap_ratio = settings.GAP_RATIO if gap_ratio is None else gap_ratio
    fiber = np.asarray(fiber, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    distances = np.abs(fiber[:, None] - reference[None, :])
    permutation = tuple(int(k) for k in distances.argmin(axis=1))
    if sorted(permutation) != list(range(len(reference))):
        raise MatchingAmbiguityError("end fiber does not match the reference fiber one-to-one",
                                     diagnostics={"permutation": list(permutation)})
    spread = _nearest_gaps(reference)
    for i, k in enumerate(permutation):
        if distances[i, k] * gap_ratio >= spread[k]:
            raise MatchingAmbiguityError(f"fiber point {i} is not clearly matched",
                                         diagnostics={"distance": float(distances[i, k]), "gap": float(spread[k])})
    return permutation


def _check_margin(w: complex, critical_values: Sequence[complex], exempt: Iterable[int], margin: float) -> None:
    exempt = set(exempt)
    for k, v in enumerate(critical_values):
        if k in exempt:
            continue
        if abs(w - v) <= margin * abs(v):
            raise MarginViolationError(
                f"path passes within {abs(w - v):.3g} of critical value {v}",
                diagnostics={"w": [w.real, w.imag], "critical_value": [v.real, v.imag], "index": k},
            )


@measure_latency
def track_fiber(
    coefficients: Sequence[complex],
    path: Sequence[complex],
    fiber_start: Sequence[complex],
    critical_values: Sequence[complex] = (),
    exempt: Iterable[int] = (),
    reference: Optional[Sequence[complex]] = None,
    gap_ratio: float = None,
) -> TrackResult:
    """
    Carry every root of f(z) = exp(path[0]) to exp(path[-1]). The Euler
    predictor uses dz/dlambda = w / f'(z); a step is accepted only when each
    root moves less than 1/gap_ratio of its distance to the nearest other
    root, otherwise the step is halved down to MIN_STEP.
    """
    gap_ratio = settings.GAP_RATIO if gap_ratio is None else gap_ratio
    tolerance = settings.TRACK_TOLERANCE
    p = np.asarray(coefficients, dtype=complex)
    dp = np.polyder(p)
    z = np.asarray(fiber_start, dtype=complex)
    path = [complex(x) for x in path]

    start = _correct(p, dp, z, cmath.exp(path[0]), tolerance)
    if start is None:
        raise MatchingAmbiguityError("start fiber does not lie over the start of the path")
    z = start

    steps = halvings = 0
    min_step = np.inf
    for a, b in zip(path, path[1:]):
        length = abs(b - a)
        if length == 0:
            continue
        t, h = 0.0, 1.0
        while t < 1.0:
            h = min(h, 1.0 - t)
            lam0, lam1 = a + (b - a) * t, a + (b - a) * (t + h)
            w0, w1 = cmath.exp(lam0), cmath.exp(lam1)
            slope = np.polyval(dp, z)
            if np.any(slope == 0):
                raise DerivativeVanishesError("f' vanishes at a fiber point", diagnostics={"w": [w0.real, w0.imag]})
            predicted = z + (lam1 - lam0) * w0 / slope
            corrected = _correct(p, dp, predicted, w1, tolerance)
            accepted = corrected is not None and np.all(
                np.abs(corrected - z) * gap_ratio < np.minimum(_nearest_gaps(z), _nearest_gaps(corrected))
            )
            if not accepted:
                h /= 2.0
                halvings += 1
                metrics.increment_counter("tracking.halvings")
                if h * length < settings.MIN_STEP:
                    raise MatchingAmbiguityError(
                        "root matching stayed ambiguous at the minimum step",
                        diagnostics={"lambda": [lam0.real, lam0.imag], "step": h * length},
                    )
                continue
            _check_margin(w1, critical_values, exempt, settings.TRACK_MARGIN)
            z = corrected
            t += h
            steps += 1
            min_step = min(min_step, h * length)
            h = min(2.0 * h, 1.0)

    metrics.increment_counter("tracking.steps", steps)
    w_start, w_end = cmath.exp(path[0]), cmath.exp(path[-1])
    if reference is None and abs(w_end - w_start) <= 1e-12 * abs(w_start):
        reference = fiber_start
    if reference is None:
        permutation = tuple(range(len(z)))
    else:
        permutation = match_fibers(z, reference, gap_ratio)
    logger.debug("track_fiber: %d steps, %d halvings, min step %.3g", steps, halvings, min_step)
    return TrackResult(
        permutation=permutation,
        end_fiber=tuple(complex(x) for x in z),
        steps=steps,
        min_step=float(min_step) if steps else 0.0,
        halvings=halvings,
    )
