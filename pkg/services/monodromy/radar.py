"""
Radar screens: staircase path systems to critical values in the log plane.

A lift w of a critical value v satisfies exp(w) = v. Paths run from their
critical value toward the common base point at the far right; each one
passes just below (at smaller imaginary part than) every larger critical
value it meets on the way.
"""

import math
from typing import List, Optional, Sequence

from config.settings import settings
from models.monodromy import RadarScreen
from utils.errors import InputError, NormTieError
from utils.logger import setup_logger

logger = setup_logger(__name__)

TIE_TOLERANCE = 1e-9
BASE_MARGIN = math.log(10.0)


def norm_order(values: Sequence[complex]) -> List[int]:
    """Indices sorted by decreasing modulus; equal moduli are rejected."""
    order = sorted(range(len(values)), key=lambda j: -abs(values[j]))
    for a, b in zip(order, order[1:]):
        big, small = abs(values[a]), abs(values[b])
        if big - small <= TIE_TOLERANCE * big:
            raise NormTieError(
                f"critical values {values[a]} and {values[b]} have equal modulus",
                diagnostics={"moduli": [big, small]},
            )
    return order


def lift(value: complex, branch: int = 0) -> complex:
    """log|v| + i(arg v + 2 pi branch), with arg v in [0, 2 pi)."""
    if value == 0:
        raise InputError("critical value 0 has no logarithmic lift")
    angle = math.atan2(value.imag, value.real) % (2 * math.pi)
    return complex(math.log(abs(value)), angle + 2 * math.pi * branch)


def staircase(lifts_above: Sequence[complex], target: complex, offset: float, base: complex, far_right: float) -> List[complex]:
    """
    Polyline from ``target`` to ``base``: right to the next lift, then
    vertically to its height, for each lift in ``lifts_above`` (nearest
    first). Every leg after the first is pushed ``offset`` to the right side
    of the unperturbed staircase, so larger offsets nest outside smaller ones.
    """
    points = [target]
    y = target.imag
    previous = target
    for w in lifts_above:
        going_up = w.imag > previous.imag
        corner_x = w.real + offset if going_up else w.real - offset
        points.append(complex(corner_x, y))
        y = w.imag - offset
        points.append(complex(corner_x, y))
        previous = w
    points.append(complex(far_right, y))
    points.append(base)
    return _drop_repeats(points)


def _drop_repeats(points: List[complex]) -> List[complex]:
    out = [points[0]]
    for p in points[1:]:
        if abs(p - out[-1]) > 0:
            out.append(p)
    return out


def effective_epsilon(lifts: Sequence[complex], epsilon: float) -> float:
    """epsilon capped at 0.3 of the smallest log-modulus gap."""
    gaps = [a.real - b.real for a, b in zip(lifts, lifts[1:])]
    return min([epsilon] + [0.3 * g for g in gaps])


def radar_screen(
    values: Sequence[complex],
    branches: Optional[Sequence[int]] = None,
    epsilon: Optional[float] = None,
) -> RadarScreen:
    """
    Staircase system for critical values sorted by decreasing modulus.
    ``branches`` (aligned with the sorted values) selects non-fundamental
    lifts; None gives the fundamental screen.
    """
    if not values:
        raise InputError("radar screen needs at least one critical value")
    epsilon = settings.RADAR_EPSILON if epsilon is None else epsilon
    if epsilon <= 0:
        raise InputError(f"radar epsilon must be positive, got {epsilon}")
    order = norm_order(values)
    ordered = [complex(values[j]) for j in order]
    branches = list(branches) if branches is not None else [0] * len(ordered)
    if len(branches) != len(ordered):
        raise InputError(f"expected {len(ordered)} branch choices, got {len(branches)}")
    lifts = [lift(v, k) for v, k in zip(ordered, branches)]

    eps = effective_epsilon(lifts, epsilon)
    r = len(lifts)
    offsets = tuple(eps * j / (r + 1) for j in range(1, r + 1))
    far_right = lifts[0].real + BASE_MARGIN
    base = complex(far_right + 1.0, lifts[0].imag)
    paths = []
    for j, w in enumerate(lifts):
        above = list(reversed(lifts[:j]))
        paths.append(tuple(staircase(above, w, offsets[j], base, far_right)))
    logger.debug("radar_screen: %d values, epsilon %.3g", r, eps)
    return RadarScreen(
        values=tuple(ordered),
        lifts=tuple(lifts),
        paths=tuple(paths),
        epsilon=eps,
        base=base,
        offsets=offsets,
    )


def phantom_path(screen: RadarScreen, depth: float) -> List[complex]:
    """Staircase from a point ``depth`` below the smallest lift, passing below every value."""
    last = screen.lifts[-1]
    target = complex(last.real - depth, last.imag)
    far_right = screen.base.real - 1.0
    return staircase(list(reversed(screen.lifts)), target, screen.epsilon, screen.base, far_right)


def polylines_cross(a: Sequence[complex], b: Sequence[complex], stop_at: float = math.inf) -> bool:
    """True when a segment of ``a`` meets a segment of ``b`` strictly left of Re = stop_at."""
    for p, q in zip(a, a[1:]):
        for r, s in zip(b, b[1:]):
            if min(p.real, q.real) >= stop_at or min(r.real, s.real) >= stop_at:
                continue
            if _segments_meet(p, q, r, s):
                return True
    return False


def _orientation(p: complex, q: complex, r: complex) -> float:
    return ((q - p).conjugate() * (r - p)).imag


def _on_segment(p: complex, q: complex, r: complex) -> bool:
    return (min(p.real, q.real) <= r.real <= max(p.real, q.real)
            and min(p.imag, q.imag) <= r.imag <= max(p.imag, q.imag))


def _segments_meet(p: complex, q: complex, r: complex, s: complex) -> bool:
    d1, d2 = _orientation(r, s, p), _orientation(r, s, q)
    d3, d4 = _orientation(p, q, r), _orientation(p, q, s)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return ((d1 == 0 and _on_segment(r, s, p)) or (d2 == 0 and _on_segment(r, s, q))
            or (d3 == 0 and _on_segment(p, q, r)) or (d4 == 0 and _on_segment(p, q, s)))
