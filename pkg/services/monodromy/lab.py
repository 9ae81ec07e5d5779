"""
Regeneration of the A_n pencil along a maximal degeneration J.

f(z) = sum_{i=1}^{n+1} c_i s^{eta(i)} z^i and the fiber over w is {f = w}.
Stage i of J owns a cluster of k_i - k_{i-1} critical values of modulus
about s^{eta(k_i) - i k_i}; clusters are indexed so that stage m is the
largest. Fiber points are labelled by their index in the base fiber, which
is sorted by argument.
"""

import copy
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from models.an_types import CyclicInsertion, DegenerationJ, TreeEdge, VanishingTree
from models.monodromy import RadarScreen, RegenerationFamily
from services.an.degenerations import JLike, degeneration
from services.monodromy.critical import critical_data, fiber
from services.monodromy.heights import height_from_J
from services.monodromy.radar import norm_order, phantom_path, radar_screen
from services.monodromy.tracking import TrackResult, track_fiber
from utils.errors import ClusterSeparationError, InputError, MatchingAmbiguityError
from utils.logger import setup_logger
from utils.metrics import metrics

logger = setup_logger(__name__)

ROOT_SEPARATION = 2.0
VANISHING_OFFSET = 1e-3


def draw_coefficients(deg: DegenerationJ, seed: int, perturbation: float = None) -> Tuple[complex, ...]:
    """c_i = 1 on J (and at 0); elsewhere 1 plus a seeded complex perturbation of modulus <= perturbation."""
    perturbation = settings.COEFF_PERTURBATION if perturbation is None else perturbation
    rng = np.random.default_rng(seed)
    on_J = set(deg.breakpoints) | {0}
    coefficients = []
    for i in range(deg.n + 2):
        radius, angle = rng.uniform(0.0, perturbation), rng.uniform(0.0, 2 * np.pi)
        coefficients.append(1 + 0j if i in on_J else complex(1 + radius * np.exp(1j * angle)))
    return tuple(coefficients)


def split_at(path: Sequence[complex], level: float) -> Tuple[List[complex], List[complex]]:
    """
    Split a path with non-increasing real part at the first point where
    Re = level; both halves contain the cut point.
    """
    if path[0].real <= level:
        return [path[0]], list(path)
    for k, (a, b) in enumerate(zip(path, path[1:])):
        if b.real <= level < a.real:
            cut = a + (b - a) * ((a.real - level) / (a.real - b.real))
            return list(path[:k + 1]) + [cut], [cut] + list(path[k + 1:])
    raise InputError(f"path never reaches Re = {level:.6g}")


@dataclass
class StageInsertion:
    stage: int
    insertion: CyclicInsertion
    order: Tuple[int, ...]
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stage": self.stage,
            "insertion": self.insertion.to_dict(),
            "order": list(self.order),
            "diagnostics": self.diagnostics,
        }


class RegenerationLab:
    """
    One regeneration (n, J, c, s) with its critical data, clusters and radar
    screen. When ``s`` is omitted it starts at S_START and is halved until the
    stage clusters are separated by CLUSTER_SEPARATION in modulus.
    """

    def __init__(
        self,
        n: int,
        J: JLike,
        s: Optional[float] = None,
        seed: Optional[int] = None,
        coefficients: Optional[Sequence[complex]] = None,
        branches: Optional[Sequence[int]] = None,
        epsilon: Optional[float] = None,
    ):
        self.degeneration = degeneration(n, J)
        self.n = n
        self.height = height_from_J(n, self.degeneration)
        self.seed = settings.COEFF_SEED if seed is None else seed
        if coefficients is None:
            coefficients = draw_coefficients(self.degeneration, self.seed)
        if len(coefficients) != n + 2:
            raise InputError(f"expected {n + 2} coefficients, got {len(coefficients)}")
        self.coefficients = tuple(complex(c) for c in coefficients)
        self.epsilon = epsilon
        self.family, self.critical, self.clusters = self._regenerate(s)
        self.screen: RadarScreen = radar_screen([v for _, v in self.critical], branches, epsilon)
        self.base_fiber: Tuple[complex, ...] = tuple(fiber(self.polynomial, np.exp(self.screen.base)))

    @property
    def s(self) -> float:
        return self.family.s

    @property
    def polynomial(self) -> np.ndarray:
        return self.family.f_coefficients()

    @property
    def values(self) -> List[complex]:
        return [v for _, v in self.critical]

    def _cluster_bounds(self) -> List[Tuple[int, int]]:
        """[start, stop) of each stage cluster in the decreasing-modulus list, stage m first."""
        sizes = [hi - lo for lo, hi in zip(self.degeneration.breakpoints, self.degeneration.breakpoints[1:])]
        bounds, start = [], 0
        for size in reversed(sizes):
            bounds.append((start, start + size))
            start += size
        return bounds

    def _separation(self, moduli: List[float]) -> Tuple[bool, List[float]]:
        bounds = self._cluster_bounds()
        ratios = [moduli[upper[1] - 1] / moduli[lower[0]] for upper, lower in zip(bounds, bounds[1:])]
        return all(r >= settings.CLUSTER_SEPARATION for r in ratios), ratios

    def _regenerate(self, s: Optional[float]):
        adaptive = s is None
        s = settings.S_START if adaptive else float(s)
        if s <= 0:
            raise InputError(f"s must be positive, got {s}")
        while True:
            family = RegenerationFamily(coefficients=self.coefficients, height=self.height, s=s)
            data = critical_data(family.f_coefficients())
            order = norm_order([v for _, v in data])
            critical = [data[k] for k in order]
            moduli = [abs(v) for _, v in critical]
            separated, ratios = self._separation(moduli)
            if separated:
                break
            if not adaptive or s / 2 < settings.S_MIN:
                raise ClusterSeparationError(
                    f"stage clusters are not separated at s={s:g}; use a smaller s",
                    diagnostics={"s": s, "cluster_ratios": ratios, "moduli": moduli},
                )
            logger.warning("Cluster separation %s below %.3g at s=%g; halving s",
                           [round(r, 3) for r in ratios], settings.CLUSTER_SEPARATION, s)
            s /= 2
        bounds = self._cluster_bounds()
        clusters = {self.degeneration.m - k: list(range(lo, hi)) for k, (lo, hi) in enumerate(bounds)}
        metrics.set_gauge("regeneration.s", s)
        logger.debug("Regenerated n=%d J=%s at s=%g", self.n, list(self.degeneration.breakpoints), s)
        return family, critical, clusters

    def with_branches(self, branches: Sequence[int]) -> "RegenerationLab":
        """Same regeneration, radar screen rebuilt on the given logarithmic branches."""
        other = copy.copy(self)
        other.screen = radar_screen(self.values, branches, self.epsilon)
        if other.screen.base != self.screen.base:
            other.base_fiber = tuple(fiber(self.polynomial, np.exp(other.screen.base)))
        return other

    def cluster_stage(self, position: int) -> int:
        for stage, members in self.clusters.items():
            if position in members:
                return stage
        raise InputError(f"no critical value at position {position}")

    def cluster_moduli(self) -> Dict[int, List[float]]:
        return {stage: [abs(self.critical[k][1]) for k in members] for stage, members in sorted(self.clusters.items())}

    def _log_modulus(self, position: int) -> float:
        return math.log(abs(self.critical[position][1]))

    def _track(self, path: Sequence[complex], start: Sequence[complex], exempt=()) -> TrackResult:
        return track_fiber(self.polynomial, path, start, critical_values=self.values, exempt=exempt)

    def _by_modulus(self, points: Sequence[complex], boundaries: Sequence[int]) -> List[int]:
        ranked = sorted(range(len(points)), key=lambda k: abs(points[k]))
        for count in boundaries:
            if 0 < count < len(points):
                inner, outer = abs(points[ranked[count - 1]]), abs(points[ranked[count]])
                if outer < ROOT_SEPARATION * inner:
                    raise ClusterSeparationError(
                        f"fiber points do not separate into {count} inner points",
                        diagnostics={"inner": inner, "outer": outer},
                    )
        return ranked

    def numeric_insertion(self, stage: int) -> StageInsertion:
        """
        Cyclic insertion of stage i read off the fiber along the radar path
        that runs just past cluster i: S3 is the inner k_i points before the
        cluster, S1 the inner k_{i-1} points after it and S2 the next
        k_i - k_{i-1} points. Cyclic orders follow increasing argument; S2 is
        ordered by the modulus of the critical value each point sits next to.
        """
        deg = self.degeneration
        if not 1 <= stage <= deg.m:
            raise InputError(f"stage must be in 1..{deg.m}, got {stage}")
        depth = math.log(settings.CLUSTER_SEPARATION)
        ks = deg.breakpoints
        k_lo, k_hi = ks[stage - 1], ks[stage]

        if stage == 1:
            path = phantom_path(self.screen, depth)
            inner_level = self.screen.lifts[-1].real - depth / 2
        else:
            first_below = self.clusters[stage - 1][0]
            path = list(self.screen.paths[first_below])
            inner_level = 0.5 * (self._log_modulus(self.clusters[stage][-1]) + self._log_modulus(first_below))
        if stage == deg.m:
            outer_level = self.screen.base.real - 1.0
        else:
            outer_level = 0.5 * (self._log_modulus(self.clusters[stage + 1][-1])
                                 + self._log_modulus(self.clusters[stage][0]))

        reverse = list(reversed(path))
        to_outer, rest = split_at(reverse, outer_level)
        to_inner, _ = split_at(rest, inner_level)
        outer = self._track(to_outer, self.base_fiber)
        inner = self._track(to_inner, outer.end_fiber)
        z_outer, z_inner = outer.end_fiber, inner.end_fiber

        ranked_outer = self._by_modulus(z_outer, [k_hi])
        s3 = sorted(ranked_outer[:k_hi], key=lambda k: _argument(z_outer[k]))
        ranked_inner = self._by_modulus(z_inner, [k_lo, k_hi])
        s1 = sorted(ranked_inner[:k_lo], key=lambda k: _argument(z_inner[k]))
        s2 = self._order_inserted(ranked_inner[k_lo:k_hi], z_inner, stage)

        insertion = CyclicInsertion.build(s1, s2, s3, {x: x for x in s1 + s2})
        taken = [x for x in (outer.min_step, inner.min_step) if x > 0]
        diagnostics = {
            "s": self.s,
            "cluster_moduli": self.cluster_moduli()[stage],
            "steps": outer.steps + inner.steps,
            "min_step": min(taken) if taken else 0.0,
        }
        return StageInsertion(stage=stage, insertion=insertion, order=tuple(s1 + s2), diagnostics=diagnostics)

    def _order_inserted(self, labels: Sequence[int], points: Sequence[complex], stage: int) -> List[int]:
        members = self.clusters[stage]
        chosen: Dict[int, int] = {}
        for label in labels:
            angle = _argument(points[label])
            nearest = min(members, key=lambda k: _angular_distance(angle, _argument(self.critical[k][0])))
            if nearest in chosen.values():
                raise MatchingAmbiguityError(
                    f"two inserted fiber points sit next to the same critical point at stage {stage}",
                    diagnostics={"stage": stage, "position": nearest},
                )
            chosen[label] = nearest
        return sorted(labels, key=lambda label: abs(self.critical[chosen[label]][1]))

    def numeric_insertions(self) -> List[StageInsertion]:
        return [self.numeric_insertion(i) for i in range(1, self.degeneration.m + 1)]

    def vanishing_pair(self, position: int) -> Tuple[int, int]:
        """The two base-fiber labels that collide at critical value ``position`` along its radar path."""
        reverse = list(reversed(self.screen.paths[position]))
        end, before = reverse[-1], reverse[-2]
        delta = min(VANISHING_OFFSET, 0.25 * abs(before - end))
        reverse[-1] = end + (before - end) / abs(before - end) * delta
        result = self._track(reverse, self.base_fiber, exempt=(position,))
        z = np.asarray(result.end_fiber)
        distances = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(distances, np.inf)
        a, b = np.unravel_index(np.argmin(distances), distances.shape)
        closest = distances[a, b]
        others = distances.copy()
        others[a, b] = others[b, a] = np.inf
        if closest * settings.GAP_RATIO >= others.min():
            raise MatchingAmbiguityError(
                f"no isolated vanishing pair at critical value {position}",
                diagnostics={"closest": float(closest), "next": float(others.min())},
            )
        return int(min(a, b)), int(max(a, b))

    def numeric_vanishing_tree(self) -> VanishingTree:
        """Vanishing pairs of all critical values; value k in increasing modulus carries label k."""
        r = len(self.critical)
        edges = []
        for position in range(r):
            u, v = self.vanishing_pair(position)
            edges.append(TreeEdge(u, v, r - position, self.cluster_stage(position)))
        edges.sort(key=lambda e: e.label)
        return VanishingTree(vertices=tuple(range(self.n + 1)), edges=tuple(edges))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "J": list(self.degeneration.breakpoints),
            "s": self.s,
            "seed": self.seed,
            "family": self.family.to_dict(),
            "clusters": {str(k): v for k, v in self.cluster_moduli().items()},
            "radar": self.screen.to_dict(),
        }


def _argument(z: complex) -> float:
    return math.atan2(z.imag, z.real) % (2 * math.pi)


def _angular_distance(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def numeric_insertion(
    n: int,
    J: JLike,
    stage: int,
    s: Optional[float] = None,
    coefficients: Optional[Sequence[complex]] = None,
    branches: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> Tuple[CyclicInsertion, Tuple[int, ...]]:
    lab = RegenerationLab(n, J, s=s, seed=seed, coefficients=coefficients, branches=branches)
    result = lab.numeric_insertion(stage)
    return result.insertion, result.order


def numeric_vanishing_tree(
    n: int,
    J: JLike,
    s: Optional[float] = None,
    coefficients: Optional[Sequence[complex]] = None,
    branches: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> VanishingTree:
    lab = RegenerationLab(n, J, s=s, seed=seed, coefficients=coefficients, branches=branches)
    return lab.numeric_vanishing_tree()
