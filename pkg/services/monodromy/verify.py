"""
Numeric checks of the stage-insertion description of A_n vanishing trees.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

from config.settings import settings
from models.an_types import VanishingTree
from services.an.degenerations import JLike, degeneration
from services.an.insertions import all_insertions, arrangement, validate_insertion
from services.an.trees import vanishing_tree
from services.monodromy.lab import RegenerationLab, StageInsertion, draw_coefficients
from utils.errors import InsertionError, NumericError, ScopeError
from utils.latency_tracker import LatencyTracker, measure_latency
from utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_VERIFY_N = 7
MAX_SWEEP_N = 4


def _labelled_edges(tree: VanishingTree, shift: int = 0, size: int = 0) -> Set[Tuple[FrozenSet[int], int]]:
    if not shift:
        return {(e.pair, e.label) for e in tree.edges}
    return {(frozenset((x + shift) % size for x in e.pair), e.label) for e in tree.edges}


def trees_match(numeric: VanishingTree, predicted: VanishingTree) -> bool:
    """Equal labelled edge sets, allowing a cyclic relabelling of the fiber."""
    size = len(numeric.vertices)
    target = _labelled_edges(predicted)
    return any(_labelled_edges(numeric, shift, size) == target for shift in range(size))


@dataclass
class TrialReport:
    seed: int
    s: float
    stages: List[StageInsertion]
    valid: bool
    match: bool
    numeric_tree: Optional[VanishingTree] = None
    predicted_tree: Optional[VanishingTree] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "s": self.s,
            "valid": self.valid,
            "match": self.match,
            "stages": [stage.to_dict() for stage in self.stages],
            "numeric_tree": self.numeric_tree.to_dict() if self.numeric_tree else None,
            "predicted_tree": self.predicted_tree.to_dict() if self.predicted_tree else None,
            "error": self.error,
        }


@dataclass
class TheoremReport:
    n: int
    J: Tuple[int, ...]
    trials: List[TrialReport] = field(default_factory=list)

    @property
    def all_valid(self) -> bool:
        return all(t.valid for t in self.trials)

    @property
    def all_match(self) -> bool:
        return all(t.match for t in self.trials)

    @property
    def mismatches(self) -> int:
        return sum(1 for t in self.trials if not t.match)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "J": [0] + list(self.J),
            "all_valid": self.all_valid,
            "all_match": self.all_match,
            "mismatches": self.mismatches,
            "trials": [t.to_dict() for t in self.trials],
        }


def _run_trial(n: int, J, seed: int, s: Optional[float], epsilon: Optional[float]) -> TrialReport:
    tracker = LatencyTracker("verify_theorem")
    tracker.start("regenerate")
    lab = RegenerationLab(n, J, s=s, seed=seed, epsilon=epsilon)
    tracker.stop("regenerate")
    tracker.start("stages")
    stages = lab.numeric_insertions()
    tracker.stop("stages")
    try:
        for stage in stages:
            validate_insertion(stage.insertion)
        predicted = vanishing_tree(n, lab.degeneration, [x.insertion for x in stages], [x.order for x in stages])
    except InsertionError as e:
        logger.warning("Trial seed=%d: numeric stage output rejected: %s", seed, e)
        return TrialReport(seed=seed, s=lab.s, stages=stages, valid=False, match=False, error=str(e))
    tracker.start("vanishing_pairs")
    numeric = lab.numeric_vanishing_tree()
    tracker.stop("vanishing_pairs")
    match = trees_match(numeric, predicted)
    if not match:
        logger.warning("Trial seed=%d: numeric tree %s differs from predicted %s",
                       seed, sorted(_labelled_edges(numeric), key=repr), sorted(_labelled_edges(predicted), key=repr))
    logger.debug("Trial seed=%d timings: %s", seed, tracker.get_summary())
    return TrialReport(seed=seed, s=lab.s, stages=stages, valid=True, match=match,
                       numeric_tree=numeric, predicted_tree=predicted)


@measure_latency
def verify_theorem(
    n: int,
    J: JLike,
    s: Optional[float] = None,
    trials: int = 1,
    seed: Optional[int] = None,
    epsilon: Optional[float] = None,
) -> TheoremReport:
    """
    For seeded coefficient draws: every numeric stage output must be a
    cyclic insertion, and the tree built from those insertions must equal
    the vanishing pairs found by tracking to each critical value.
    """
    if n > MAX_VERIFY_N:
        raise ScopeError(f"verify_theorem is limited to n <= {MAX_VERIFY_N}, got {n}")
    if trials < 1:
        raise ScopeError(f"trials must be >= 1, got {trials}")
    deg = degeneration(n, J)
    first = settings.COEFF_SEED if seed is None else seed
    seeds = [first + t for t in range(trials)]
    with ThreadPoolExecutor(max_workers=settings.LGTK_THREADS) as pool:
        reports = list(pool.map(lambda k: _run_trial(n, deg, k, s, epsilon), seeds))
    report = TheoremReport(n=n, J=deg.breakpoints, trials=reports)
    logger.info("verify_theorem n=%d J=%s: %d trials, %d mismatches",
                n, list(deg.breakpoints), trials, report.mismatches)
    return report


@dataclass
class SurjectivityReport:
    n: int
    expected: int
    realized: List[Tuple[Any, ...]]
    attempts: int
    draws: int = 1

    @property
    def complete(self) -> bool:
        return len(self.realized) == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "expected": self.expected,
            "realized": [list(c) for c in self.realized],
            "attempts": self.attempts,
            "draws": self.draws,
            "complete": self.complete,
        }


def insertion_classes(n: int) -> Set[Tuple[Any, ...]]:
    """(insertion, order) classes of a single circuit: arrangements of ranks 1..n around the fixed point."""
    found = all_insertions(("f",), tuple(range(1, n + 1)), tuple(range(n + 1)))
    return {arrangement(ins) for ins in found}


def _sweep_lab(deg, draw: int, first: int, s: Optional[float], epsilon: Optional[float]) -> RegenerationLab:
    """Draw k: seed first + k, perturbation scaled by 1, 2, 4 in turn and, unless pinned, s halved on odd draws."""
    seed = first + draw
    coefficients = draw_coefficients(deg, seed, settings.COEFF_PERTURBATION * 2 ** (draw % 3))
    if s is None:
        s = settings.S_START / 2 ** (draw % 2)
    return RegenerationLab(deg.n, deg, s=s, seed=seed, coefficients=coefficients, epsilon=epsilon)


@measure_latency
def surjectivity_sweep(
    n: int,
    s: Optional[float] = None,
    seed: Optional[int] = None,
    epsilon: Optional[float] = None,
    draws: Optional[int] = None,
) -> SurjectivityReport:
    """
    Single circuit J = {1, n+1}: for each coefficient draw, rebuild the radar
    screen over every choice of logarithmic branches (the largest value kept
    on the fundamental branch) and collect the realized arrangements of
    inserted points. Draws continue until every class appears or SWEEP_DRAWS
    regenerations have been searched.
    """
    if n > MAX_SWEEP_N:
        raise ScopeError(f"surjectivity_sweep is limited to n <= {MAX_SWEEP_N}, got {n}")
    draws = settings.SWEEP_DRAWS if draws is None else draws
    if draws < 1:
        raise ScopeError(f"draws must be >= 1, got {draws}")
    expected = insertion_classes(n)
    deg = degeneration(n, [])
    first = settings.COEFF_SEED if seed is None else seed
    realized: Set[Tuple[Any, ...]] = set()
    attempts = used = 0
    for draw in range(draws):
        used += 1
        try:
            lab = _sweep_lab(deg, draw, first, s, epsilon)
        except NumericError as e:
            logger.warning("Sweep draw %d skipped: %s", draw, e)
            continue
        for tail in product(range(n), repeat=n - 1):
            attempts += 1
            try:
                stage = lab.with_branches((0,) + tail).numeric_insertion(1)
            except NumericError as e:
                logger.debug("Sweep draw %d branches %s skipped: %s", draw, tail, e)
                continue
            ins = stage.insertion
            rank = {label: k + 1 for k, label in enumerate(ins.s2)}
            realized.add(("f",) + tuple(rank[x] for x in arrangement(ins)[1:]))
            if len(realized) == len(expected):
                break
        if len(realized) == len(expected):
            break
        logger.debug("Sweep draw %d: %d of %d classes so far", draw, len(realized), len(expected))
    stray = realized - expected
    if stray:
        raise InsertionError(f"realized arrangements outside the predicted set: {sorted(stray)}")
    logger.info("surjectivity_sweep n=%d: %d of %d classes after %d branch choices over %d draws",
                n, len(realized), len(expected), attempts, used)
    return SurjectivityReport(n=n, expected=len(expected), realized=sorted(realized),
                              attempts=attempts, draws=used)
