"""
Maximal degenerations J of the interval {0, ..., n+1}: their monotone paths,
circuits, quivers and perversities.
"""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from models.an_types import DegenerationJ, QuiverJ
from models.paths import MonotonePath
from services.monotone_paths.paths import monotone_path_polytope, sharpening_functional
from services.subdivisions.configurations import interval_configuration
from services.subdivisions.secondary import interval_gkz, secondary_polytope
from utils.errors import DegenerationError
from utils.logger import setup_logger

logger = setup_logger(__name__)

JLike = Union[DegenerationJ, Iterable[int]]


def degeneration(n: int, J: JLike) -> DegenerationJ:
    if isinstance(J, DegenerationJ):
        if J.n != n:
            raise DegenerationError(f"J was built for n={J.n}, not n={n}")
        return J
    return DegenerationJ.of(n, J)


def path_subsets(n: int, J: JLike) -> List[Tuple[int, ...]]:
    """K_0, ..., K_m with K_i = {k_i, ..., k_{m-1}}."""
    deg = degeneration(n, J)
    ks = deg.breakpoints
    return [tuple(ks[i:deg.m]) for i in range(deg.m + 1)]


def path_from_J(n: int, J: JLike) -> MonotonePath:
    """
    The monotone path T_{K_0}, ..., T_{K_m} on the secondary polytope of the
    interval with respect to e_0^vee, flagged coherent against the monotone
    path polytope.
    """
    subsets = path_subsets(n, J)
    config = interval_configuration(n)
    polytope, _ = secondary_polytope(config)
    sequence = []
    for K in subsets:
        index = polytope.vertex_index(interval_gkz(n, K))
        if index is None:
            raise DegenerationError(f"T_K for K={list(K)} is not a vertex of the secondary polytope")
        sequence.append(index)
    sequence = tuple(sequence)

    result = monotone_path_polytope(polytope, sharpening_functional(config, [0]))
    for path in result.paths:
        if path.vertex_sequence == sequence:
            logger.debug("path_from_J(%d): K-sequence %s coherent=%s", n, subsets, path.coherent)
            return path
    raise DegenerationError(f"K-sequence {subsets} is not a monotone edge path")


def circuits(n: int, J: JLike) -> List[Tuple[int, int, int]]:
    """C_i = {0, k_{i-1}, k_i} for i = 1..m."""
    ks = degeneration(n, J).breakpoints
    return [(0, a, b) for a, b in zip(ks, ks[1:])]


def quiver_from_J(n: int, J: JLike) -> QuiverJ:
    """o(e_i) = -1 exactly when i is an interior breakpoint."""
    interior = set(degeneration(n, J).interior)
    return QuiverJ(n=n, orientations=tuple(-1 if i in interior else 1 for i in range(2, n + 1)))


def perversity(n: int, J: JLike) -> Tuple[int, ...]:
    """p_J(j) = j/2 - 1/2 sum_{i=1}^{j} o(e_{i+1}), with o(e_{n+1}) = +1."""
    quiver = quiver_from_J(n, J)
    values = []
    running = 0
    for j in range(1, n + 1):
        running += quiver.o(j + 1)
        value = Fraction(j - running, 2)
        if value.denominator != 1:
            raise DegenerationError(f"perversity is not integral at j={j}")
        values.append(int(value))
    return tuple(values)
