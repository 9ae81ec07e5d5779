"""
Regular triangulations, bistellar flips, GKZ vectors and the secondary polytope.

Flips are found from the secondary cone of a triangulation: each facet of the
cone is a wall, and the neighbouring triangulation is read off just across
the wall from a relative-interior point of it.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Set, Tuple

import networkx as nx

from config.settings import settings
from models.configuration import Cell, PointConfiguration, Subdivision, Triangulation, is_triangulation_shape
from models.polytope import Polytope
from models.rational import RatLike, Vector, dot, to_vector
from services.geometry.hull import hull, simplex_volume
from services.geometry.linalg import primitive
from services.geometry.lp import lp_optimize
from services.subdivisions.heights import (
    affine_basis,
    barycentric,
    is_regular,
    refines,
    subdivision_from_height,
)
from utils.errors import InputError, SubdivisionError
from utils.latency_tracker import measure_latency
from utils.logger import setup_logger
from utils.metrics import metrics

logger = setup_logger(__name__)

_MAX_HALVINGS = 60


def as_triangulation(config: PointConfiguration, subdivision: Subdivision) -> Triangulation:
    if not is_triangulation_shape(subdivision, config.lattice_rank):
        raise SubdivisionError("subdivision is not a triangulation")
    return Triangulation.from_subdivision(subdivision)


def gkz_vector(config: PointConfiguration, triangulation: Subdivision) -> Vector:
    """phi_T(a) = total normalized volume of the simplices of T having a as a vertex."""
    phi = [Fraction(0)] * config.size
    for cell in triangulation.cells:
        volume = simplex_volume([config.vector(i) for i in cell.vertices])
        for i in cell.vertices:
            phi[i] += volume
    return tuple(phi)


def placing_triangulation(config: PointConfiguration) -> Triangulation:
    """Triangulation induced by heights W^i in point order, doubling W until every cell is a simplex."""
    weight = 2
    for _ in range(64):
        heights = [Fraction(weight) ** i for i in range(config.size)]
        subdivision = subdivision_from_height(config, heights)
        if is_triangulation_shape(subdivision, config.lattice_rank):
            return Triangulation.from_subdivision(subdivision)
        weight *= 2
    raise SubdivisionError("placing heights never produced a triangulation")


def _cone_inequalities(config: PointConfiguration, triangulation: Subdivision) -> List[Vector]:
    """
    Primitive h with <h, psi> >= 0 on the closed secondary cone of T:
    psi(a) - g_sigma(a) for every simplex sigma and point a outside it.
    """
    n = config.size
    seen: Set[Tuple[int, ...]] = set()
    result: List[Vector] = []
    for cell in triangulation.cells:
        basis = list(cell.vertices)
        for a in range(n):
            if a in cell.vertices:
                continue
            weights = barycentric(config, basis, config.vector(a))
            row = [Fraction(0)] * n
            row[a] += 1
            for b, w in zip(basis, weights):
                row[b] -= w
            key = primitive(row)
            if key not in seen:
                seen.add(key)
                result.append(tuple(Fraction(x) for x in key))
    return sorted(result)


def _wall_point(inequalities: Sequence[Vector], wall: int) -> Vector:
    """Relative-interior point of the wall, or () when the inequality is not a facet."""
    n = len(inequalities[wall])
    equalities = [(list(inequalities[wall]) + [Fraction(0)], Fraction(0))]
    constraints = []
    for k, h in enumerate(inequalities):
        if k != wall:
            constraints.append(([-x for x in h] + [Fraction(1)], Fraction(0)))
    objective = [Fraction(0)] * n + [Fraction(1)]
    constraints.append((objective, Fraction(1)))
    metrics.increment_counter("flips.walls_tested")
    result = lp_optimize(constraints, objective, sense="max", equalities=equalities)
    if result.is_optimal and result.value > 0:
        return result.point[:n]
    return ()


def flips(config: PointConfiguration, triangulation: Subdivision) -> List[Triangulation]:
    """All regular triangulations adjacent to T across an edge of the secondary polytope."""
    inequalities = _cone_inequalities(config, triangulation)
    neighbours = {}
    for wall in range(len(inequalities)):
        psi0 = _wall_point(inequalities, wall)
        if not psi0:
            continue
        coarse = subdivision_from_height(config, psi0)
        h = inequalities[wall]
        t = Fraction(1)
        for _ in range(_MAX_HALVINGS):
            psi = tuple(p - t * x for p, x in zip(psi0, h))
            candidate = subdivision_from_height(config, psi)
            if (
                is_triangulation_shape(candidate, config.lattice_rank)
                and candidate.cells != triangulation.cells
                and refines(candidate, coarse)
            ):
                neighbours[candidate.cells] = Triangulation.from_subdivision(candidate)
                break
            t /= 2
        else:
            logger.warning("flips: no triangulation found across wall %d", wall)
    return [neighbours[k] for k in sorted(neighbours)]


@measure_latency
def enumerate_regular_triangulations(config: PointConfiguration) -> List[Triangulation]:
    """
    Breadth-first closure under flips from the placing triangulation. Each
    BFS level is expanded in a thread pool capped by LGTK_THREADS; the result
    is sorted by cells so it does not depend on scheduling.
    """
    start = placing_triangulation(config)
    found: Dict[Tuple[Cell, ...], Triangulation] = {start.cells: start}
    frontier = [start]
    with ThreadPoolExecutor(max_workers=settings.LGTK_THREADS) as pool:
        while frontier:
            results = list(pool.map(lambda t: flips(config, t), frontier))
            next_frontier = []
            for neighbours in results:
                for t in neighbours:
                    if t.cells not in found:
                        found[t.cells] = t
                        next_frontier.append(t)
            frontier = sorted(next_frontier, key=lambda t: t.cells)
            logger.debug("enumerate: %d triangulations, frontier %d", len(found), len(frontier))
    logger.info("Enumerated %d regular triangulations of %s", len(found), config.name or "configuration")
    return [found[k] for k in sorted(found)]


@lru_cache(maxsize=32)
def secondary_polytope(config: PointConfiguration) -> Tuple[Polytope, Dict[int, Triangulation]]:
    """
    Hull of the GKZ vectors with the vertex -> triangulation map. Results are
    cached per configuration; treat the returned map as read-only.
    """
    triangulations = enumerate_regular_triangulations(config)
    vectors = [gkz_vector(config, t) for t in triangulations]
    polytope = hull(vectors)
    mapping = {}
    for t, v in zip(triangulations, vectors):
        index = polytope.vertex_index(v)
        if index is None or index in mapping:
            raise SubdivisionError("GKZ vectors are not in bijection with the hull vertices")
        mapping[index] = t
    if len(mapping) != polytope.n_vertices:
        raise SubdivisionError("secondary polytope has vertices without a triangulation")
    logger.info("Secondary polytope: dim %d, %d vertices, %d facets",
                polytope.dim, polytope.n_vertices, len(polytope.facets))
    return polytope, mapping


def flip_graph(config: PointConfiguration) -> nx.Graph:
    """Regular triangulations (nodes = positions in enumeration order) joined by flips."""
    triangulations = enumerate_regular_triangulations(config)
    position = {t.cells: i for i, t in enumerate(triangulations)}
    graph = nx.Graph()
    graph.add_nodes_from(range(len(triangulations)))
    for i, t in enumerate(triangulations):
        for neighbour in flips(config, t):
            graph.add_edge(i, position[neighbour.cells])
    return graph


def face_subdivision(config: PointConfiguration, functional: Sequence[RatLike]) -> Tuple[Subdivision, Tuple[int, ...]]:
    """
    The coarse subdivision S(psi) and the face of the secondary polytope
    minimizing psi (as vertex ids). The face consists of exactly the
    triangulations refining S(psi).
    """
    psi = to_vector(functional)
    polytope, mapping = secondary_polytope(config)
    values = [dot(psi, v) for v in polytope.vertices]
    low = min(values)
    face = tuple(i for i, value in enumerate(values) if value == low)
    return subdivision_from_height(config, psi), face


# Interval configurations A = {0, ..., n+1}

def _chain(n: int, subset: Iterable[int]) -> List[int]:
    inner = sorted(set(subset))
    if any(not 1 <= k <= n for k in inner):
        raise InputError(f"K must be a subset of {{1, ..., {n}}}: {inner}")
    return [0] + inner + [n + 1]


def triangulation_for_K(n: int, subset: Iterable[int], config: PointConfiguration = None) -> Triangulation:
    """T_K = {[k_i, k_{i+1}]} for the chain 0 < K < n+1, with a regularity certificate when a config is given."""
    chain = _chain(n, subset)
    cells = tuple(Cell(vertices=(a, b), marked=(a, b)) for a, b in zip(chain, chain[1:]))
    triangulation = Triangulation(cells=cells)
    if config is not None:
        result = is_regular(config, cells)
        triangulation = Triangulation(cells=cells, height=result.height)
    return triangulation


def interval_gkz(n: int, subset: Iterable[int]) -> Vector:
    """phi_K = sum_i (k_{i+1} - k_{i-1}) e_{k_i}, with the chain ends clamped."""
    chain = _chain(n, subset)
    phi = [Fraction(0)] * (n + 2)
    for i, k in enumerate(chain):
        left = chain[i - 1] if i > 0 else k
        right = chain[i + 1] if i + 1 < len(chain) else k
        phi[k] = Fraction(right - left)
    return tuple(phi)


def subset_of(triangulation: Subdivision) -> Tuple[int, ...]:
    """K for an interval triangulation: the interior points it uses."""
    used = {i for c in triangulation.cells for i in c.vertices}
    top = max(used)
    return tuple(sorted(i for i in used if 0 < i < top))


def root_coordinates(n: int, functional: Sequence[RatLike]) -> Tuple[int, ...]:
    """Primitive pairing of a functional on R^A with delta_A(alpha_j) = -e_{j-1} + 2e_j - e_{j+1}."""
    psi = to_vector(functional)
    values = [2 * psi[j] - psi[j - 1] - psi[j + 1] for j in range(1, n + 1)]
    return primitive(values)


def interval_secondary_rays(n: int) -> List[Tuple[int, ...]]:
    """alpha_1..alpha_n (rows of the Cartan matrix) and -lambda_1..-lambda_n, in root coordinates."""
    rays = []
    for i in range(1, n + 1):
        row = [2 if j == i else (-1 if abs(j - i) == 1 else 0) for j in range(1, n + 1)]
        rays.append(primitive(row))
    for i in range(1, n + 1):
        rays.append(tuple(-1 if j == i else 0 for j in range(1, n + 1)))
    return rays
