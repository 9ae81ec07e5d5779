"""
Monotone edge paths, their fiber-polytope points and the monotone path polytope.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from config.settings import settings
from models.configuration import PointConfiguration
from models.paths import LinearFunctional, MonotonePath
from models.polytope import Polytope
from models.rational import Vector
from services.geometry.hull import edge_graph, edges, face_polytope, hull
from utils.errors import ConstantFunctionalError, InputError
from utils.latency_tracker import measure_latency
from utils.logger import setup_logger

logger = setup_logger(__name__)

ASSOCIAHEDRON_F_VECTOR = (14, 21, 9)


def sharpening_functional(config: PointConfiguration, indices: Sequence[int]) -> LinearFunctional:
    """gamma_{A'} = sum of the dual coordinates e_a^vee over a in A'."""
    chosen = set(indices)
    if not chosen:
        raise InputError("sharpening set A' is empty")
    bad = [i for i in chosen if not 0 <= i < config.size]
    if bad:
        raise InputError(f"sharpening indices {sorted(bad)} outside 0..{config.size - 1}")
    return LinearFunctional(tuple(Fraction(1 if i in chosen else 0) for i in range(config.size)))


def _oriented_edges(polytope: Polytope, gamma: LinearFunctional) -> Dict[int, List[int]]:
    values = [gamma(v) for v in polytope.vertices]
    successors: Dict[int, List[int]] = {i: [] for i in range(polytope.n_vertices)}
    for u, v in edges(polytope):
        if values[u] < values[v]:
            successors[u].append(v)
        elif values[v] < values[u]:
            successors[v].append(u)
    for targets in successors.values():
        targets.sort()
    return successors


def _paths_from(start: int, successors: Dict[int, List[int]], ends: frozenset) -> List[Tuple[int, ...]]:
    found = []
    stack: List[Tuple[int, ...]] = [(start,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last in ends:
            found.append(path)
            continue
        for nxt in reversed(successors[last]):
            stack.append(path + (nxt,))
    return found


@measure_latency
def monotone_edge_paths(polytope: Polytope, gamma: LinearFunctional) -> List[MonotonePath]:
    """
    All strictly gamma-increasing edge paths from a gamma-minimal vertex to a
    gamma-maximal one; plateau edges never appear.
    """
    values = [gamma(v) for v in polytope.vertices]
    low, high = min(values), max(values)
    if low == high:
        raise ConstantFunctionalError("functional is constant on the polytope")
    starts = [i for i, value in enumerate(values) if value == low]
    ends = frozenset(i for i, value in enumerate(values) if value == high)
    successors = _oriented_edges(polytope, gamma)

    with ThreadPoolExecutor(max_workers=settings.LGTK_THREADS) as pool:
        batches = list(pool.map(lambda s: _paths_from(s, successors, ends), starts))
    sequences = sorted(p for batch in batches for p in batch)
    logger.debug("monotone_edge_paths: %d paths from %d start vertices", len(sequences), len(starts))
    return [MonotonePath(vertex_sequence=p) for p in sequences]


def path_point(polytope: Polytope, gamma: LinearFunctional, path: MonotonePath) -> Vector:
    """(1/L) sum over edges of (gamma(v_{j+1}) - gamma(v_j)) (v_j + v_{j+1}) / 2, L = gamma_max - gamma_min."""
    values = [gamma(v) for v in polytope.vertices]
    length = max(values) - min(values)
    if length == 0:
        raise ConstantFunctionalError("functional is constant on the polytope")
    total = [Fraction(0)] * polytope.ambient_dim
    for u, v in path.steps():
        rise = values[v] - values[u]
        if rise <= 0:
            raise InputError(f"path is not gamma-increasing at edge ({u}, {v})")
        total = [t + rise * (a + b) / 2 for t, a, b in zip(total, polytope.vertices[u], polytope.vertices[v])]
    return tuple(t / length for t in total)


@dataclass
class MonotonePathPolytope:
    """Unpacks as (polytope, vertex_paths); ``paths`` keeps every path with its coherence flag."""
    polytope: Polytope
    vertex_paths: Dict[int, MonotonePath]
    paths: List[MonotonePath] = field(default_factory=list)

    def __iter__(self) -> Iterator:
        yield self.polytope
        yield self.vertex_paths

    def coherent_paths(self) -> List[MonotonePath]:
        return [p for p in self.paths if p.coherent]


def monotone_path_polytope(polytope: Polytope, gamma: LinearFunctional) -> MonotonePathPolytope:
    """
    Hull of all path points. A path is coherent iff its point is a vertex of
    the hull; each vertex is matched to the unique path landing on it.
    """
    raw = monotone_edge_paths(polytope, gamma)
    points = [path_point(polytope, gamma, p) for p in raw]
    mpp = hull(points)

    vertex_paths: Dict[int, MonotonePath] = {}
    paths = []
    for path, point in zip(raw, points):
        index = mpp.vertex_index(point)
        coherent = index is not None
        flagged = MonotonePath(vertex_sequence=path.vertex_sequence, fiber_point=point, coherent=coherent)
        paths.append(flagged)
        if coherent:
            if index in vertex_paths:
                logger.warning("monotone_path_polytope: vertex %d reached by two paths %s and %s",
                               index, vertex_paths[index].vertex_sequence, path.vertex_sequence)
                continue
            vertex_paths[index] = flagged
    logger.info("Monotone path polytope: %d paths, %d vertices, dim %d",
                len(paths), mpp.n_vertices, mpp.dim)
    return MonotonePathPolytope(polytope=mpp, vertex_paths=vertex_paths, paths=paths)


@dataclass
class AssociahedronFacet:
    facet: int
    polytope: Polytope
    graph: nx.Graph


def associahedron_facets(polytope: Polytope) -> List[AssociahedronFacet]:
    """Facets of a 4-dimensional polytope with the f-vector (14, 21, 9) of the 3-associahedron."""
    found = []
    for j, facet in enumerate(polytope.facets):
        if len(facet.vertex_ids) != ASSOCIAHEDRON_F_VECTOR[0]:
            continue
        face = face_polytope(polytope, facet.vertex_ids)
        if face.f_vector() == ASSOCIAHEDRON_F_VECTOR:
            found.append(AssociahedronFacet(facet=j, polytope=face, graph=edge_graph(face)))
    return found
