"""
Exact convex hulls by beneath-beyond insertion.

Points are first moved into their affine span (pivot coordinates of an
echelon basis), scaled to integers, and inserted one at a time into a
triangulated boundary. Coplanar boundary simplices are merged into facets at
the end, and a point is kept as a vertex iff the facet normals through it
have full rank.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd
from functools import reduce
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import networkx as nx

from models.polytope import Facet, Polytope
from models.rational import RatLike, Vector, dot, to_vector
from services.geometry.linalg import (
    affine_hull,
    cofactor_normal,
    common_denominator,
    determinant,
    primitive,
    rank,
    subtract,
)
from utils.errors import DimensionMismatchError, InputError
from utils.logger import setup_logger
from utils.metrics import metrics

logger = setup_logger(__name__)

IntPoint = Tuple[int, ...]


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


class _BoundaryComplex:
    """Triangulated boundary of a full-dimensional integer point set in Z^k."""

    def __init__(self, points: List[IntPoint], k: int):
        self.points = points
        self.k = k
        self.facets: Dict[int, Tuple[Tuple[int, ...], IntPoint, int]] = {}
        self.ridges: Dict[Tuple[int, ...], Set[int]] = {}
        self._next_id = 0
        self.center: IntPoint = ()

    def _plane(self, ids: Tuple[int, ...]) -> Tuple[IntPoint, int]:
        base = self.points[ids[0]]
        rows = [tuple(a - b for a, b in zip(self.points[i], base)) for i in ids[1:]]
        normal = cofactor_normal(rows)
        g = reduce(gcd, (abs(x) for x in normal), 0)
        normal = tuple(x // g for x in normal)
        offset = _idot(normal, base)
        # center is (k+1) times an interior point
        if _idot(normal, self.center) > (self.k + 1) * offset:
            normal = tuple(-x for x in normal)
            offset = -offset
        return normal, offset

    def add_facet(self, ids: Tuple[int, ...]) -> None:
        ids = tuple(sorted(ids))
        normal, offset = self._plane(ids)
        fid = self._next_id
        self._next_id += 1
        self.facets[fid] = (ids, normal, offset)
        for ridge in combinations(ids, self.k - 1):
            self.ridges.setdefault(ridge, set()).add(fid)

    def remove_facet(self, fid: int) -> None:
        ids, _, _ = self.facets.pop(fid)
        for ridge in combinations(ids, self.k - 1):
            owners = self.ridges[ridge]
            owners.discard(fid)
            if not owners:
                del self.ridges[ridge]

    def initial_simplex(self) -> List[int]:
        chosen = [0]
        origin = self.points[0]
        rows: List[IntPoint] = []
        for i in range(1, len(self.points)):
            candidate = rows + [tuple(a - b for a, b in zip(self.points[i], origin))]
            if rank(candidate) == len(candidate):
                rows = candidate
                chosen.append(i)
                if len(chosen) == self.k + 1:
                    break
        return chosen

    def build(self) -> None:
        simplex = self.initial_simplex()
        self.center = tuple(sum(self.points[i][c] for i in simplex) for c in range(self.k))
        for omitted in simplex:
            self.add_facet(tuple(i for i in simplex if i != omitted))
        placed = set(simplex)
        for pid, p in enumerate(self.points):
            if pid in placed:
                continue
            visible = [fid for fid, (_, a, b) in self.facets.items() if _idot(a, p) > b]
            if not visible:
                continue
            visible_set = set(visible)
            horizon = []
            for fid in visible:
                ids = self.facets[fid][0]
                for ridge in combinations(ids, self.k - 1):
                    if any(other not in visible_set for other in self.ridges[ridge] if other != fid):
                        horizon.append(ridge)
            for fid in visible:
                self.remove_facet(fid)
            for ridge in horizon:
                self.add_facet(ridge + (pid,))
            placed.add(pid)


def hull(points: Sequence[Sequence[RatLike]]) -> Polytope:
    """
    Convex hull with irredundant vertices and facets.

    Works in the affine span when the points are not full-dimensional; the
    ambient coordinates are preserved and ``dim`` records the intrinsic
    dimension.
    """
    if not points:
        raise InputError("hull of an empty point list")
    vectors = [to_vector(p) for p in points]
    ambient = len(vectors[0])
    if any(len(v) != ambient for v in vectors):
        raise DimensionMismatchError("hull input vectors have different lengths")

    unique = sorted(set(vectors))
    span = affine_hull(unique)
    k = span.dim
    equations = tuple(span.equations())
    metrics.increment_counter("hull.calls")

    if k == 0:
        return Polytope(ambient_dim=ambient, dim=0, vertices=(unique[0],), facets=(),
                        equations=equations, boundary=())

    projected = [tuple(p[c] for c in span.pivots) for p in unique]
    scale = common_denominator(projected)
    int_points = [tuple(int(x * scale) for x in q) for q in projected]

    complex_ = _BoundaryComplex(int_points, k)
    complex_.build()
    metrics.increment_counter("hull.facets", len(complex_.facets))

    planes: Dict[Tuple[IntPoint, int], None] = {}
    for _, normal, offset in complex_.facets.values():
        planes[(normal, offset)] = None
    plane_list = list(planes)

    on_plane: Dict[int, List[int]] = {}
    for j, (normal, offset) in enumerate(plane_list):
        for pid, p in enumerate(int_points):
            if _idot(normal, p) == offset:
                on_plane.setdefault(pid, []).append(j)

    vertex_ids = []
    for pid, planes_through in sorted(on_plane.items()):
        if len(planes_through) >= k and rank([plane_list[j][0] for j in planes_through]) == k:
            vertex_ids.append(pid)
    vertices = tuple(sorted(unique[pid] for pid in vertex_ids))

    facets = []
    for normal, _ in plane_list:
        lifted = [Fraction(0)] * ambient
        for coord, value in zip(span.pivots, normal):
            lifted[coord] = Fraction(value)
        canonical = tuple(Fraction(x) for x in primitive(span.project_direction(lifted)))
        values = [dot(canonical, v) for v in vertices]
        offset = max(values)
        ids = tuple(i for i, value in enumerate(values) if value == offset)
        facets.append(Facet(normal=canonical, offset=offset, vertex_ids=ids))
    facets.sort(key=lambda f: (f.normal, f.offset))

    boundary = tuple(tuple(unique[i] for i in ids) for ids, _, _ in complex_.facets.values())
    logger.debug("hull: %d points, dim %d, %d vertices, %d facets",
                 len(unique), k, len(vertices), len(facets))
    return Polytope(ambient_dim=ambient, dim=k, vertices=vertices, facets=tuple(facets),
                    equations=equations, boundary=boundary)


def normalized_volume(polytope: Polytope) -> Fraction:
    """Lattice-normalized volume (unimodular simplex = 1) of a full-dimensional polytope."""
    d = polytope.ambient_dim
    if polytope.dim != d:
        raise InputError("normalized volume needs a full-dimensional polytope")
    if d == 0:
        return Fraction(1)
    apex = polytope.vertices[0]
    total = Fraction(0)
    for simplex in polytope.boundary:
        total += abs(determinant([subtract(p, apex) for p in simplex]))
    return total


def simplex_volume(points: Sequence[Vector]) -> Fraction:
    """Normalized volume of a d-simplex given by d+1 points of Q^d."""
    apex = points[0]
    return abs(determinant([subtract(p, apex) for p in points[1:]]))


def face_polytope(polytope: Polytope, vertex_ids: Sequence[int]) -> Polytope:
    return hull([polytope.vertices[i] for i in sorted(vertex_ids)])


def edges(polytope: Polytope) -> List[Tuple[int, int]]:
    """Pairs of vertices whose smallest common face has exactly two vertices."""
    if polytope.n_vertices < 2:
        return []
    facet_sets = polytope.facet_sets()
    everything: FrozenSet[int] = frozenset(range(polytope.n_vertices))
    result = []
    for u, v in combinations(range(polytope.n_vertices), 2):
        face = everything
        for f in facet_sets:
            if u in f and v in f:
                face = face & f
        if len(face) == 2:
            result.append((u, v))
    return result


def edge_graph(polytope: Polytope) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(polytope.n_vertices))
    graph.add_edges_from(edges(polytope))
    return graph
