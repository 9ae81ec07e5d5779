"""
Normal fans (inner-normal convention) and Minkowski sums.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from models.polytope import Fan, Polytope
from models.rational import Vector, dot
from services.geometry.hull import hull
from services.geometry.linalg import primitive
from utils.errors import DimensionMismatchError, InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def inner_normal(polytope: Polytope, facet_index: int) -> Vector:
    return tuple(-x for x in polytope.facets[facet_index].normal)


def normal_fan(polytope: Polytope) -> Fan:
    """
    One ray per facet (its primitive inner normal) and one cone per nonempty
    face, made of the facets containing that face. The cone of a vertex is the
    set of functionals minimized there.
    """
    if polytope.dim < 1:
        raise InputError("normal fan needs a polytope of dimension >= 1")
    rays = tuple(primitive(inner_normal(polytope, i)) for i in range(len(polytope.facets)))
    facet_sets = polytope.facet_sets()
    lattice = polytope.face_lattice()

    cones = []
    for d in range(polytope.dim, -1, -1):
        for face in lattice.faces(d):
            cones.append(frozenset(i for i, f in enumerate(facet_sets) if face <= f))
    maximal = {
        v: frozenset(i for i, f in enumerate(facet_sets) if v in f)
        for v in range(polytope.n_vertices)
    }
    return Fan(lattice_rank=polytope.ambient_dim, rays=rays, cones=tuple(cones), maximal_cones=maximal)


def interior_functional(polytope: Polytope, vertex_id: int) -> Vector:
    """A functional in the interior of the normal cone at a vertex (sum of its inner normals)."""
    total = [Fraction(0)] * polytope.ambient_dim
    for i, facet in enumerate(polytope.facets):
        if vertex_id in facet.vertex_ids:
            total = [t - x for t, x in zip(total, facet.normal)]
    return tuple(total)


def minimizers(polytope: Polytope, functional: Sequence[Fraction]) -> List[int]:
    values = [dot(functional, v) for v in polytope.vertices]
    low = min(values)
    return [i for i, value in enumerate(values) if value == low]


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatchError(
            f"Minkowski sum of polytopes in R^{p.ambient_dim} and R^{q.ambient_dim}"
        )
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    result = hull(sorted(sums))
    logger.debug("minkowski_sum: %d x %d candidates -> %d vertices",
                 p.n_vertices, q.n_vertices, result.n_vertices)
    return result


def minkowski_summands(p: Polytope, q: Polytope, total: Polytope) -> Dict[int, Tuple[int, int]]:
    """
    For each vertex of ``total`` = p + q, the unique pair of vertices of p and q
    summing to it.
    """
    result = {}
    for s, vertex in enumerate(total.vertices):
        c = interior_functional(total, s) if total.dim > 0 else tuple(Fraction(0) for _ in vertex)
        in_p = minimizers(p, c)
        in_q = minimizers(q, c)
        if len(in_p) != 1 or len(in_q) != 1:
            raise InputError(f"vertex {s} of the sum has no unique decomposition")
        i, j = in_p[0], in_q[0]
        if tuple(a + b for a, b in zip(p.vertices[i], q.vertices[j])) != vertex:
            raise InputError(f"vertex {s} is not the sum of its summand vertices")
        result[s] = (i, j)
    return result


def fan_refines(fine: Polytope, coarse: Polytope) -> bool:
    """True iff every maximal cone of normal_fan(fine) lies in a maximal cone of normal_fan(coarse)."""
    for v in range(fine.n_vertices):
        if len(minimizers(coarse, interior_functional(fine, v))) != 1:
            return False
    return True


def common_refinement_vertex(p: Polytope, q: Polytope, functional: Sequence[Fraction]) -> Optional[Vector]:
    """Sum of the p- and q-minimizers of a generic functional; None if either is not unique."""
    in_p = minimizers(p, functional)
    in_q = minimizers(q, functional)
    if len(in_p) != 1 or len(in_q) != 1:
        return None
    return tuple(a + b for a, b in zip(p.vertices[in_p[0]], q.vertices[in_q[0]]))
