"""
Unit tests for exact linear algebra, hulls, fans and combinatorial isomorphism.
"""

from fractions import Fraction

import numpy as np
import pytest

from models.rational import dot
from services.geometry import (
    affine_hull,
    combinatorially_isomorphic,
    determinant,
    edge_graph,
    face_polytope,
    fan_refines,
    hull,
    lp_optimize,
    minkowski_sum,
    minkowski_summands,
    normal_fan,
    normalized_volume,
    nullspace,
    primitive,
    rank,
)
from services.geometry.fans import common_refinement_vertex, interior_functional
from utils.errors import DimensionMismatchError, InputError
from utils.metrics import metrics

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
CUBE = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]


def test_exact_linear_algebra():
    assert determinant([[1, 2], [3, 4]]) == Fraction(-2)
    assert determinant([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
    assert rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    (kernel,) = nullspace([[1, 1, 0], [0, 1, 1]], 3)
    assert sum(kernel[:2]) == 0 and kernel[1] + kernel[2] == 0
    assert primitive((2, 4, 6)) == (1, 2, 3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((0, 0)) == (0, 0)


def test_affine_hull_of_collinear_points():
    span = affine_hull([(1, 1), (2, 2), (3, 3)])
    assert span.dim == 1
    ((normal, value),) = span.equations()
    assert all(normal[0] * p[0] + normal[1] * p[1] == value for p in [(1, 1), (5, 5)])


def test_hull_drops_interior_points():
    square = hull(SQUARE + [(Fraction(1, 2), Fraction(1, 2))])
    assert square.dim == 2
    assert square.n_vertices == 4
    assert len(square.facets) == 4
    assert square.f_vector() == (4, 4)
    assert metrics.get_metrics()["hull.calls"] >= 1


def test_cube_face_lattice_and_euler():
    cube = hull(CUBE)
    assert cube.f_vector() == (8, 12, 6)
    assert cube.face_lattice().euler_holds()
    assert edge_graph(cube).number_of_edges() == 12


def test_hull_in_lower_dimensional_span():
    triangle = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (Fraction(1, 3), Fraction(1, 3), 0)])
    assert triangle.ambient_dim == 3
    assert triangle.dim == 2
    assert triangle.n_vertices == 3
    assert len(triangle.equations) == 1


def test_hull_rejects_ragged_input():
    with pytest.raises(DimensionMismatchError):
        hull([(0, 0), (1, 0, 0)])
    with pytest.raises(InputError):
        hull([])


def test_normalized_volume():
    assert normalized_volume(hull(SQUARE)) == 2
    assert normalized_volume(hull(CUBE)) == 6
    assert normalized_volume(hull([(0,), (3,)])) == 3


def test_face_polytope_of_a_cube_facet_is_a_square():
    cube = hull(CUBE)
    face = face_polytope(cube, cube.facets[0].vertex_ids)
    assert face.dim == 2
    assert combinatorially_isomorphic(face, hull(SQUARE))


def test_normal_fan_of_square_uses_inner_normals():
    square = hull(SQUARE)
    fan = normal_fan(square)
    assert set(fan.rays) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    origin = square.vertex_index((0, 0))
    inward = {fan.rays[i] for i in fan.maximal_cones[origin]}
    assert inward == {(1, 0), (0, 1)}


def test_minkowski_sum_of_segments_is_a_square():
    p = hull([(0, 0), (1, 0)])
    q = hull([(0, 0), (0, 1)])
    total = minkowski_sum(p, q)
    assert total.n_vertices == 4
    summands = minkowski_summands(p, q, total)
    assert sorted(summands) == [0, 1, 2, 3]
    assert len(set(summands.values())) == 4
    assert fan_refines(total, p)
    assert fan_refines(total, q)


def test_combinatorial_isomorphism():
    trapezoid = hull([(0, 0), (2, 0), (0, 1), (1, 1)])
    result = combinatorially_isomorphic(hull(SQUARE), trapezoid)
    assert result
    assert len(result.witness) == 4
    assert not combinatorially_isomorphic(hull(SQUARE), hull([(0, 0), (1, 0), (0, 1)]))


def _random_polytope(rng, dim, count=6, spread=4):
    while True:
        points = [tuple(int(x) for x in rng.integers(-spread, spread + 1, size=dim)) for _ in range(count)]
        polytope = hull(points)
        if polytope.dim == dim:
            return polytope


def test_minkowski_sum_fan_is_the_common_refinement():
    rng = np.random.default_rng(17)
    for _ in range(20):
        p, q = _random_polytope(rng, 2), _random_polytope(rng, 2)
        total = minkowski_sum(p, q)
        assert fan_refines(total, p) and fan_refines(total, q)
        assert set(normal_fan(total).rays) == set(normal_fan(p).rays) | set(normal_fan(q).rays)
        summands = minkowski_summands(p, q, total)
        assert len(set(summands.values())) == total.n_vertices
        for s, vertex in enumerate(total.vertices):
            assert common_refinement_vertex(p, q, interior_functional(total, s)) == vertex


def test_lp_optimum_is_the_best_vertex():
    rng = np.random.default_rng(23)
    for _ in range(20):
        polytope = _random_polytope(rng, 3, count=8)
        constraints = [(f.normal, f.offset) for f in polytope.facets]
        objective = tuple(int(x) for x in rng.integers(-5, 6, size=3))
        for sense, best in (("max", max), ("min", min)):
            result = lp_optimize(constraints, objective, sense=sense)
            assert result.is_optimal
            assert result.value == best(dot(objective, v) for v in polytope.vertices)


def test_hull_of_the_vertices_is_the_same_polytope():
    rng = np.random.default_rng(29)
    for _ in range(10):
        polytope = _random_polytope(rng, 3, count=10)
        again = hull(polytope.vertices)
        assert set(again.vertices) == set(polytope.vertices)
        assert {(f.normal, f.offset) for f in again.facets} == {(f.normal, f.offset) for f in polytope.facets}


def test_hexagon_fan_is_self_dual():
    e2 = [(-1, -1), (-1, 0), (0, 1), (1, 1), (1, 0), (0, -1)]
    fan = normal_fan(hull([(0, 0)] + e2))
    assert len(fan.rays) == 6
    assert {(-y, x) for x, y in fan.rays} == set(e2)
