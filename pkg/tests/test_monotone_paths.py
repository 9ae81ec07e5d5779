"""
Unit tests for monotone edge paths and monotone path polytopes.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from models.paths import LinearFunctional
from services.an import path_from_J
from services.geometry import combinatorially_isomorphic, hull
from services.monotone_paths import (
    associahedron_facets,
    monotone_edge_paths,
    monotone_path_polytope,
    path_point,
    sharpening_functional,
)
from services.subdivisions import interval_configuration, load_configuration, secondary_polytope
from utils.errors import ConstantFunctionalError, InputError

SQUARE = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
DIAGONAL = LinearFunctional.of([1, 1])


def _cube(n):
    return hull([tuple((mask >> i) & 1 for i in range(n)) for mask in range(2 ** n)])


def test_sharpening_functional():
    config = interval_configuration(2)
    assert sharpening_functional(config, [0]).coefficients == (1, 0, 0, 0)
    assert sharpening_functional(config, [1, 3]).coefficients == (0, 1, 0, 1)
    with pytest.raises(InputError):
        sharpening_functional(config, [])
    with pytest.raises(InputError):
        sharpening_functional(config, [4])


def test_square_paths_and_points():
    paths = monotone_edge_paths(SQUARE, DIAGONAL)
    assert len(paths) == 2
    points = sorted(path_point(SQUARE, DIAGONAL, p) for p in paths)
    assert points == [(Fraction(1, 4), Fraction(3, 4)), (Fraction(3, 4), Fraction(1, 4))]


def test_square_monotone_path_polytope_is_a_segment():
    result = monotone_path_polytope(SQUARE, DIAGONAL)
    assert result.polytope.dim == 1
    assert len(result.coherent_paths()) == 2
    polytope, vertex_paths = result
    assert sorted(vertex_paths) == [0, 1]
    for index, path in vertex_paths.items():
        assert path.fiber_point == polytope.vertices[index]


def test_constant_functional_is_rejected():
    with pytest.raises(ConstantFunctionalError):
        monotone_edge_paths(SQUARE, LinearFunctional.of([0, 0]))


def test_polygon_paths_are_all_coherent():
    hexagon = hull([(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)])
    result = monotone_path_polytope(hexagon, LinearFunctional.of([1, 0]))
    assert all(p.fiber_point is not None for p in result.paths)
    assert len(result.coherent_paths()) == result.polytope.n_vertices


def test_four_point_interval_has_two_paths():
    config = interval_configuration(2)
    secondary, _ = secondary_polytope(config)
    result = monotone_path_polytope(secondary, sharpening_functional(config, [0]))
    assert len(result.paths) == 2
    assert all(p.coherent for p in result.paths)


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_interval_mpp_is_a_cube_indexed_by_J(n):
    config = interval_configuration(n)
    secondary, _ = secondary_polytope(config)
    result = monotone_path_polytope(secondary, sharpening_functional(config, [0]))
    assert combinatorially_isomorphic(result.polytope, _cube(n - 1))

    interior = range(2, n + 1)
    sequences = set()
    for size in range(n):
        for J in combinations(interior, size):
            path = path_from_J(n, J)
            assert path.coherent
            sequences.add(path.vertex_sequence)
    assert len(sequences) == 2 ** (n - 1)
    assert sequences == {p.vertex_sequence for p in result.vertex_paths.values()}


@pytest.mark.slow
def test_e2_monotone_path_polytope_has_36_vertices():
    e2 = load_configuration("e2")
    secondary, _ = secondary_polytope(e2)
    result = monotone_path_polytope(secondary, sharpening_functional(e2, [0]))
    assert result.polytope.n_vertices == 36
    assert len(result.paths) >= 36


@pytest.mark.slow
def test_e2_secondary_polytope_has_an_associahedron_facet():
    secondary, _ = secondary_polytope(load_configuration("e2"))
    found = associahedron_facets(secondary)
    assert found
    for facet in found:
        assert facet.polytope.f_vector() == (14, 21, 9)
        assert facet.graph.number_of_nodes() == 14
        assert facet.graph.number_of_edges() == 21


def _fixtures():
    hexagon = hull([(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)])
    cube = _cube(3)
    yield SQUARE, DIAGONAL
    yield hexagon, LinearFunctional.of([1, 0])
    yield cube, LinearFunctional.of([1, 2, 4])
    for n in (2, 3):
        config = interval_configuration(n)
        secondary, _ = secondary_polytope(config)
        yield secondary, sharpening_functional(config, [0])


def test_path_points_sit_on_the_middle_fiber():
    for polytope, gamma in _fixtures():
        values = [gamma(v) for v in polytope.vertices]
        middle = (min(values) + max(values)) / 2
        for path in monotone_edge_paths(polytope, gamma):
            assert gamma(path_point(polytope, gamma, path)) == middle


def test_monotone_path_polytope_drops_one_dimension():
    for polytope, gamma in _fixtures():
        assert monotone_path_polytope(polytope, gamma).polytope.dim == polytope.dim - 1
