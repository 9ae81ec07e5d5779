"""
Unit tests for regeneration heights, radar screens, fiber tracking and the monodromy lab.
"""

import math

import numpy as np
import pytest

from models.an_types import TreeEdge, VanishingTree
from services.an import canonical_insertions, degeneration, insertion_shape
from services.monodromy import (
    RegenerationLab,
    census_pair,
    contour_census,
    critical_data,
    critical_modulus,
    draw_coefficients,
    expected_subdivision,
    fiber,
    height_from_J,
    insertion_classes,
    lift,
    match_fibers,
    norm_order,
    phantom_path,
    polylines_cross,
    radar_screen,
    split_at,
    surjectivity_sweep,
    track_fiber,
    trees_match,
    verify_theorem,
)
from services.subdivisions.configurations import interval_configuration
from services.subdivisions.heights import subdivision_from_height
from utils.errors import (
    DerivativeVanishesError,
    InputError,
    MatchingAmbiguityError,
    NormTieError,
    ScopeError,
)


def test_critical_data_of_small_polynomials():
    ((point, value),) = critical_data([1, 1, 0])
    assert point == pytest.approx(-0.5)
    assert value == pytest.approx(-0.25)
    values = sorted(v.real for _, v in critical_data([1, 1, 0, 0]))
    assert values == pytest.approx([0.0, 4 / 27])
    assert critical_data([2, 1]) == []
    with pytest.raises(DerivativeVanishesError):
        critical_data([5])


def test_fiber_is_sorted_by_argument():
    assert fiber([1, 0, 0], 4) == pytest.approx([2, -2])


def test_heights_for_a_single_circuit():
    height = height_from_J(3, [])
    assert height.values == (0, 0, 2, 3, 3)
    assert height.slopes == (1,)


def test_full_J_height_is_triangular():
    assert height_from_J(4, [2, 3, 4]).values == (0, 0, 1, 3, 6, 10)


def test_heights_for_exponential_J():
    height = height_from_J(7, [2, 4])
    assert height.values == (0, 0, 1, 4, 5, 9, 12, 15, 17)
    assert height.slope_at_stage(3) == 3
    induced = subdivision_from_height(interval_configuration(7), height.values)
    assert sorted(c.vertices for c in induced.cells) == [(0, 1), (1, 2), (2, 4), (4, 8)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_J_has_a_realizing_height(n):
    for mask in range(2 ** (n - 1)):
        J = [k for k in range(2, n + 1) if mask >> (k - 2) & 1]
        height = height_from_J(n, J)
        induced = subdivision_from_height(interval_configuration(n), height.values)
        assert induced.cells == expected_subdivision(n, J).cells


def test_lifts_and_norm_order():
    assert lift(-1) == pytest.approx(complex(0, math.pi))
    assert lift(1, branch=1) == pytest.approx(complex(0, 2 * math.pi))
    with pytest.raises(InputError):
        lift(0)
    assert norm_order([1, 3j, -2]) == [1, 2, 0]
    with pytest.raises(NormTieError):
        norm_order([1, -1])


def test_radar_paths_do_not_cross():
    screen = radar_screen([1, 8, -2, 4j])
    assert screen.values == (8, 4j, -2, 1)
    assert screen.is_fundamental
    stop = screen.base.real - 1.0
    for j, path in enumerate(screen.paths):
        assert path[0] == screen.lifts[j]
        assert path[-1] == screen.base
    for a in range(screen.size):
        for b in range(a + 1, screen.size):
            assert not polylines_cross(screen.paths[a], screen.paths[b], stop_at=stop)
    phantom = phantom_path(screen, depth=1.0)
    assert all(not polylines_cross(phantom, path, stop_at=stop) for path in screen.paths)


def test_staircase_offsets_nest():
    screen = radar_screen([8, 4j, -2, 1])
    finals = [path[-2].imag for path in screen.paths]
    assert finals[0] == pytest.approx(0.0)
    assert finals[1] > finals[2] > finals[3]


def test_crossing_detection():
    assert polylines_cross([0, 2 + 2j], [2j, 2])
    assert not polylines_cross([0, 2], [1j, 2 + 1j])
    assert not polylines_cross([0, 2 + 2j], [2j, 2], stop_at=0.0)


def test_radar_screen_rejects_bad_input():
    with pytest.raises(InputError):
        radar_screen([])
    with pytest.raises(InputError):
        radar_screen([1, 2], epsilon=0.0)
    with pytest.raises(InputError):
        radar_screen([1, 2], branches=[0])


def test_loop_around_zero_swaps_square_roots():
    start = fiber([1, 0, 0], 1)
    once = track_fiber([1, 0, 0], [0j, 2j * math.pi], start)
    assert once.permutation == (1, 0)
    assert once.steps > 0
    twice = track_fiber([1, 0, 0], [0j, 4j * math.pi], start)
    assert twice.permutation == (0, 1)


def test_open_path_carries_the_fiber():
    start = fiber([1, 0, 0], 1)
    result = track_fiber([1, 0, 0], [0j, complex(math.log(4), 0)], start)
    assert sorted(z.real for z in result.end_fiber) == pytest.approx([-2, 2])
    assert result.permutation == (0, 1)


def test_match_fibers():
    assert match_fibers([1.01, -0.99], [-1, 1]) == (1, 0)
    with pytest.raises(MatchingAmbiguityError):
        match_fibers([0, 0.01], [0, 1])


def test_split_at():
    assert split_at([3 + 0j, 2 + 0j, 0j], 1.0) == ([3, 2, 1], [1, 0])
    assert split_at([0.5 + 0j, 0j], 1.0) == ([0.5], [0.5, 0])
    with pytest.raises(InputError):
        split_at([3 + 0j, 2 + 0j], 1.0)


def test_coefficients_are_one_on_J():
    deg = degeneration(3, [])
    coefficients = draw_coefficients(deg, seed=7)
    assert [coefficients[i] for i in (0, 1, 4)] == [1, 1, 1]
    assert all(abs(coefficients[i] - 1) <= 0.1 for i in (2, 3))
    assert draw_coefficients(deg, seed=7) == coefficients


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (1, 2)])
def test_circuit_contours_merge_at_the_critical_modulus(a, b):
    assert census_pair(a, b) == (a + 1, 1)


def test_contour_census_rejects_bad_input():
    assert critical_modulus(1, 1) == pytest.approx(0.25)
    with pytest.raises(InputError):
        contour_census(0, 1, 0.1)
    with pytest.raises(InputError):
        contour_census(1, 1, -1.0)


def test_trees_match_up_to_cyclic_shift():
    numeric = VanishingTree(vertices=(0, 1, 2), edges=(TreeEdge(0, 1, 1, 1), TreeEdge(1, 2, 2, 1)))
    shifted = VanishingTree(vertices=(0, 1, 2), edges=(TreeEdge(1, 2, 1, 1), TreeEdge(0, 2, 2, 1)))
    swapped = VanishingTree(vertices=(0, 1, 2), edges=(TreeEdge(1, 2, 1, 1), TreeEdge(0, 1, 2, 1)))
    assert trees_match(numeric, shifted)
    assert not trees_match(numeric, swapped)


def test_insertion_classes_count_arrangements():
    assert len(insertion_classes(2)) == 2
    assert len(insertion_classes(3)) == 6


def test_scope_limits():
    with pytest.raises(ScopeError):
        verify_theorem(8, [])
    with pytest.raises(ScopeError):
        verify_theorem(2, [], trials=0)
    with pytest.raises(ScopeError):
        surjectivity_sweep(5)


@pytest.mark.slow
def test_regeneration_lab_separates_clusters():
    lab = RegenerationLab(2, [2], seed=11)
    assert sorted(len(v) for v in lab.clusters.values()) == [1, 1]
    moduli = lab.cluster_moduli()
    assert min(moduli[2]) > max(moduli[1])
    first = lab.numeric_insertion(1)
    assert first.insertion.sizes == (1, 1)
    second = lab.numeric_insertion(2)
    assert second.insertion.sizes == (2, 1)
    assert set(second.insertion.s1) == set(first.insertion.s3)
    tree = lab.numeric_vanishing_tree()
    assert len(tree.edges) == 2


@pytest.mark.slow
@pytest.mark.parametrize("n,J", [(2, []), (2, [2]), (3, []), (3, [2]), (3, [2, 3])])
def test_numeric_trees_match_stage_insertions(n, J):
    report = verify_theorem(n, J, trials=2, seed=101)
    assert report.all_valid
    assert report.all_match
    payload = report.to_dict()
    assert payload["mismatches"] == 0
    assert len(payload["trials"]) == 2


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3, 4])
def test_branch_sweep_realizes_every_arrangement(n):
    report = surjectivity_sweep(n, seed=5)
    assert report.complete
    assert report.expected == math.factorial(n)
    assert report.to_dict()["draws"] == report.draws >= 1


def test_norm_order_ignores_a_common_scalar():
    rng = np.random.default_rng(3)
    for _ in range(20):
        values = list(rng.normal(size=5) + 1j * rng.normal(size=5))
        scalar = complex(rng.normal(), rng.normal())
        assert norm_order([scalar * v for v in values]) == norm_order(values)
        screen = radar_screen(values)
        scaled = radar_screen([scalar * v for v in values])
        assert list(scaled.values) == pytest.approx([scalar * v for v in screen.values])


def test_path_followed_by_its_reverse_is_the_identity():
    coefficients = [1, 0, 1, 0]
    start = fiber(coefficients, 1)
    path = [0j, complex(0.5, 3.0), complex(1.0, 7.0)]
    result = track_fiber(coefficients, path + path[-2::-1], start)
    assert result.permutation == (0, 1, 2)
    assert list(result.end_fiber) == pytest.approx(start)


def test_sweep_needs_a_draw():
    with pytest.raises(ScopeError):
        surjectivity_sweep(2, draws=0)


@pytest.mark.slow
def test_numeric_insertions_for_exponential_J_are_the_default_shuffles():
    lab = RegenerationLab(7, [2, 4])
    numeric = [stage.insertion for stage in lab.numeric_insertions()]
    assert [insertion_shape(ins) for ins in numeric] == [insertion_shape(ins) for ins in canonical_insertions(7, [2, 4])]
    assert insertion_shape(numeric[-1]) == (0, 1, 0, 4, 0, 3, 0, 2)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_numeric_trees_match_for_every_J(n):
    for mask in range(2 ** (n - 1)):
        J = [k for k in range(2, n + 1) if mask >> (k - 2) & 1]
        report = verify_theorem(n, J, trials=20, seed=101)
        assert report.all_valid, J
        assert report.all_match, J
        assert len(report.trials) == 20
