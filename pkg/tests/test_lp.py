"""
Unit tests for the exact simplex solver.
"""

from fractions import Fraction

import pytest

from services.geometry import lp_optimize
from utils.errors import DimensionMismatchError, InputError
from utils.metrics import metrics

BOX = [((1, 0), 1), ((0, 1), 2), ((-1, 0), 0), ((0, -1), 0)]


def test_maximize_over_a_box():
    result = lp_optimize(BOX, (1, 1))
    assert result.is_optimal
    assert result.value == 3
    assert result.point == (Fraction(1), Fraction(2))
    assert result.to_dict()["value"] == "3/1"
    assert metrics.get_metrics()["lp.solves"] == 1


def test_minimize_with_equality():
    result = lp_optimize(BOX, (1, -1), sense="min", equalities=[((1, 1), Fraction(3, 2))])
    assert result.is_optimal
    assert result.point == (Fraction(0), Fraction(3, 2))
    assert result.value == Fraction(-3, 2)


def test_unbounded_reports_a_ray():
    result = lp_optimize([((-1, 0), 0)], (1, 0))
    assert result.status == "unbounded"
    assert result.ray[0] > 0


def test_infeasible():
    result = lp_optimize([((1,), -1), ((-1,), -1)], (1,))
    assert result.status == "infeasible"


def test_rejects_bad_input():
    with pytest.raises(InputError):
        lp_optimize(BOX, (1, 1), sense="sideways")
    with pytest.raises(DimensionMismatchError):
        lp_optimize([((1, 0, 0), 1)], (1, 1))
