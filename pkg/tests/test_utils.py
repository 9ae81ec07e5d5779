"""
Tests for settings, metrics, latency tracking and the error hierarchy.
"""

import logging
import time

import pytest

from config.settings import settings
from utils.errors import (
    ClusterSeparationError,
    DegenerationError,
    GoldenMismatchError,
    InputError,
    LGToolkitError,
    NumericError,
)
from utils.latency_tracker import LatencyTracker, measure_latency, track_latency
from utils.logger import set_console_level, setup_logger
from utils.metrics import metrics


def test_settings_defaults():
    assert settings.CONFIG_DIR.name == "configurations"
    assert settings.LGTK_THREADS >= 1
    assert 0 < settings.REFINE_RESIDUAL < 1e-6
    assert settings.CLUSTER_SEPARATION > 1


def test_logger_is_configured_once():
    first = setup_logger("lgtoolkit.test")
    second = setup_logger("lgtoolkit.test")
    assert first is second
    assert first.handlers[-1].stream is not None
    assert not first.propagate


def test_console_level_switch():
    logger = setup_logger("lgtoolkit.test.level")
    console = logger.handlers[-1]
    set_console_level("ERROR")
    assert console.level == logging.ERROR
    set_console_level(settings.LOG_LEVEL)
    assert console.level == getattr(logging, settings.LOG_LEVEL.upper())


def test_counters_and_gauges():
    metrics.increment_counter("lp.solves")
    metrics.increment_counter("lp.solves", 2)
    metrics.set_gauge("regeneration.s", 0.05)
    snapshot = metrics.get_metrics()
    assert snapshot["lp.solves"] == 3
    assert snapshot["regeneration.s"] == 0.05


def test_latency_stats():
    metrics.record_latency("hull", 100.0)
    metrics.record_latency("hull", 200.0)
    stats = metrics.get_latency_stats("hull")
    assert stats["count"] == 2
    assert stats["avg_latency_ms"] == 150.0
    assert stats["min_latency_ms"] == 100.0
    assert stats["max_latency_ms"] == 200.0
    assert metrics.get_latency_stats("missing") is None


def test_track_latency_and_decorator():
    with track_latency("flip_walk"):
        time.sleep(0.01)
    assert metrics.get_latency_stats("flip_walk")["count"] == 1

    @measure_latency
    def enumerate_something():
        return 7

    assert enumerate_something() == 7
    assert any("enumerate_something" in key for key in metrics.get_metrics())


def test_latency_tracker_steps():
    tracker = LatencyTracker("verify_theorem")
    tracker.start("stages")
    time.sleep(0.01)
    assert tracker.stop("stages") > 0
    assert tracker.stop("never_started") == 0.0
    summary = tracker.get_summary()
    assert summary["step_count"] == 1
    assert summary["total_ms"] > 0
    assert metrics.get_latency_stats("verify_theorem.stages")["count"] == 1


def test_error_hierarchy():
    assert issubclass(DegenerationError, InputError)
    assert issubclass(InputError, ValueError)
    assert issubclass(ClusterSeparationError, NumericError)
    assert issubclass(GoldenMismatchError, LGToolkitError)
    assert not issubclass(GoldenMismatchError, NumericError)
    error = ClusterSeparationError("not separated", {"s": 0.5})
    assert error.diagnostics == {"s": 0.5}
    with pytest.raises(LGToolkitError):
        raise error
