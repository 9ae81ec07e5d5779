"""
Shared pytest setup: repo root on sys.path, the slow marker, clean metrics.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from utils.metrics import metrics  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: E2-scale and numeric sweep checks (deselect with -m 'not slow')")


@pytest.fixture(autouse=True)
def _reset_metrics():
    metrics.reset_metrics()
    yield
    metrics.reset_metrics()
