"""
Utility functions and helpers.
"""

from utils.logger import setup_logger, set_console_level, default_logger
from utils.metrics import MetricsCollector, metrics
from utils.latency_tracker import (
    track_latency,
    measure_latency,
    LatencyTracker
)
from utils.errors import (
    LGToolkitError,
    InputError,
    NumericError,
)

__all__ = [
    'setup_logger',
    'set_console_level',
    'default_logger',
    'MetricsCollector',
    'metrics',
    'track_latency',
    'measure_latency',
    'LatencyTracker',
    'LGToolkitError',
    'InputError',
    'NumericError',
]
