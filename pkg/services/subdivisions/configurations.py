"""
Loading and building point configurations.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

from config.settings import settings
from models.configuration import PointConfiguration
from services.geometry.hull import hull
from utils.errors import ConfigurationError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def build_configuration(
    points: Sequence[Sequence[int]],
    lattice_rank: Optional[int] = None,
    name: str = "",
) -> PointConfiguration:
    """Validate A and compute Q = conv(A); A must be full-dimensional."""
    if not points:
        raise ConfigurationError("a configuration needs at least one point")
    for p in points:
        if any(isinstance(x, bool) or not isinstance(x, int) for x in p):
            raise ConfigurationError(f"point {list(p)} is not an integer vector")
    rank = lattice_rank if lattice_rank is not None else len(points[0])
    tuples = tuple(tuple(int(x) for x in p) for p in points)
    if any(len(p) != rank for p in tuples):
        raise ConfigurationError(f"all points must have {rank} coordinates")
    if len(set(tuples)) != len(tuples):
        raise ConfigurationError("duplicate points in configuration")

    polytope = hull(tuples)
    if polytope.dim != rank:
        raise ConfigurationError(
            f"configuration spans a {polytope.dim}-dimensional affine subspace of Z^{rank}"
        )
    return PointConfiguration(lattice_rank=rank, points=tuples, polytope=polytope, name=name)


def configuration_from_dict(data: Dict[str, Any], name: str = "") -> PointConfiguration:
    try:
        rank = int(data["lattice_rank"])
        points = data["points"]
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"malformed configuration: {e}") from e
    if not isinstance(points, list):
        raise ConfigurationError("'points' must be a list")
    return build_configuration(points, lattice_rank=rank, name=name)


def load_configuration(path: Union[str, Path]) -> PointConfiguration:
    """Read a configuration JSON file; bare names resolve against settings.CONFIG_DIR."""
    path = Path(path)
    if not path.exists() and not path.is_absolute():
        candidate = settings.CONFIG_DIR / path
        if not candidate.suffix:
            candidate = candidate.with_suffix(".json")
        path = candidate
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError as e:
        raise ConfigurationError(f"configuration file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"configuration file {path} is not valid JSON: {e}") from e
    config = configuration_from_dict(data, name=path.stem)
    logger.info("Loaded configuration %s: %d points in Z^%d", path.stem, config.size, config.lattice_rank)
    return config


def interval_configuration(n: int) -> PointConfiguration:
    """A = {0, 1, ..., n+1} in Z^1."""
    if n < 0:
        raise ConfigurationError(f"interval needs n >= 0, got {n}")
    return build_configuration([(i,) for i in range(n + 2)], lattice_rank=1, name=f"interval{n + 2}")
