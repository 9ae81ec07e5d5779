"""
Point configurations and their marked subdivisions.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from models.polytope import Polytope
from models.rational import Vector, format_vector, parse_vector
from utils.errors import ConfigurationError

IntPoint = Tuple[int, ...]


@dataclass(frozen=True)
class PointConfiguration:
    """
    A finite marked point set A in Z^d together with Q = conv(A).

    Construct through ``services.subdivisions.configurations.build_configuration``,
    which computes ``polytope`` and checks full-dimensionality.
    """
    lattice_rank: int
    points: Tuple[IntPoint, ...]
    polytope: Polytope = field(compare=False, repr=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.lattice_rank < 1:
            raise ConfigurationError("lattice rank must be positive")
        if not self.points:
            raise ConfigurationError("a configuration needs at least one point")
        for p in self.points:
            if len(p) != self.lattice_rank:
                raise ConfigurationError(f"point {list(p)} does not have {self.lattice_rank} coordinates")
            if any(isinstance(x, bool) or not isinstance(x, int) for x in p):
                raise ConfigurationError(f"point {list(p)} is not an integer vector")
        if len(set(self.points)) != len(self.points):
            raise ConfigurationError("duplicate points in configuration")

    @property
    def size(self) -> int:
        return len(self.points)

    def vector(self, index: int) -> Vector:
        return tuple(Fraction(x) for x in self.points[index])

    def vectors(self) -> List[Vector]:
        return [self.vector(i) for i in range(self.size)]

    def index_of(self, point: Sequence[int]) -> int:
        target = tuple(int(x) for x in point)
        try:
            return self.points.index(target)
        except ValueError:
            raise ConfigurationError(f"{list(point)} is not a point of the configuration") from None

    def homogenized(self, index: int) -> Tuple[int, ...]:
        """beta_A(e_a) = (1, a)."""
        return (1,) + self.points[index]

    def to_dict(self) -> Dict[str, Any]:
        return {"lattice_rank": self.lattice_rank, "points": [list(p) for p in self.points]}


@dataclass(frozen=True, order=True)
class Cell:
    """A cell of a marked subdivision: the vertices of its polytope and its marked points."""
    vertices: Tuple[int, ...]
    marked: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "marked", tuple(sorted(self.marked)))

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": list(self.vertices), "marked": list(self.marked)}


def _canonical_cells(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    return tuple(sorted(set(cells)))


@dataclass(frozen=True)
class Subdivision:
    """
    Marked polyhedral subdivision. Equality compares cells and markings; the
    certifying height is carried along but ignored by ``==``.
    """
    cells: Tuple[Cell, ...]
    height: Optional[Vector] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cells", _canonical_cells(self.cells))

    @property
    def is_trivial(self) -> bool:
        return len(self.cells) == 1

    def used_points(self) -> Tuple[int, ...]:
        return tuple(sorted({i for c in self.cells for i in c.marked}))

    def with_height(self, height: Vector) -> "Subdivision":
        return type(self)(cells=self.cells, height=height)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cells": [c.to_dict() for c in self.cells],
            "height": format_vector(self.height) if self.height is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Subdivision":
        cells = [Cell(vertices=tuple(c["vertices"]), marked=tuple(c["marked"])) for c in data["cells"]]
        height = data.get("height")
        return cls(cells=tuple(cells), height=parse_vector(height) if height is not None else None)


@dataclass(frozen=True)
class Triangulation(Subdivision):
    """A subdivision whose cells are d-simplices marked exactly at their d+1 vertices."""

    @classmethod
    def from_subdivision(cls, subdivision: Subdivision) -> "Triangulation":
        return cls(cells=subdivision.cells, height=subdivision.height)

    @property
    def simplices(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(c.vertices for c in self.cells)


def is_triangulation_shape(subdivision: Subdivision, lattice_rank: int) -> bool:
    return all(
        len(c.vertices) == lattice_rank + 1 and c.marked == c.vertices
        for c in subdivision.cells
    )


@dataclass(frozen=True)
class PointedSubdivision:
    """A coarse subdivision S with a pointing face Q' (point indices) of one of its cells."""
    subdivision: Subdivision
    pointing: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cells": [c.to_dict() for c in self.subdivision.cells],
            "pointing": list(self.pointing),
        }


@dataclass(frozen=True)
class XiMatrix:
    """
    Rows indexed by f_0..f_n, columns by the 3n+2 facet generators in the order
    drop-1..drop-n, rsplit-1..rsplit-n, lsplit-1..lsplit-n, vertical-(n+1), vertical-0.
    """
    n: int
    matrix: Tuple[Tuple[int, ...], ...]

    @property
    def n_columns(self) -> int:
        return 3 * self.n + 2

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def column_labels(self) -> List[Tuple[str, int]]:
        n = self.n
        labels = [("drop", i) for i in range(1, n + 1)]
        labels += [("rsplit", i) for i in range(1, n + 1)]
        labels += [("lsplit", i) for i in range(1, n + 1)]
        labels += [("vertical", n + 1), ("vertical", 0)]
        return labels

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "matrix": [list(r) for r in self.matrix]}
