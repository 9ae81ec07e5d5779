"""
The Lafforgue polytope Sigma(A) + Delta^A and its pointed coarse subdivisions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from models.configuration import PointConfiguration, PointedSubdivision, XiMatrix
from models.polytope import Polytope
from models.rational import Vector, format_vector
from services.geometry.fans import inner_normal, minkowski_sum
from services.geometry.hull import hull
from services.geometry.linalg import primitive
from services.subdivisions.configurations import interval_configuration
from services.subdivisions.heights import subdivision_from_height
from services.subdivisions.secondary import secondary_polytope
from utils.errors import InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)

DROP = "interior-point-drop"
RIGHT_SPLIT = "right-pointed-split"
LEFT_SPLIT = "left-pointed-split"
VERTICAL_0 = "vertical-0"
VERTICAL_END = "vertical-(n+1)"

# XiMatrix column blocks in the same order
_COLUMN_KIND = {"drop": DROP, "rsplit": RIGHT_SPLIT, "lsplit": LEFT_SPLIT}


def standard_simplex(size: int) -> Polytope:
    """Delta^A: hull of the basis vectors of R^A."""
    return hull([tuple(1 if i == j else 0 for j in range(size)) for i in range(size)])


@lru_cache(maxsize=16)
def lafforgue_polytope(config: PointConfiguration) -> Polytope:
    polytope, _ = secondary_polytope(config)
    result = minkowski_sum(polytope, standard_simplex(config.size))
    logger.info("Lafforgue polytope: dim %d, %d vertices, %d facets",
                result.dim, result.n_vertices, len(result.facets))
    return result


def pointed_subdivision(config: PointConfiguration, polytope: Polytope, facet_index: int) -> PointedSubdivision:
    """
    (S, Q') for a facet with inner normal nu: S is the subdivision induced by
    nu as a height, Q' the points of A where nu is smallest.
    """
    nu = inner_normal(polytope, facet_index)
    subdivision = subdivision_from_height(config, nu)
    low = min(nu)
    pointing = tuple(i for i, x in enumerate(nu) if x == low)
    return PointedSubdivision(subdivision=subdivision, pointing=pointing)


def an_xi_matrix(n: int) -> XiMatrix:
    """
    (n+1) x (3n+2) matrix: top row (-1, 0..0 | 0..0 | 1..1 | 1, -1) over
    the lower block (C_n | -I | -I | 0 0).
    """
    if n < 1:
        raise InputError(f"xi matrix needs n >= 1, got {n}")
    top = [-1] + [0] * (n - 1) + [0] * n + [1] * n + [1, -1]
    rows = [tuple(top)]
    for i in range(n):
        cartan = [2 if j == i else (-1 if abs(j - i) == 1 else 0) for j in range(n)]
        minus_identity = [-1 if j == i else 0 for j in range(n)]
        rows.append(tuple(cartan + minus_identity + minus_identity + [0, 0]))
    return XiMatrix(n=n, matrix=tuple(rows))


def gamma_coordinates(n: int, functional: Vector) -> Tuple[Fraction, ...]:
    """Evaluate a functional on R^A at f_0 = e_0 - e_1 and f_i = -e_{i-1} + 2e_i - e_{i+1}."""
    values = [functional[0] - functional[1]]
    for i in range(1, n + 1):
        values.append(2 * functional[i] - functional[i - 1] - functional[i + 1])
    return tuple(values)


@dataclass(frozen=True)
class FacetLabel:
    facet: int
    normal: Vector
    kind: str
    index: int
    pointing: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"normal": format_vector(self.normal), "type": self.kind, "index": self.index}


def _classify(n: int, pointed: PointedSubdivision) -> Tuple[str, int]:
    cells = pointed.subdivision.cells
    pointing = set(pointed.pointing)
    everything = set(range(n + 2))
    if len(cells) == 2:
        split = (set(cells[0].vertices) & set(cells[1].vertices)).pop()
        if pointing == set(range(0, split + 1)):
            return RIGHT_SPLIT, split
        if pointing == set(range(split, n + 2)):
            return LEFT_SPLIT, split
    elif len(cells) == 1:
        unmarked = everything - set(cells[0].marked)
        if len(unmarked) == 1:
            return DROP, unmarked.pop()
        if not unmarked and pointing == {0}:
            return VERTICAL_0, 0
        if not unmarked and pointing == {n + 1}:
            return VERTICAL_END, n + 1
    raise InputError(f"facet with pointed subdivision {pointed.to_dict()} fits no interval facet type")


def an_pointed_facet_labels(n: int) -> List[FacetLabel]:
    """Label each of the 3n+2 facets of the interval's Lafforgue polytope."""
    if n < 1:
        raise InputError(f"facet labels need n >= 1, got {n}")
    config = interval_configuration(n)
    polytope = lafforgue_polytope(config)
    labels = []
    for j in range(len(polytope.facets)):
        pointed = pointed_subdivision(config, polytope, j)
        kind, index = _classify(n, pointed)
        labels.append(FacetLabel(facet=j, normal=inner_normal(polytope, j), kind=kind,
                                 index=index, pointing=pointed.pointing))
    return labels


def match_xi_columns(n: int) -> Dict[int, int]:
    """Facet index -> xi column whose Gamma-coordinates agree up to positive scaling."""
    xi = an_xi_matrix(n)
    config = interval_configuration(n)
    polytope = lafforgue_polytope(config)
    columns = {primitive(xi.column(c)): c for c in range(xi.n_columns)}
    matching = {}
    for j in range(len(polytope.facets)):
        key = primitive(gamma_coordinates(n, inner_normal(polytope, j)))
        if key not in columns:
            raise InputError(f"facet {j} matches no xi column (Gamma-coordinates {list(key)})")
        matching[j] = columns[key]
    if sorted(matching.values()) != list(range(xi.n_columns)):
        raise InputError("facets and xi columns are not in bijection")
    return matching


def column_kind(xi: XiMatrix, column: int) -> Tuple[str, int]:
    """Facet type predicted for a xi column."""
    block, index = xi.column_labels()[column]
    if block == "vertical":
        return (VERTICAL_0, 0) if index == 0 else (VERTICAL_END, index)
    return _COLUMN_KIND[block], index
