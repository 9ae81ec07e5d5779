"""
Regular subdivisions from heights, and the regularity LP.

A height eta on A induces the marked subdivision whose cells are the
projections of the lower facets of conv{(a, eta(a))}; a point is marked in a
cell iff its lift lies on that lower facet.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from models.configuration import Cell, PointConfiguration, Subdivision
from models.rational import RatLike, Vector, dot, format_rat, format_vector, to_vector
from services.geometry.hull import hull, normalized_volume
from services.geometry.linalg import rank, solve, subtract
from services.geometry.lp import lp_optimize
from utils.errors import DimensionMismatchError, SubdivisionError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def vertex_indices(config: PointConfiguration, ids: Sequence[int] = None) -> Tuple[int, ...]:
    """Indices of the points among ``ids`` (default: all of A) that are vertices of their hull."""
    ids = list(range(config.size)) if ids is None else list(ids)
    if ids == list(range(config.size)):
        polytope = config.polytope
    else:
        polytope = hull([config.points[i] for i in ids])
    found = {config.index_of([int(x) for x in v]) for v in polytope.vertices}
    return tuple(sorted(found))


def affine_basis(config: PointConfiguration, ids: Sequence[int]) -> List[int]:
    """First affinely independent subset of ``ids`` spanning their affine hull, greedily in order."""
    chosen = [ids[0]]
    origin = config.vector(ids[0])
    rows: List[Vector] = []
    for i in ids[1:]:
        candidate = rows + [subtract(config.vector(i), origin)]
        if rank(candidate) == len(candidate):
            rows = candidate
            chosen.append(i)
    return chosen


def barycentric(config: PointConfiguration, basis: Sequence[int], point: Vector) -> Vector:
    """Affine coordinates of ``point`` with respect to d+1 affinely independent points."""
    d = config.lattice_rank
    matrix = [[config.vector(b)[r] for b in basis] for r in range(d)]
    matrix.append([Fraction(1)] * len(basis))
    return solve(matrix, list(point) + [Fraction(1)])


def subdivision_from_height(config: PointConfiguration, height: Sequence[RatLike]) -> Subdivision:
    eta = to_vector(height)
    if len(eta) != config.size:
        raise DimensionMismatchError(f"height has {len(eta)} entries, configuration has {config.size} points")
    lifted = [config.vector(i) + (eta[i],) for i in range(config.size)]
    index = {p: i for i, p in enumerate(lifted)}
    polytope = hull(lifted)

    if polytope.dim == config.lattice_rank:
        cells = [Cell(vertices=vertex_indices(config), marked=tuple(range(config.size)))]
    else:
        cells = []
        for facet in polytope.facets:
            if facet.normal[-1] >= 0:
                continue
            marked = tuple(i for i, p in enumerate(lifted) if dot(facet.normal, p) == facet.offset)
            vertices = tuple(index[polytope.vertices[v]] for v in facet.vertex_ids)
            cells.append(Cell(vertices=vertices, marked=marked))
    return Subdivision(cells=tuple(cells), height=eta)


def refines(fine: Subdivision, coarse: Subdivision) -> bool:
    """Every cell of ``fine`` has its marked points inside the marked points of some coarse cell."""
    coarse_sets = [set(c.marked) for c in coarse.cells]
    return all(any(set(c.marked) <= s for s in coarse_sets) for c in fine.cells)


@dataclass
class RegularityResult:
    regular: bool
    height: Optional[Vector] = None
    max_gap: Optional[Fraction] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.regular

    def to_dict(self) -> Dict[str, Any]:
        return {
            "regular": self.regular,
            "height": format_vector(self.height) if self.height is not None else None,
            "max_gap": format_rat(self.max_gap) if self.max_gap is not None else None,
        }


def _check_subdivision(config: PointConfiguration, cells: Sequence[Cell]) -> None:
    d = config.lattice_rank
    polytopes = []
    total = Fraction(0)
    for cell in cells:
        if not set(cell.vertices) <= set(cell.marked):
            raise SubdivisionError(f"cell {list(cell.vertices)} does not mark all of its vertices")
        poly = hull([config.points[i] for i in cell.vertices])
        if poly.dim != d:
            raise SubdivisionError(f"cell {list(cell.vertices)} is not full-dimensional")
        if vertex_indices(config, cell.vertices) != cell.vertices:
            raise SubdivisionError(f"cell {list(cell.vertices)} lists points that are not vertices")
        for i in cell.marked:
            if not poly.contains(config.vector(i)):
                raise SubdivisionError(f"marked point {i} lies outside cell {list(cell.vertices)}")
        total += normalized_volume(poly)
        polytopes.append(poly)

    expected = normalized_volume(config.polytope)
    if total != expected:
        raise SubdivisionError(f"cell volumes sum to {total}, Q has volume {expected}")

    for (i, p), (j, q) in combinations(enumerate(polytopes), 2):
        constraints = [(list(f.normal) + [Fraction(1)], f.offset) for f in p.facets + q.facets]
        constraints.append(([Fraction(0)] * d + [Fraction(1)], Fraction(1)))
        result = lp_optimize(constraints, [Fraction(0)] * d + [Fraction(1)], sense="max")
        if result.is_optimal and result.value > 0:
            raise SubdivisionError(f"cells {list(cells[i].vertices)} and {list(cells[j].vertices)} overlap")


def normalize_height(config: PointConfiguration, height: Vector) -> Vector:
    """Subtract the affine function agreeing with ``height`` on the first affine basis of A."""
    basis = affine_basis(config, list(range(config.size)))
    values = [height[b] for b in basis]
    result = []
    for i in range(config.size):
        weights = barycentric(config, basis, config.vector(i))
        result.append(height[i] - dot(weights, values))
    return tuple(result)


def is_regular(config: PointConfiguration, cells: Sequence[Cell]) -> RegularityResult:
    """
    Solve for a height inducing exactly ``cells``: maximize a gap eps <= 1 with
    psi(a) = g_C(a) on points marked in C and psi(a) - g_C(a) >= eps elsewhere,
    g_C being the affine interpolation of psi on an affine basis of C.
    """
    cells = tuple(sorted(set(cells)))
    _check_subdivision(config, cells)
    n = config.size

    equalities = []
    constraints = []
    for cell in cells:
        basis = affine_basis(config, list(cell.vertices))
        marked = set(cell.marked)
        for a in range(n):
            if a in basis:
                continue
            weights = barycentric(config, basis, config.vector(a))
            row = [Fraction(0)] * (n + 1)
            row[a] += 1
            for b, w in zip(basis, weights):
                row[b] -= w
            if a in marked:
                equalities.append((row, Fraction(0)))
            else:
                # -(psi(a) - g_C(a)) + eps <= 0
                constraints.append(([-x for x in row[:n]] + [Fraction(1)], Fraction(0)))
    bound = [Fraction(0)] * n + [Fraction(1)]
    constraints.append((bound, Fraction(1)))

    result = lp_optimize(constraints, bound, sense="max", equalities=equalities)
    if not result.is_optimal or result.value <= 0:
        gap = result.value if result.is_optimal else None
        logger.debug("is_regular: no positive gap (%s)", result.status)
        return RegularityResult(regular=False, max_gap=gap, details={"lp_status": result.status})

    height = normalize_height(config, result.point[:n])
    recovered = subdivision_from_height(config, height)
    if recovered.cells != cells:
        raise SubdivisionError("cells are not face-to-face: certificate induces a different subdivision")
    return RegularityResult(regular=True, height=height, max_gap=result.value)
