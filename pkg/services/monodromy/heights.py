"""
Integer heights on the interval that realize a maximal degeneration J.
"""

from models.monodromy import HeightFunction
from models.configuration import Cell, Subdivision
from services.an.degenerations import JLike, degeneration
from services.subdivisions.configurations import interval_configuration
from services.subdivisions.heights import subdivision_from_height
from utils.errors import DegenerationError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def expected_subdivision(n: int, J: JLike) -> Subdivision:
    """Cells [0, 1], [k_0, k_1], ..., [k_{m-1}, k_m], each marked only at its ends."""
    ks = (0,) + degeneration(n, J).breakpoints
    return Subdivision(cells=tuple(Cell(vertices=(a, b), marked=(a, b)) for a, b in zip(ks, ks[1:])))


def height_from_J(n: int, J: JLike) -> HeightFunction:
    """
    eta(0) = eta(1) = 0 and slope i on [k_{i-1}, k_i]; every point off J sits
    one unit above the lower hull.
    """
    deg = degeneration(n, J)
    ks = deg.breakpoints
    hull = [0] * (n + 2)
    slopes = []
    for i in range(1, deg.m + 1):
        lo, hi = ks[i - 1], ks[i]
        slopes.append(i)
        for x in range(lo + 1, hi + 1):
            hull[x] = hull[lo] + i * (x - lo)
    on_J = set(ks) | {0}
    values = tuple(h if x in on_J else h + 1 for x, h in enumerate(hull))

    height = HeightFunction(n=n, values=values, breakpoints=ks, slopes=tuple(slopes))
    induced = subdivision_from_height(interval_configuration(n), values)
    if induced.cells != expected_subdivision(n, deg).cells:
        raise DegenerationError(f"height {list(values)} does not induce the subdivision of J={list(ks)}")
    logger.debug("height_from_J(%d, %s) = %s", n, list(ks), list(values))
    return height
