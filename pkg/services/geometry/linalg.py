"""
Exact linear algebra over the rationals.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from models.rational import Vector, dot
from utils.errors import DimensionMismatchError


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return [], []
    n_cols = len(matrix[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> List[Vector]:
    """Basis of {x : rows . x = 0}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    rows = [[Fraction(x) for x in row] for row in matrix]
    scale = 1
    for row in rows:
        for x in row:
            scale = _lcm(scale, x.denominator)
    ints = [[int(x * scale) for x in row] for row in rows]
    return Fraction(integer_determinant(ints), scale ** len(rows))


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector:
    """Unique solution of a square nonsingular system."""
    n = len(matrix)
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return tuple(row[n] for row in reduced)


def cofactor_normal(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Integer vector orthogonal to k-1 integer rows in Z^k (generalized cross product)."""
    k = len(rows) + 1
    normal = []
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in rows]
        normal.append((-1) ** j * integer_determinant(minor))
    return tuple(normal)


def primitive(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    """Positive multiple with coprime integer entries; zero stays zero."""
    values = [Fraction(x) for x in vector]
    scale = reduce(_lcm, (x.denominator for x in values), 1)
    ints = [int(x * scale) for x in values]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def common_denominator(points: Sequence[Sequence[Fraction]]) -> int:
    scale = 1
    for p in points:
        for x in p:
            scale = _lcm(scale, Fraction(x).denominator)
    return scale


def subtract(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class AffineHull:
    """
    Affine span of a point set: ``base + rowspace(basis)``.

    ``basis`` is in reduced row echelon form, so the coordinates of
    ``p - base`` in the basis are read off at the ``pivots`` columns.
    """
    base: Vector
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def equations(self) -> List[Tuple[Vector, Fraction]]:
        """Primitive equations <a, x> = b cutting out the span."""
        ambient = len(self.base)
        result = []
        for normal in nullspace(self.basis, ambient) if self.basis else _identity(ambient):
            a = tuple(Fraction(x) for x in primitive(normal))
            result.append((a, dot(a, self.base)))
        return result

    def project_direction(self, vector: Sequence[Fraction]) -> Vector:
        """Orthogonal projection of a vector onto the direction space."""
        if not self.basis:
            return tuple(Fraction(0) for _ in vector)
        gram = [[dot(u, v) for v in self.basis] for u in self.basis]
        coeffs = solve(gram, [dot(u, vector) for u in self.basis])
        ambient = len(vector)
        return tuple(sum((c * b[i] for c, b in zip(coeffs, self.basis)), Fraction(0)) for i in range(ambient))


def _identity(n: int) -> List[Vector]:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def affine_hull(points: Sequence[Sequence[Fraction]]) -> AffineHull:
    if not points:
        raise ValueError("affine hull of an empty point set")
    length = len(points[0])
    if any(len(p) != length for p in points):
        raise DimensionMismatchError("points have different lengths")
    base = tuple(Fraction(x) for x in points[0])
    differences = [subtract(p, base) for p in points[1:]]
    reduced, pivots = rref(differences)
    return AffineHull(base=base, basis=tuple(tuple(r) for r in reduced), pivots=tuple(pivots))
