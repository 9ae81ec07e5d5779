"""
The exceptional collection E_J over the path algebra of Gamma_J and its Ext data.

Objects are bounded complexes of indecomposable projectives P_1..P_n. In the
path category of an A_n quiver, Hom(P_a, P_b) is one-dimensional when a
path a ~> b exists (including a = b) and zero otherwise, so every Hom
complex has a basis of (source term, target term) pairs.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from models.an_types import QuiverJ
from services.an.degenerations import JLike, perversity, quiver_from_J
from services.geometry.linalg import rank
from utils.errors import ScopeError
from utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_YONEDA_N = 6


@dataclass(frozen=True)
class ProjectiveComplex:
    """Terms (degree, vertex) and differential entries (source term, target term, coefficient)."""
    terms: Tuple[Tuple[int, int], ...]
    differential: Tuple[Tuple[int, int, int], ...] = ()


def has_path(quiver: QuiverJ, a: int, b: int) -> bool:
    if a == b:
        return True
    if a < b:
        return all(quiver.o(i) == 1 for i in range(a + 1, b + 1))
    return all(quiver.o(i) == -1 for i in range(b + 1, a + 1))


def exceptional_collection(n: int, J: JLike) -> List[ProjectiveComplex]:
    """
    E_i = P_i[p_J(i)] when o(e_{i+1}) = +1. Otherwise E_i is the two-term
    complex P_{i+1} -e_{i+1}-> P_i with P_{i+1} in degree -p_J(i), which is
    the quotient P_i / P_{i+1} placed in degree 1 - p_J(i).

    Either way E_i is the interval module on the quiver block ending at i,
    shifted by the number of reversed edges e_k with k <= i, and every Ext
    between members of E_J sits in degree 0.
    """
    quiver = quiver_from_J(n, J)
    p = perversity(n, J)
    collection = []
    for i in range(1, n + 1):
        if quiver.o(i + 1) == 1:
            collection.append(ProjectiveComplex(terms=((-p[i - 1], i),)))
        else:
            bottom = -p[i - 1]
            collection.append(ProjectiveComplex(terms=((bottom, i + 1), (bottom + 1, i)), differential=((0, 1, 1),)))
    return collection


def _hom_basis(quiver: QuiverJ, x: ProjectiveComplex, y: ProjectiveComplex) -> Dict[int, List[Tuple[int, int]]]:
    basis: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for s, (ds, vs) in enumerate(x.terms):
        for t, (dt, vt) in enumerate(y.terms):
            if has_path(quiver, vs, vt):
                basis[dt - ds].append((s, t))
    return basis


def ext_dimensions(quiver: QuiverJ, x: ProjectiveComplex, y: ProjectiveComplex) -> Dict[int, int]:
    """dim H^k of Hom^*(x, y) with D(f) = d_y f - (-1)^k f d_x."""
    basis = _hom_basis(quiver, x, y)
    degrees = range(min(basis, default=0) - 1, max(basis, default=0) + 2)

    def matrix(k: int) -> List[List[Fraction]]:
        source, target = basis.get(k, []), basis.get(k + 1, [])
        index = {pair: r for r, pair in enumerate(target)}
        rows = [[Fraction(0)] * len(source) for _ in target]
        sign = -1 if k % 2 else 1
        for c, (s, t) in enumerate(source):
            for a, b, coeff in y.differential:
                if a == t and (s, b) in index:
                    rows[index[(s, b)]][c] += coeff
            for a, b, coeff in x.differential:
                if b == s and (a, t) in index:
                    rows[index[(a, t)]][c] -= sign * coeff
        return rows

    ranks = {k: (rank(matrix(k)) if basis.get(k) and basis.get(k + 1) else 0) for k in degrees}
    dims = {}
    for k in degrees:
        dim = len(basis.get(k, [])) - ranks[k] - ranks.get(k - 1, 0)
        if dim:
            dims[k] = dim
    return dims


def _check_scope(n: int) -> None:
    if n > MAX_YONEDA_N:
        raise ScopeError(f"Yoneda computations are limited to n <= {MAX_YONEDA_N}, got {n}")


def yoneda_graded(n: int, J: JLike) -> Dict[Tuple[int, int], Dict[int, int]]:
    """(i, j) -> {k: dim Ext^k(E_i, E_j)}, 1-based indices."""
    _check_scope(n)
    quiver = quiver_from_J(n, J)
    collection = exceptional_collection(n, J)
    return {
        (i + 1, j + 1): ext_dimensions(quiver, collection[i], collection[j])
        for i in range(n) for j in range(n)
    }


def yoneda_dimensions(n: int, J: JLike) -> np.ndarray:
    """Total dimensions of Ext^*(E_i, E_j) as an n x n integer matrix."""
    graded = yoneda_graded(n, J)
    matrix = np.zeros((n, n), dtype=int)
    for (i, j), dims in graded.items():
        matrix[i - 1, j - 1] = sum(dims.values())
    logger.debug("yoneda_dimensions(n=%d): total %d", n, int(matrix.sum()))
    return matrix


def is_strong(n: int, J: JLike) -> bool:
    """All nonzero Ext between members of E_J sit in degree 0."""
    return all(set(dims) <= {0} for dims in yoneda_graded(n, J).values())
