"""
Exact core geometry: linear algebra, hulls, linear programming, fans.
"""

from services.geometry.linalg import affine_hull, rank, nullspace, determinant, primitive
from services.geometry.hull import hull, normalized_volume, simplex_volume, face_polytope, edges, edge_graph
from services.geometry.lp import lp_optimize, LPResult
from services.geometry.fans import normal_fan, minkowski_sum, minkowski_summands, fan_refines
from services.geometry.isomorphism import combinatorially_isomorphic, IsomorphismResult

__all__ = [
    'affine_hull',
    'rank',
    'nullspace',
    'determinant',
    'primitive',
    'hull',
    'normalized_volume',
    'simplex_volume',
    'face_polytope',
    'edges',
    'edge_graph',
    'lp_optimize',
    'LPResult',
    'normal_fan',
    'minkowski_sum',
    'minkowski_summands',
    'fan_refines',
    'combinatorially_isomorphic',
    'IsomorphismResult',
]
