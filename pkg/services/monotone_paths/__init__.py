"""
Monotone edge paths and monotone path polytopes.
"""

from services.monotone_paths.paths import (
    sharpening_functional,
    monotone_edge_paths,
    path_point,
    monotone_path_polytope,
    MonotonePathPolytope,
    associahedron_facets,
    AssociahedronFacet,
)

__all__ = [
    'sharpening_functional',
    'monotone_edge_paths',
    'path_point',
    'monotone_path_polytope',
    'MonotonePathPolytope',
    'associahedron_facets',
    'AssociahedronFacet',
]
