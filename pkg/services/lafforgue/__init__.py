"""
Lafforgue polytopes and the A_n facet matrix.
"""

from services.lafforgue.facets import (
    lafforgue_polytope,
    standard_simplex,
    pointed_subdivision,
    an_xi_matrix,
    an_pointed_facet_labels,
    gamma_coordinates,
    match_xi_columns,
    column_kind,
    FacetLabel,
)

__all__ = [
    'lafforgue_polytope',
    'standard_simplex',
    'pointed_subdivision',
    'an_xi_matrix',
    'an_pointed_facet_labels',
    'gamma_coordinates',
    'match_xi_columns',
    'column_kind',
    'FacetLabel',
]
