"""
The A_n layer: degenerations, cyclic insertions, vanishing trees, quivers and Ext data.
"""

from services.an.degenerations import (
    degeneration,
    path_subsets,
    path_from_J,
    circuits,
    quiver_from_J,
    perversity,
)
from services.an.insertions import (
    validate_insertion,
    m_sigma,
    insertion_graph,
    canonical_insertions,
    all_insertions,
    arrangement,
    insertion_shape,
    is_cyclic_subsequence,
)
from services.an.trees import (
    vanishing_tree,
    tree_graph,
    collection_order,
    tree_yoneda_dimensions,
    tree_to_dot,
    quiver_to_dot,
)
from services.an.yoneda import (
    exceptional_collection,
    ext_dimensions,
    yoneda_graded,
    yoneda_dimensions,
    is_strong,
)

__all__ = [
    'degeneration',
    'path_subsets',
    'path_from_J',
    'circuits',
    'quiver_from_J',
    'perversity',
    'validate_insertion',
    'm_sigma',
    'insertion_graph',
    'canonical_insertions',
    'all_insertions',
    'arrangement',
    'insertion_shape',
    'is_cyclic_subsequence',
    'vanishing_tree',
    'tree_graph',
    'collection_order',
    'tree_yoneda_dimensions',
    'tree_to_dot',
    'quiver_to_dot',
    'exceptional_collection',
    'ext_dimensions',
    'yoneda_graded',
    'yoneda_dimensions',
    'is_strong',
]
