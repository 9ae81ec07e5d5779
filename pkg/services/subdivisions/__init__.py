"""
Point configurations, regular subdivisions, flips and secondary polytopes.
"""

from services.subdivisions.configurations import (
    build_configuration,
    configuration_from_dict,
    load_configuration,
    interval_configuration,
)
from services.subdivisions.heights import (
    subdivision_from_height,
    is_regular,
    refines,
    RegularityResult,
)
from services.subdivisions.secondary import (
    gkz_vector,
    placing_triangulation,
    flips,
    enumerate_regular_triangulations,
    secondary_polytope,
    flip_graph,
    face_subdivision,
    triangulation_for_K,
    interval_gkz,
    interval_secondary_rays,
    root_coordinates,
    subset_of,
)

__all__ = [
    'build_configuration',
    'configuration_from_dict',
    'load_configuration',
    'interval_configuration',
    'subdivision_from_height',
    'is_regular',
    'refines',
    'RegularityResult',
    'gkz_vector',
    'placing_triangulation',
    'flips',
    'enumerate_regular_triangulations',
    'secondary_polytope',
    'flip_graph',
    'face_subdivision',
    'triangulation_for_K',
    'interval_gkz',
    'interval_secondary_rays',
    'root_coordinates',
    'subset_of',
]
