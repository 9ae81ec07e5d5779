"""
Floating-point monodromy of regenerated A_n pencils.
"""

from services.monodromy.heights import height_from_J, expected_subdivision
from services.monodromy.critical import critical_data, polish_roots, fiber
from services.monodromy.radar import (
    radar_screen,
    staircase,
    phantom_path,
    norm_order,
    lift,
    polylines_cross,
)
from services.monodromy.tracking import track_fiber, match_fibers, TrackResult
from services.monodromy.lab import (
    RegenerationLab,
    StageInsertion,
    draw_coefficients,
    numeric_insertion,
    numeric_vanishing_tree,
    split_at,
)
from services.monodromy.verify import (
    verify_theorem,
    surjectivity_sweep,
    insertion_classes,
    trees_match,
    TheoremReport,
    TrialReport,
    SurjectivityReport,
)
from services.monodromy.contours import contour_census, critical_modulus, census_pair

__all__ = [
    'height_from_J',
    'expected_subdivision',
    'critical_data',
    'polish_roots',
    'fiber',
    'radar_screen',
    'staircase',
    'phantom_path',
    'norm_order',
    'lift',
    'polylines_cross',
    'track_fiber',
    'match_fibers',
    'TrackResult',
    'RegenerationLab',
    'StageInsertion',
    'draw_coefficients',
    'numeric_insertion',
    'numeric_vanishing_tree',
    'split_at',
    'verify_theorem',
    'surjectivity_sweep',
    'insertion_classes',
    'trees_match',
    'TheoremReport',
    'TrialReport',
    'SurjectivityReport',
    'contour_census',
    'critical_modulus',
    'census_pair',
]
