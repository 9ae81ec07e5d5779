"""
Data models for polytopes, configurations, paths, A_n data and monodromy.
"""

from models.rational import Rat, Vector, to_rat, to_vector, format_rat, format_vector, parse_vector
from models.polytope import Facet, FaceLattice, Polytope, Fan
from models.configuration import (
    PointConfiguration,
    Cell,
    Subdivision,
    Triangulation,
    PointedSubdivision,
    XiMatrix,
)
from models.paths import LinearFunctional, MonotonePath
from models.an_types import DegenerationJ, CyclicInsertion, TreeEdge, VanishingTree, QuiverJ
from models.monodromy import HeightFunction, RegenerationFamily, RadarScreen
from models.run_config import RunConfig

__all__ = [
    'Rat',
    'Vector',
    'to_rat',
    'to_vector',
    'format_rat',
    'format_vector',
    'parse_vector',
    'Facet',
    'FaceLattice',
    'Polytope',
    'Fan',
    'PointConfiguration',
    'Cell',
    'Subdivision',
    'Triangulation',
    'PointedSubdivision',
    'XiMatrix',
    'LinearFunctional',
    'MonotonePath',
    'DegenerationJ',
    'CyclicInsertion',
    'TreeEdge',
    'VanishingTree',
    'QuiverJ',
    'HeightFunction',
    'RegenerationFamily',
    'RadarScreen',
    'RunConfig',
]
