"""
Data models for exact polytopes, their face lattices and normal fans.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from models.rational import Vector, dot, format_rat, format_vector


@dataclass(frozen=True)
class Facet:
    """Facet inequality <normal, x> <= offset and the vertices attaining equality."""
    normal: Vector
    offset: Fraction
    vertex_ids: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "normal": format_vector(self.normal),
            "offset": format_rat(self.offset),
        }


@dataclass(frozen=True)
class FaceLattice:
    """Graded poset of faces, each face stored as its frozenset of vertex ids."""
    dim: int
    faces_by_dim: Dict[int, Tuple[FrozenSet[int], ...]]

    @classmethod
    def from_incidences(cls, n_vertices: int, facet_sets: Sequence[FrozenSet[int]], dim: int) -> "FaceLattice":
        """
        Build the lattice top-down: the facets of a face G are the maximal
        proper intersections of G with facets of the polytope.
        """
        top = frozenset(range(n_vertices))
        levels: Dict[int, Tuple[FrozenSet[int], ...]] = {dim: (top,)}
        current: Tuple[FrozenSet[int], ...] = (top,)
        for rank in range(dim, 0, -1):
            found = set()
            for face in current:
                candidates = {face & f for f in facet_sets if not face <= f}
                candidates.discard(frozenset())
                for c in candidates:
                    if not any(c < other for other in candidates):
                        found.add(c)
            current = tuple(sorted(found, key=sorted))
            levels[rank - 1] = current
        levels[-1] = (frozenset(),)
        return cls(dim=dim, faces_by_dim=levels)

    def faces(self, dim: int) -> Tuple[FrozenSet[int], ...]:
        return self.faces_by_dim.get(dim, ())

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces_by_dim[i]) for i in range(0, self.dim))

    def euler_holds(self) -> bool:
        """sum_{i<d} (-1)^i f_i == 1 - (-1)^d."""
        total = sum((-1) ** i * f for i, f in enumerate(self.f_vector()))
        return total == 1 - (-1) ** self.dim

    def edges(self) -> List[Tuple[int, int]]:
        return [tuple(sorted(e)) for e in self.faces(1)]

    def cover_pairs(self) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
        """Covering relations (G, H) with G a facet of H."""
        pairs = []
        for rank in range(0, self.dim + 1):
            for upper in self.faces(rank):
                for lower in self.faces(rank - 1):
                    if lower < upper:
                        pairs.append((lower, upper))
        return pairs


@dataclass(eq=False)
class Polytope:
    """
    Exact V/H description of a polytope.

    ``equations`` cut out the affine hull; facet normals are primitive integer
    vectors lying in the direction space of that hull. ``boundary`` is the
    simplicial boundary left by the hull construction (used for volumes).
    """
    ambient_dim: int
    dim: int
    vertices: Tuple[Vector, ...]
    facets: Tuple[Facet, ...]
    equations: Tuple[Tuple[Vector, Fraction], ...] = ()
    boundary: Tuple[Tuple[Vector, ...], ...] = ()
    _lattice: Optional[FaceLattice] = field(default=None, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, point: Sequence[Fraction]) -> Optional[int]:
        target = tuple(Fraction(x) for x in point)
        for i, v in enumerate(self.vertices):
            if v == target:
                return i
        return None

    def facet_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(f.vertex_ids) for f in self.facets]

    def contains(self, point: Sequence[Fraction]) -> bool:
        for normal, value in self.equations:
            if dot(normal, point) != value:
                return False
        return all(dot(f.normal, point) <= f.offset for f in self.facets)

    def face_lattice(self) -> FaceLattice:
        """Lazily computed and cached; initialization happens once under a lock."""
        if self._lattice is None:
            with self._lock:
                if self._lattice is None:
                    self._lattice = self._build_lattice()
        return self._lattice

    def _build_lattice(self) -> FaceLattice:
        if self.dim == 0:
            return FaceLattice(dim=0, faces_by_dim={0: (frozenset({0}),), -1: (frozenset(),)})
        return FaceLattice.from_incidences(self.n_vertices, self.facet_sets(), self.dim)

    def f_vector(self) -> Tuple[int, ...]:
        return self.face_lattice().f_vector()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "vertices": [format_vector(v) for v in self.vertices],
            "facets": [f.to_dict() for f in self.facets],
        }


@dataclass(frozen=True)
class Fan:
    """
    Normal fan in the inner-normal convention.

    ``cones`` lists one cone per nonempty face (ray-index sets), ``maximal_cones``
    maps each vertex id to its full-dimensional cone.
    """
    lattice_rank: int
    rays: Tuple[Tuple[int, ...], ...]
    cones: Tuple[FrozenSet[int], ...]
    maximal_cones: Dict[int, FrozenSet[int]]

    def ray_index(self, ray: Sequence[int]) -> Optional[int]:
        target = tuple(int(x) for x in ray)
        for i, r in enumerate(self.rays):
            if r == target:
                return i
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lattice_rank": self.lattice_rank,
            "rays": [list(r) for r in self.rays],
            "cones": [sorted(c) for c in self.cones],
        }
