"""
Data models for the A_n layer: degenerations, cyclic insertions, vanishing trees, quivers.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Tuple

from utils.errors import DegenerationError


@dataclass(frozen=True)
class DegenerationJ:
    """
    Maximal degeneration of the interval {0, ..., n+1}: breakpoints
    1 = k_0 < k_1 < ... < k_m = n+1. The point 0 is implicit.
    """
    n: int
    breakpoints: Tuple[int, ...]

    def __post_init__(self):
        ks = self.breakpoints
        if self.n < 1:
            raise DegenerationError(f"n must be >= 1, got {self.n}")
        if len(ks) < 2 or ks[0] != 1 or ks[-1] != self.n + 1:
            raise DegenerationError(f"breakpoints must run from 1 to {self.n + 1}: {list(ks)}")
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise DegenerationError(f"breakpoints must be strictly increasing: {list(ks)}")

    @classmethod
    def of(cls, n: int, values: Iterable[int]) -> "DegenerationJ":
        """Accepts interior breakpoints, or a full J; 0, 1 and n+1 are added when missing."""
        chosen = set()
        for v in values:
            v = int(v)
            if v < 0 or v > n + 1:
                raise DegenerationError(f"breakpoint {v} outside [0, {n + 1}]")
            if v != 0:
                chosen.add(v)
        chosen |= {1, n + 1}
        return cls(n=n, breakpoints=tuple(sorted(chosen)))

    @property
    def m(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.breakpoints[1:-1]

    def block(self, i: int) -> Tuple[int, ...]:
        """Fiber labels inserted at stage i (1-based): k_{i-1}+1, ..., k_i."""
        lo, hi = self.breakpoints[i - 1], self.breakpoints[i]
        return tuple(range(lo + 1, hi + 1))

    def stage_sizes(self) -> List[Tuple[int, int]]:
        """(|S1|, |S2|) per stage."""
        return [(self.breakpoints[i - 1], self.breakpoints[i] - self.breakpoints[i - 1])
                for i in range(1, self.m + 1)]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "J": [0] + list(self.breakpoints)}


@dataclass(frozen=True)
class CyclicInsertion:
    """
    sigma: S1 u S2 -> S3. ``s1`` and ``s3`` are cyclic sequences recorded
    clockwise; ``s2`` is totally ordered; ``sigma`` is stored as sorted pairs.
    """
    s1: Tuple[Hashable, ...]
    s2: Tuple[Hashable, ...]
    s3: Tuple[Hashable, ...]
    sigma: Tuple[Tuple[Hashable, Hashable], ...]

    @classmethod
    def build(cls, s1, s2, s3, sigma: Mapping) -> "CyclicInsertion":
        return cls(tuple(s1), tuple(s2), tuple(s3), tuple(sorted(sigma.items(), key=repr)))

    def mapping(self) -> Dict[Hashable, Hashable]:
        return dict(self.sigma)

    def preimage(self) -> Dict[Hashable, Hashable]:
        return {b: a for a, b in self.sigma}

    @property
    def sizes(self) -> Tuple[int, int]:
        return len(self.s1), len(self.s2)

    def to_dict(self) -> Dict[str, Any]:
        m = self.mapping()
        return {
            "S1": list(self.s1),
            "S2": list(self.s2),
            "S3": list(self.s3),
            "sigma": [[x, m[x]] for x in list(self.s1) + list(self.s2)],
        }


@dataclass(frozen=True, order=True)
class TreeEdge:
    u: int
    v: int
    label: int
    stage: int

    @property
    def pair(self) -> FrozenSet[int]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class VanishingTree:
    vertices: Tuple[int, ...]
    edges: Tuple[TreeEdge, ...] = field(default=())

    def edge_set(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(e.pair for e in self.edges)

    def stage_counts(self) -> List[int]:
        stages = sorted({e.stage for e in self.edges})
        return [sum(1 for e in self.edges if e.stage == s) for s in stages]

    def relabel(self, mapping: Mapping[int, int]) -> "VanishingTree":
        return VanishingTree(
            vertices=tuple(sorted(mapping[v] for v in self.vertices)),
            edges=tuple(TreeEdge(mapping[e.u], mapping[e.v], e.label, e.stage) for e in self.edges),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": [{"pair": [e.u, e.v], "label": e.label, "stage": e.stage} for e in self.edges],
        }


@dataclass(frozen=True)
class QuiverJ:
    """A_n quiver on vertices 1..n; edge e_i joins i-1 and i, o(e_i) = +1 means i-1 -> i."""
    n: int
    orientations: Tuple[int, ...]  # o(e_2), ..., o(e_n)

    def o(self, i: int) -> int:
        """Orientation of e_i, with o(e_{n+1}) = +1."""
        if i == self.n + 1:
            return 1
        if not 2 <= i <= self.n:
            raise DegenerationError(f"quiver A_{self.n} has no edge e_{i}")
        return self.orientations[i - 2]

    def arrows(self) -> List[Tuple[int, int]]:
        result = []
        for i in range(2, self.n + 1):
            result.append((i - 1, i) if self.o(i) == 1 else (i, i - 1))
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "orientations": {f"e{i}": self.o(i) for i in range(2, self.n + 1)},
            "arrows": [list(a) for a in self.arrows()],
        }
