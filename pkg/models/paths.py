"""
Linear functionals and monotone edge paths.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from models.rational import RatLike, Vector, dot, format_rat, format_vector, to_vector


@dataclass(frozen=True)
class LinearFunctional:
    coefficients: Vector

    @classmethod
    def of(cls, coefficients: Sequence[RatLike]) -> "LinearFunctional":
        return cls(coefficients=to_vector(coefficients))

    def __call__(self, point: Sequence[Fraction]) -> Fraction:
        return dot(self.coefficients, point)

    def to_dict(self) -> Dict[str, Any]:
        return {"coefficients": format_vector(self.coefficients)}


@dataclass(frozen=True)
class MonotonePath:
    """A strictly gamma-increasing edge path, from a minimizing to a maximizing vertex."""
    vertex_sequence: Tuple[int, ...]
    fiber_point: Optional[Vector] = None
    coherent: bool = False

    def __len__(self) -> int:
        return len(self.vertex_sequence)

    def steps(self):
        return list(zip(self.vertex_sequence, self.vertex_sequence[1:]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertex_sequence),
            "coherent": self.coherent,
            "point": format_vector(self.fiber_point) if self.fiber_point is not None else None,
        }


def gamma_range(values: Sequence[Fraction]) -> Dict[str, str]:
    return {"min": format_rat(min(values)), "max": format_rat(max(values))}
