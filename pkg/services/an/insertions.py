"""
Cyclic insertions sigma: S1 u S2 -> S3 and their incidence graphs.

Cyclic sequences are recorded clockwise; "counter-clockwise" is a step
toward the previous entry of the recorded sequence.
"""

from itertools import combinations, permutations
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from models.an_types import CyclicInsertion, DegenerationJ
from services.an.degenerations import JLike, degeneration
from utils.errors import InsertionError, ScopeError
from utils.logger import setup_logger

logger = setup_logger(__name__)

LAYOUTS = ("shuffle", "blocks")
MAX_INSERTION_SIZE = 8

Edge = Tuple[Hashable, Hashable]


def is_cyclic_subsequence(sub: Sequence[Hashable], cycle: Sequence[Hashable]) -> bool:
    """True when ``cycle`` restricted to the entries of ``sub`` is a rotation of ``sub``."""
    members = set(sub)
    restricted = [x for x in cycle if x in members]
    if sorted(map(repr, restricted)) != sorted(map(repr, sub)):
        return False
    if not sub:
        return True
    start = restricted.index(sub[0])
    return list(restricted[start:] + restricted[:start]) == list(sub)


def validate_insertion(ins: CyclicInsertion) -> CyclicInsertion:
    s1, s2, s3 = list(ins.s1), list(ins.s2), list(ins.s3)
    domain = s1 + s2
    if len(set(domain)) != len(domain):
        raise InsertionError(f"S1 and S2 must be disjoint without repeats: {domain}")
    if len(set(s3)) != len(s3):
        raise InsertionError(f"S3 has repeated entries: {s3}")
    if len(s3) != len(domain):
        raise InsertionError(f"|S3| = {len(s3)} but |S1| + |S2| = {len(domain)}")
    sigma = ins.mapping()
    if set(sigma) != set(domain) or len(ins.sigma) != len(domain):
        raise InsertionError("sigma must be defined exactly on S1 u S2")
    if set(sigma.values()) != set(s3):
        raise InsertionError("sigma is not a bijection onto S3")
    if not is_cyclic_subsequence([sigma[x] for x in s1], s3):
        raise InsertionError("sigma restricted to S1 does not preserve the cyclic order")
    return ins


def _ranking(ins: CyclicInsertion, order: Optional[Sequence[Hashable]]) -> Dict[Hashable, int]:
    if order is None:
        order = list(ins.s1) + list(ins.s2)
    order = list(order)
    if sorted(map(repr, order)) != sorted(map(repr, list(ins.s1) + list(ins.s2))):
        raise InsertionError("order must list every element of S1 u S2 once")
    rank = {x: i for i, x in enumerate(order)}
    s1 = set(ins.s1)
    if s1 and max(rank[x] for x in s1) > min((rank[x] for x in ins.s2), default=len(order)):
        raise InsertionError("order must put S1 before S2")
    if [x for x in order if x not in s1] != list(ins.s2):
        raise InsertionError("order must extend the total order of S2")
    return rank


def m_sigma(ins: CyclicInsertion, element: Hashable, order: Optional[Sequence[Hashable]] = None) -> Hashable:
    """
    The largest s' < element such that every point strictly inside the
    counter-clockwise interval from sigma(element) to sigma(s') has a larger
    preimage than element.
    """
    rank = _ranking(ins, order)
    inverse = ins.preimage()
    s3 = list(ins.s3)
    start = s3.index(ins.mapping()[element])
    for step in range(1, len(s3)):
        candidate = inverse[s3[(start - step) % len(s3)]]
        if rank[candidate] < rank[element]:
            return candidate
    raise InsertionError(f"no admissible m_sigma for {element!r}")


def insertion_graph(ins: CyclicInsertion, order: Optional[Sequence[Hashable]] = None) -> List[Edge]:
    """The incidence graph I_{sigma,<}: one edge (sigma(s), sigma(m_sigma(s))) per s in S2, in S2 order."""
    validate_insertion(ins)
    sigma = ins.mapping()
    return [(sigma[s], sigma[m_sigma(ins, s, order)]) for s in ins.s2]


def _shuffle(s1: Sequence[int], inserted: Sequence[int]) -> List[int]:
    slots: Dict[int, List[int]] = {j: [] for j in range(len(s1))}
    for t, x in enumerate(inserted):
        slots[t * len(s1) // len(inserted)].append(x)
    out: List[int] = []
    for j, x in enumerate(s1):
        out.append(x)
        out.extend(slots[j])
    return out


def canonical_insertions(n: int, J: JLike, layout: str = "shuffle") -> List[CyclicInsertion]:
    """
    sigma_i: F^{(i-1)} u {k_{i-1}+1, ..., k_i} -> F^{(i)} by inclusion, starting
    from F^{(0)} = (1).

    "shuffle" (the default) spreads each inserted block, in decreasing order,
    evenly between the points already present; this is what the fundamental
    radar screen produces, a perfect shuffle whenever the block is as large
    as the fiber. "blocks" appends the block in decreasing order after the
    fiber, the written cyclic order of the R(J) data.
    """
    if layout not in LAYOUTS:
        raise InsertionError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    deg: DegenerationJ = degeneration(n, J)
    fiber: List[int] = [1]
    result = []
    for i in range(1, deg.m + 1):
        block = deg.block(i)
        inserted = list(reversed(block))
        s3 = fiber + inserted if layout == "blocks" else _shuffle(fiber, inserted)
        ins = CyclicInsertion.build(fiber, block, s3, {x: x for x in list(fiber) + list(block)})
        result.append(validate_insertion(ins))
        fiber = s3
    return result


def all_insertions(s1: Sequence[Hashable], s2: Sequence[Hashable], s3: Sequence[Hashable]) -> List[CyclicInsertion]:
    """Every valid sigma onto the cyclic sequence s3."""
    total = len(s1) + len(s2)
    if len(s3) != total:
        raise InsertionError(f"|S3| = {len(s3)} but |S1| + |S2| = {total}")
    if total > MAX_INSERTION_SIZE:
        raise ScopeError(f"all_insertions is limited to |S3| <= {MAX_INSERTION_SIZE}")
    found = []
    rotations = range(len(s1)) if s1 else range(1)
    for positions in combinations(range(total), len(s1)):
        rest = [p for p in range(total) if p not in positions]
        for r in rotations:
            head = {s1[(r + j) % len(s1)]: s3[p] for j, p in enumerate(positions)}
            for perm in permutations(rest):
                sigma = dict(head)
                sigma.update({x: s3[p] for x, p in zip(s2, perm)})
                found.append(CyclicInsertion.build(s1, s2, s3, sigma))
    return found


def arrangement(ins: CyclicInsertion) -> Tuple[Hashable, ...]:
    """Preimages read clockwise around S3 starting from the image of the first S1 element."""
    inverse = ins.preimage()
    s3 = list(ins.s3)
    start = s3.index(ins.mapping()[ins.s1[0]])
    return tuple(inverse[x] for x in s3[start:] + s3[:start])


def insertion_shape(ins: CyclicInsertion) -> Tuple[int, ...]:
    """
    S3 read clockwise with S1 images as 0 and S2 images as their 1-based rank
    in S2, taken at the lexicographically least rotation. Two insertions
    with the same shape differ by relabelling and rotation only.
    """
    rank = {x: k + 1 for k, x in enumerate(ins.s2)}
    inverse = ins.preimage()
    ring = [rank.get(inverse[x], 0) for x in ins.s3]
    return min(tuple(ring[k:] + ring[:k]) for k in range(len(ring))) if ring else ()
