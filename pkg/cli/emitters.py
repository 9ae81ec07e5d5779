"""
Artifact writers: JSON, DOT and OFF.
"""

import json
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import click
import networkx as nx

from models.polytope import Polytope
from services.geometry.linalg import affine_hull, subtract
from utils.errors import InputError

OFF_MAX_DIM = 3


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def graph_to_dot(graph: nx.Graph, name: str) -> str:
    lines = [f"graph {name} {{"]
    for node in sorted(graph.nodes):
        lines.append(f"  {node};")
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cycle(face: FrozenSet[int], edges: Iterable[Tuple[int, int]]) -> List[int]:
    """Vertices of a polygon face in boundary order, starting at the smallest id."""
    neighbours: Dict[int, List[int]] = {v: [] for v in face}
    for u, v in edges:
        if u in face and v in face:
            neighbours[u].append(v)
            neighbours[v].append(u)
    start = min(face)
    order = [start]
    previous, current = None, start
    while True:
        options = sorted(x for x in neighbours[current] if x != previous)
        nxt = options[0] if options else start
        if nxt == start:
            break
        order.append(nxt)
        previous, current = current, nxt
    return order


def polytope_to_off(polytope: Polytope) -> str:
    """
    OFF rendering of a polytope of dimension <= 3, in coordinates of its
    affine hull read off at the pivot columns.
    """
    if polytope.dim > OFF_MAX_DIM:
        raise InputError(f"OFF export needs dimension <= {OFF_MAX_DIM}, polytope has dimension {polytope.dim}")
    span = affine_hull(list(polytope.vertices))
    coords = []
    for v in polytope.vertices:
        d = subtract(v, span.base)
        local = [float(d[p]) for p in span.pivots]
        coords.append(local + [0.0] * (3 - len(local)))

    faces: List[List[int]] = []
    if polytope.dim >= 2:
        lattice = polytope.face_lattice()
        edges = lattice.edges()
        for face in lattice.faces(2):
            faces.append(_cycle(face, edges))

    lines = ["OFF", f"{len(coords)} {len(faces)} 0"]
    lines += [" ".join(f"{x:.12g}" for x in c) for c in coords]
    lines += [" ".join(str(x) for x in [len(f)] + f) for f in faces]
    return "\n".join(lines) + "\n"


def emit(text: str, output: Optional[Path] = None) -> None:
    """Write to ``output`` when given, otherwise to stdout."""
    if output is None:
        click.echo(text, nl=False)
        return
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text)
