"""
Combinatorial isomorphism of polytopes through their vertex-facet incidence graphs.
"""

from dataclasses import dataclass
from typing import Dict, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from models.polytope import Polytope
from utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass
class IsomorphismResult:
    isomorphic: bool
    witness: Optional[Dict[int, int]] = None

    def __bool__(self) -> bool:
        return self.isomorphic


def incidence_graph(polytope: Polytope) -> nx.Graph:
    """Bipartite graph: ("v", i) -- ("f", j) whenever vertex i lies on facet j."""
    graph = nx.Graph()
    for i in range(polytope.n_vertices):
        graph.add_node(("v", i), kind="vertex")
    for j, facet in enumerate(polytope.facets):
        graph.add_node(("f", j), kind="facet")
        for i in facet.vertex_ids:
            graph.add_edge(("v", i), ("f", j))
    return graph


def combinatorially_isomorphic(p: Polytope, q: Polytope) -> IsomorphismResult:
    """
    Face lattices of polytopes are determined by vertex-facet incidences, so a
    kind-preserving isomorphism of the incidence graphs is a lattice isomorphism.
    The witness maps vertex ids of p to vertex ids of q.
    """
    if p.dim != q.dim or p.n_vertices != q.n_vertices or len(p.facets) != len(q.facets):
        return IsomorphismResult(False)
    if p is q or (p.vertices == q.vertices and p.facet_sets() == q.facet_sets()):
        return IsomorphismResult(True, {i: i for i in range(p.n_vertices)})
    if p.dim == 0:
        return IsomorphismResult(True, {0: 0})
    if p.f_vector() != q.f_vector():
        return IsomorphismResult(False)

    matcher = isomorphism.GraphMatcher(
        incidence_graph(p),
        incidence_graph(q),
        node_match=isomorphism.categorical_node_match("kind", None),
    )
    if not matcher.is_isomorphic():
        return IsomorphismResult(False)
    witness = {a[1]: b[1] for a, b in matcher.mapping.items() if a[0] == "v"}
    logger.debug("combinatorially_isomorphic: %d vertices matched", len(witness))
    return IsomorphismResult(True, dict(sorted(witness.items())))
