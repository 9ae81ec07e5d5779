"""
Vanishing trees assembled from stage insertions, and DOT renderings.
"""

from typing import Hashable, List, Optional, Sequence

import networkx as nx
import numpy as np

from models.an_types import CyclicInsertion, QuiverJ, TreeEdge, VanishingTree
from services.an.degenerations import JLike, degeneration
from services.an.insertions import insertion_graph, validate_insertion
from utils.errors import InsertionError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def vanishing_tree(
    n: int,
    J: JLike,
    insertions: Sequence[CyclicInsertion],
    orders: Optional[Sequence[Optional[Sequence[Hashable]]]] = None,
) -> VanishingTree:
    """
    Union of the stage incidence graphs, each carried to the final fiber by
    the later insertions. Edge labels run 1..n in S2 order across stages.
    """
    deg = degeneration(n, J)
    if len(insertions) != deg.m:
        raise InsertionError(f"J has {deg.m} circuits but {len(insertions)} insertions were given")
    orders = list(orders) if orders is not None else [None] * deg.m
    if len(orders) != deg.m:
        raise InsertionError(f"expected {deg.m} orders, got {len(orders)}")

    for i, (ins, expected) in enumerate(zip(insertions, deg.stage_sizes()), start=1):
        validate_insertion(ins)
        if ins.sizes != expected:
            raise InsertionError(f"stage {i}: insertion sizes {ins.sizes} do not match circuit sizes {expected}")
        if i > 1 and set(ins.s1) != set(insertions[i - 2].s3):
            raise InsertionError(f"stage {i}: S1 is not the fiber produced by stage {i - 1}")

    staged = []
    label = 0
    for i, (ins, order) in enumerate(zip(insertions, orders), start=1):
        for u, v in insertion_graph(ins, order):
            label += 1
            staged.append((u, v, label, i))

    def transport(x, stage):
        for later in insertions[stage:]:
            x = later.mapping()[x]
        return x

    edges = []
    for u, v, lab, stage in staged:
        a, b = transport(u, stage), transport(v, stage)
        edges.append(TreeEdge(min(a, b), max(a, b), lab, stage))
    tree = VanishingTree(vertices=tuple(sorted(insertions[-1].s3)), edges=tuple(edges))

    graph = nx.Graph()
    graph.add_nodes_from(tree.vertices)
    graph.add_edges_from((e.u, e.v) for e in tree.edges)
    if not nx.is_tree(graph):
        raise InsertionError(f"vanishing graph is not a tree: {sorted(graph.edges())}")
    logger.debug("vanishing_tree(n=%d): stage edge counts %s", n, tree.stage_counts())
    return tree


def tree_graph(tree: VanishingTree) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(tree.vertices)
    for e in tree.edges:
        graph.add_edge(e.u, e.v, label=e.label, stage=e.stage)
    return graph


def collection_order(tree: VanishingTree) -> List[int]:
    """
    Labels stage by stage with each stage read backwards. For trees of the
    "blocks" insertions this lines thimble a up with E_a of the quiver
    collection: the thimble the next stage hangs from comes last in its stage.
    """
    order: List[int] = []
    for stage in sorted({e.stage for e in tree.edges}):
        order.extend(sorted((e.label for e in tree.edges if e.stage == stage), reverse=True))
    return order


def tree_yoneda_dimensions(tree: VanishingTree, order: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    Hom dimensions between the thimbles of the tree: 1 on the diagonal and 1
    above it for each pair of edges sharing an endpoint. Thimbles follow
    ``order`` (edge labels), by default increasing label.
    """
    by_label = {e.label: e for e in tree.edges}
    order = sorted(by_label) if order is None else list(order)
    if sorted(order) != sorted(by_label):
        raise InsertionError(f"order must list every edge label once, got {order}")
    ordered = [by_label[label] for label in order]
    size = len(ordered)
    matrix = np.eye(size, dtype=int)
    for a in range(size):
        for b in range(a + 1, size):
            matrix[a, b] = len(ordered[a].pair & ordered[b].pair)
    return matrix


def tree_to_dot(tree: VanishingTree, name: str = "vanishing_tree") -> str:
    lines = [f"graph {name} {{"]
    for v in tree.vertices:
        lines.append(f'  {v} [label="{v}"];')
    for e in sorted(tree.edges, key=lambda e: e.label):
        lines.append(f'  {e.u} -- {e.v} [label="{e.label}", stage={e.stage}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_dot(quiver: QuiverJ, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(1, quiver.n + 1):
        lines.append(f'  {v} [label="{v}"];')
    for i in range(2, quiver.n + 1):
        tail, head = (i - 1, i) if quiver.o(i) == 1 else (i, i - 1)
        lines.append(f'  {tail} -> {head} [label="e{i}: {quiver.o(i):+d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
