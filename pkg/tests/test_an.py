"""
Unit tests for the A_n layer: degenerations, cyclic insertions, trees, quivers and Ext data.
"""

from itertools import combinations

import numpy as np
import pytest

from models.an_types import CyclicInsertion, DegenerationJ
from services.an import (
    all_insertions,
    arrangement,
    canonical_insertions,
    circuits,
    collection_order,
    degeneration,
    exceptional_collection,
    insertion_graph,
    insertion_shape,
    is_cyclic_subsequence,
    is_strong,
    m_sigma,
    path_subsets,
    perversity,
    quiver_from_J,
    quiver_to_dot,
    tree_graph,
    tree_to_dot,
    tree_yoneda_dimensions,
    validate_insertion,
    vanishing_tree,
    yoneda_dimensions,
    yoneda_graded,
)
from utils.errors import DegenerationError, InsertionError, ScopeError

FIGURE_TREE = {
    (1, 2, 1, 1),
    (2, 3, 2, 2),
    (1, 4, 3, 2),
    (3, 5, 4, 3),
    (2, 6, 5, 3),
    (4, 7, 6, 3),
    (1, 8, 7, 3),
}

RJ_TREE = {
    (1, 2, 1, 1),
    (2, 3, 2, 2),
    (2, 4, 3, 2),
    (3, 5, 4, 3),
    (3, 6, 5, 3),
    (3, 7, 6, 3),
    (3, 8, 7, 3),
}


def _all_J(n):
    interior = range(2, n + 1)
    return [J for size in range(n) for J in combinations(interior, size)]


def _block_yoneda(n, J):
    """1 on and above the diagonal within a quiver block, and from each block's last vertex to the next block."""
    reversed_edges = set(J)
    block, current = {}, 0
    for i in range(1, n + 1):
        current += i in reversed_edges
        block[i] = current
    matrix = np.eye(n, dtype=int)
    for i in range(1, n + 1):
        last = i == n or (i + 1) in reversed_edges
        for j in range(i + 1, n + 1):
            if block[j] == block[i] or (last and block[j] == block[i] + 1):
                matrix[i - 1, j - 1] = 1
    return matrix


def test_degeneration_breakpoints():
    deg = degeneration(7, [2, 4])
    assert deg.breakpoints == (1, 2, 4, 8)
    assert deg.m == 3
    assert deg.interior == (2, 4)
    assert deg.stage_sizes() == [(1, 1), (2, 2), (4, 4)]
    assert deg.block(3) == (5, 6, 7, 8)
    assert degeneration(7, [0, 1, 2, 4, 8]) == deg
    assert deg.to_dict() == {"n": 7, "J": [0, 1, 2, 4, 8]}


def test_degeneration_rejects_bad_breakpoints():
    with pytest.raises(DegenerationError):
        degeneration(3, [5])
    with pytest.raises(DegenerationError):
        DegenerationJ(n=2, breakpoints=(2, 3))
    with pytest.raises(DegenerationError):
        degeneration(2, DegenerationJ.of(3, []))


def test_path_subsets_and_circuits():
    assert path_subsets(7, [2, 4]) == [(1, 2, 4), (2, 4), (4,), ()]
    assert circuits(7, [2, 4]) == [(0, 1, 2), (0, 2, 4), (0, 4, 8)]
    assert circuits(3, []) == [(0, 1, 4)]


def test_quiver_orientations():
    quiver = quiver_from_J(3, [2])
    assert (quiver.o(2), quiver.o(3), quiver.o(4)) == (-1, 1, 1)
    assert quiver.arrows() == [(2, 1), (2, 3)]
    assert set(quiver_from_J(4, []).orientations) == {1}
    assert set(quiver_from_J(4, [2, 3, 4]).orientations) == {-1}
    with pytest.raises(DegenerationError):
        quiver.o(1)
    assert '2 -> 1 [label="e2: -1"];' in quiver_to_dot(quiver)


def test_perversity():
    assert perversity(4, []) == (0, 0, 0, 0)
    assert perversity(3, [2]) == (1, 1, 1)
    assert perversity(3, [2, 3]) == (1, 2, 2)
    assert perversity(5, [2, 3, 4, 5])[:4] == (1, 2, 3, 4)


def test_cyclic_subsequence():
    assert is_cyclic_subsequence([3, 1], [1, 2, 3])
    assert is_cyclic_subsequence([], [1, 2])
    assert not is_cyclic_subsequence([1, 3, 2], [1, 2, 3])


def test_validation_rejects_order_reversal():
    ins = CyclicInsertion.build(("a", "b", "c"), ("s",), (0, 1, 2, 3), {"a": 0, "b": 2, "c": 1, "s": 3})
    with pytest.raises(InsertionError):
        validate_insertion(ins)
    short = CyclicInsertion.build(("a",), ("s",), (0, 1, 2), {"a": 0, "s": 1})
    with pytest.raises(InsertionError):
        validate_insertion(short)


def test_single_point_insertion_gives_one_edge():
    ins = CyclicInsertion.build(("f",), ("s",), (0, 1), {"f": 0, "s": 1})
    assert insertion_graph(ins) == [(1, 0)]


def test_alternating_insertion_connects_to_counter_clockwise_neighbours():
    ins = CyclicInsertion.build(("a", "b"), ("s1", "s2"), (0, 1, 2, 3), {"a": 0, "s1": 1, "b": 2, "s2": 3})
    assert insertion_graph(ins) == [(1, 0), (3, 2)]
    assert m_sigma(ins, "s2") == "b"


def test_adjacent_insertions_follow_the_order():
    ascending = CyclicInsertion.build(("a", "b"), ("s1", "s2"), (0, 1, 2, 3), {"a": 0, "s1": 1, "s2": 2, "b": 3})
    assert insertion_graph(ascending) == [(1, 0), (2, 1)]
    descending = CyclicInsertion.build(("a", "b"), ("s1", "s2"), (0, 1, 2, 3), {"a": 0, "s2": 1, "s1": 2, "b": 3})
    assert insertion_graph(descending) == [(2, 0), (1, 0)]


def test_order_must_extend_s2():
    ins = CyclicInsertion.build(("a",), ("s1", "s2"), (0, 1, 2), {"a": 0, "s1": 1, "s2": 2})
    with pytest.raises(InsertionError):
        m_sigma(ins, "s1", order=["a", "s2", "s1"])
    with pytest.raises(InsertionError):
        m_sigma(ins, "s1", order=["s1", "a", "s2"])


def test_canonical_insertions_for_exponential_J():
    insertions = canonical_insertions(7, [2, 4])
    assert [ins.sizes for ins in insertions] == [(1, 1), (2, 2), (4, 4)]
    assert insertions[1].s3 == (1, 4, 2, 3)
    assert insertions[2].s3 == (1, 8, 4, 7, 2, 6, 3, 5)
    assert arrangement(insertions[1]) == (1, 4, 2, 3)
    for ins in insertions:
        validate_insertion(ins)


def test_blocks_layout_follows_the_written_order():
    insertions = canonical_insertions(7, [2, 4], layout="blocks")
    assert insertions[1].s3 == (1, 2, 4, 3)
    assert insertions[2].s3 == (1, 2, 4, 3, 8, 7, 6, 5)
    for ins in insertions:
        validate_insertion(ins)


def test_canonical_insertions_for_single_and_full_J():
    (single,) = canonical_insertions(4, [])
    assert single.s1 == (1,)
    assert single.s2 == (2, 3, 4, 5)
    full = canonical_insertions(4, [2, 3, 4])
    assert [ins.sizes for ins in full] == [(1, 1), (2, 1), (3, 1), (4, 1)]
    with pytest.raises(InsertionError):
        canonical_insertions(4, [], layout="spiral")


@pytest.mark.parametrize("n,J", [(3, [2]), (7, [2, 4]), (15, [2, 4, 8])])
def test_default_insertions_are_perfect_shuffles_for_exponential_J(n, J):
    for ins in canonical_insertions(n, J):
        validate_insertion(ins)
        if len(ins.s1) == len(ins.s2):
            s2 = set(ins.s2)
            ring = list(ins.s3)
            assert not any(a in s2 and b in s2 for a, b in zip(ring, ring[1:] + ring[:1]))


def test_insertion_shape_ignores_labels_and_rotation():
    stage = canonical_insertions(7, [2, 4])[2]
    assert insertion_shape(stage) == (0, 1, 0, 4, 0, 3, 0, 2)
    relabelled = CyclicInsertion.build(
        (0, 2, 4, 6), (5, 3, 1, 7), tuple(range(8)), {x: x for x in range(8)}
    )
    assert insertion_shape(relabelled) == insertion_shape(stage)
    blocks = canonical_insertions(7, [2, 4], layout="blocks")[2]
    assert insertion_shape(blocks) != insertion_shape(stage)


def test_vanishing_tree_for_exponential_J():
    tree = vanishing_tree(7, [2, 4], canonical_insertions(7, [2, 4]))
    assert tree.vertices == tuple(range(1, 9))
    assert tree.stage_counts() == [1, 2, 4]
    assert {(e.u, e.v, e.label, e.stage) for e in tree.edges} == FIGURE_TREE
    dot = tree_to_dot(tree)
    assert dot.startswith("graph vanishing_tree {")
    assert '  1 -- 8 [label="7", stage=3];' in dot


def test_vanishing_tree_of_the_written_order():
    tree = vanishing_tree(7, [2, 4], canonical_insertions(7, [2, 4], layout="blocks"))
    assert tree.stage_counts() == [1, 2, 4]
    assert {(e.u, e.v, e.label, e.stage) for e in tree.edges} == RJ_TREE


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vanishing_trees_are_spanning_trees(n):
    for J in _all_J(n):
        deg = degeneration(n, J)
        for layout in ("shuffle", "blocks"):
            tree = vanishing_tree(n, J, canonical_insertions(n, J, layout=layout))
            graph = tree_graph(tree)
            assert graph.number_of_nodes() == n + 1
            assert graph.number_of_edges() == n
            sizes = [b for _, b in deg.stage_sizes()]
            assert tree.stage_counts() == sizes


def test_single_circuit_tree_is_a_star():
    for layout in ("shuffle", "blocks"):
        tree = vanishing_tree(3, [], canonical_insertions(3, [], layout=layout))
        assert {e.pair for e in tree.edges} == {frozenset({1, k}) for k in (2, 3, 4)}


def test_vanishing_tree_rejects_mismatched_stages():
    insertions = canonical_insertions(7, [2, 4])
    with pytest.raises(InsertionError):
        vanishing_tree(7, [2, 4], insertions[:2])
    with pytest.raises(InsertionError):
        vanishing_tree(7, [4], canonical_insertions(7, [2, 4])[:2])


def test_all_insertions_of_a_single_circuit():
    found = all_insertions(("f",), (1, 2), (0, 1, 2))
    assert len(found) == 6
    assert len({arrangement(ins) for ins in found}) == 2
    with pytest.raises(ScopeError):
        all_insertions(("f",), tuple(range(1, 9)), tuple(range(9)))


def test_yoneda_of_two_vertices():
    matrix = yoneda_dimensions(2, [])
    assert matrix.tolist() == [[1, 1], [0, 1]]
    assert int(matrix.sum()) == 3
    assert is_strong(2, [])
    assert is_strong(2, [2])
    assert yoneda_graded(2, [2])[(1, 2)] == {0: 1}
    assert yoneda_graded(2, [2])[(2, 1)] == {}
    assert yoneda_dimensions(2, [2]).tolist() == [[1, 1], [0, 1]]


def test_yoneda_across_a_reversed_edge():
    assert yoneda_dimensions(3, [3]).tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert yoneda_graded(3, [3])[(2, 3)] == {0: 1}
    assert yoneda_dimensions(3, [2]).tolist() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_exceptional_collection_shapes():
    collection = exceptional_collection(3, [2])
    assert collection[0].terms == ((-1, 2), (0, 1))
    assert collection[0].differential == ((0, 1, 1),)
    assert collection[1].terms == ((-1, 2),)
    assert collection[2].terms == ((-1, 3),)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_collections_are_strong_and_unitriangular(n):
    for J in _all_J(n):
        assert is_strong(n, J), J
        matrix = yoneda_dimensions(n, J)
        assert np.all(np.diag(matrix) == 1)
        assert np.all(np.tril(matrix, -1) == 0)
        assert matrix.tolist() == _block_yoneda(n, J).tolist()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_written_order_trees_reproduce_the_yoneda_matrix(n):
    for J in _all_J(n):
        tree = vanishing_tree(n, J, canonical_insertions(n, J, layout="blocks"))
        thimbles = tree_yoneda_dimensions(tree, collection_order(tree))
        assert thimbles.tolist() == yoneda_dimensions(n, J).tolist(), J


def test_collection_order_reverses_each_stage():
    tree = vanishing_tree(3, [3], canonical_insertions(3, [3], layout="blocks"))
    assert collection_order(tree) == [2, 1, 3]
    assert tree_yoneda_dimensions(tree).tolist() == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(InsertionError):
        tree_yoneda_dimensions(tree, [1, 2])


def test_tree_hom_dimensions():
    star = vanishing_tree(3, [], canonical_insertions(3, []))
    assert int(tree_yoneda_dimensions(star).sum()) == 6
    path = vanishing_tree(3, [2, 3], canonical_insertions(3, [2, 3], layout="blocks"))
    assert int(tree_yoneda_dimensions(path).sum()) == 5


def test_yoneda_scope():
    with pytest.raises(ScopeError):
        yoneda_dimensions(7, [])
