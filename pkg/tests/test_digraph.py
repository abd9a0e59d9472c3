"""Digraphs, acyclicity, enumeration, and super-terminal counts."""

from math import comb

import pytest

from imsetpoly.digraph import (
    DirectedGraph,
    enumerate_dags,
    enumerate_digraphs,
    is_acyclic,
    super_terminal_count,
)
from imsetpoly.setfam import GroundSet, bits_of, p2_masks


def dfs_acyclic(g: DirectedGraph) -> bool:
    """Independent oracle: depth-first search for a back edge over the
    parent-to-child arrows."""
    n = g.ground.n
    children = [[] for _ in range(n)]
    for i, p in enumerate(g.parents):
        for j in bits_of(p):
            children[j].append(i)
    state = [0] * n  # 0 new, 1 on stack, 2 done

    def visit(v: int) -> bool:
        state[v] = 1
        for w in children[v]:
            if state[w] == 1:
                return False
            if state[w] == 0 and not visit(w):
                return False
        state[v] = 2
        return True

    return all(state[v] == 2 or visit(v) for v in range(n))


def robinson_counts(limit: int) -> list[int]:
    """Labelled-DAG counting recurrence, an oracle independent of any
    graph enumeration."""
    a = [1]
    for n in range(1, limit + 1):
        total = 0
        for k in range(1, n + 1):
            total += (-1) ** (k + 1) * comb(n, k) * 2 ** (k * (n - k)) * a[n - k]
        a.append(total)
    return a


def test_from_edges_and_json_round_trip():
    g = GroundSet.of_size(3)
    graph = DirectedGraph.from_edges(g, [("a", "b"), ("b", "a"), ("c", "b")])
    assert graph.parents == (2, 5, 0)
    assert sorted(graph.edges()) == [("a", "b"), ("b", "a"), ("c", "b")]
    assert DirectedGraph.from_json_dict(graph.to_json_dict()) == graph
    with pytest.raises(ValueError):
        DirectedGraph.from_edges(g, [("a", "a")])
    with pytest.raises(ValueError):
        DirectedGraph.from_edges(g, [("a", "z")])
    with pytest.raises(ValueError):
        DirectedGraph(g, (2, 5))
    with pytest.raises(ValueError):
        DirectedGraph(g, (2, 5, 8))
    with pytest.raises(ValueError):
        DirectedGraph(g, (3, 5, 0))


def test_is_acyclic_against_dfs_oracle():
    for n in (2, 3):
        g = GroundSet.of_size(n)
        for graph in enumerate_digraphs(g):
            assert is_acyclic(graph) == dfs_acyclic(graph)


def test_example_graph_is_cyclic():
    g = GroundSet.of_size(3)
    graph = DirectedGraph.from_edges(g, [("a", "b"), ("b", "a"), ("c", "b")])
    assert not is_acyclic(graph)
    assert is_acyclic(DirectedGraph.from_edges(g, [("a", "b"), ("c", "b")]))


def test_enumerate_digraphs_counts():
    for n in (2, 3):
        g = GroundSet.of_size(n)
        graphs = list(enumerate_digraphs(g))
        assert len(graphs) == 2 ** (n * (n - 1))
        assert len({h.parents for h in graphs}) == len(graphs)


def test_enumerate_digraphs_refuses_large_n():
    with pytest.raises(ValueError):
        next(enumerate_digraphs(GroundSet.of_size(5)))
    stream = enumerate_digraphs(GroundSet.of_size(5), force=True)
    assert next(stream).ground.n == 5


def test_enumerate_dags_against_filter_oracle():
    for n in (2, 3):
        g = GroundSet.of_size(n)
        direct = {h.parents for h in enumerate_dags(g)}
        filtered = {
            h.parents for h in enumerate_digraphs(g) if is_acyclic(h)
        }
        assert direct == filtered


def test_enumerate_dags_against_recurrence_oracle():
    oracle = robinson_counts(5)
    for n in (2, 3, 4, 5):
        g = GroundSet.of_size(n)
        count = sum(1 for _ in enumerate_dags(g))
        assert count == oracle[n]
    assert oracle[3] == 25 and oracle[4] == 543 and oracle[5] == 29281


def test_enumerate_dags_yields_acyclic_only():
    g = GroundSet.of_size(4)
    for graph in enumerate_dags(g):
        assert is_acyclic(graph)


def test_super_terminal_count_definition():
    g = GroundSet.of_size(3)
    for graph in enumerate_digraphs(g):
        for s in p2_masks(g):
            expected = sum(
                1
                for i in bits_of(s)
                if (s & ~(1 << i)) & ~graph.parents[i] == 0
            )
            assert super_terminal_count(graph, s) == expected
    with pytest.raises(ValueError):
        super_terminal_count(next(enumerate_digraphs(g)), 1)


def test_acyclic_super_terminal_at_most_one():
    for n in (3, 4):
        g = GroundSet.of_size(n)
        for graph in enumerate_dags(g):
            for s in p2_masks(g):
                assert super_terminal_count(graph, s) <= 1
