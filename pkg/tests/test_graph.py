import itertools

import pytest
from hypothesis import given

from majcolor.exceptions import InstanceFormatError
from majcolor.graph import Digraph, UndirectedGraph, topological_order

from strategies import digraphs


def has_cycle_dfs(D):
    white, gray, black = 0, 1, 2
    state = [white] * D.n

    def visit(v):
        state[v] = gray
        for w in D.out_adj[v]:
            if state[w] == gray or (state[w] == white and visit(w)):
                return True
        state[v] = black
        return False

    return any(state[v] == white and visit(v) for v in range(D.n))


def test_adjacency_consistent():
    D = Digraph(4, [(0, 1), (2, 1), (1, 3)])
    assert D.out_adj == ((1,), (3,), (1,), ())
    assert D.in_adj == ((), (0, 2), (), (1,))
    assert D.out_degree(1) == 1 and D.in_degree(1) == 2
    assert D.edges == {(0, 1), (2, 1), (1, 3)}


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (0, 1)], [(0, 5)]])
def test_digraph_rejects_bad_edges(edges):
    with pytest.raises(InstanceFormatError):
        Digraph(2, edges)


def test_undirected_rejects_reversed_duplicate():
    with pytest.raises(InstanceFormatError):
        UndirectedGraph(3, [(0, 1), (1, 0)])


def test_undirected_symmetric():
    G = UndirectedGraph(3, [(0, 1), (2, 1)])
    assert G.adj == ((1,), (0, 2), (1,))
    assert G.m == 2 and G.edges == {(0, 1), (1, 2)}


def test_topological_order_path():
    assert topological_order(Digraph(3, [(0, 1), (1, 2)])) == [0, 1, 2]


def test_topological_order_cycle():
    assert topological_order(Digraph(3, [(0, 1), (1, 2), (2, 0)])) is None


def test_topological_order_empty_is_permutation():
    assert sorted(topological_order(Digraph(4))) == [0, 1, 2, 3]


def test_topological_order_ties_by_id():
    assert topological_order(Digraph(4, [(3, 0), (2, 1)])) == [2, 1, 3, 0]


@given(digraphs())
def test_topological_order_matches_dfs(D):
    order = topological_order(D)
    assert (order is None) == has_cycle_dfs(D)
    if order is not None:
        pos = {v: i for i, v in enumerate(order)}
        assert sorted(order) == list(range(D.n))
        assert all(pos[u] < pos[v] for u, v in D.edges)


@given(digraphs())
def test_in_out_adjacency_agree(D):
    assert {(u, v) for u in range(D.n) for v in D.out_adj[u]} == D.edges
    assert {(u, v) for v in range(D.n) for u in D.in_adj[v]} == D.edges
    assert all(u != v for u, v in D.edges)


def test_all_tournaments_on_three_vertices():
    pairs = [(0, 1), (0, 2), (1, 2)]
    cyclic = 0
    for flips in itertools.product([False, True], repeat=3):
        D = Digraph(3, [(b, a) if f else (a, b) for (a, b), f in zip(pairs, flips)])
        cyclic += topological_order(D) is None
    assert cyclic == 2
