import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph, random_tree
from homotopes.graph import (Graph, GraphError, contract, contract_dense, cycle_basis,
                             cycle_graph, diameter, edgeless_graph, enumerate_contracted_dense,
                             enumerate_contracted_paths, from_dict, has_tail, is_contracted,
                             multipartite_graph, path_graph)
from oracles import all_elementary_orders


def one_edge():
    return path_graph(2)


def random_walk(g, rng, length):
    """Vertex sequence with stays and backtracks allowed."""
    if g.n == 0:
        return ()
    w = [rng.randrange(g.n)]
    for _ in range(length):
        choices = list(g.neighbors[w[-1]]) + [w[-1]]
        w.append(rng.choice(choices))
    return tuple(w)


walk_cases = st.tuples(st.integers(0, 10 ** 6), st.integers(0, 9))


def _case(seed, length):
    rng = random.Random(seed)
    g = random_graph(rng, max_vertices=5, max_edges=7, rational=False)
    return g, random_walk(g, rng, length)


def test_contract_examples():
    g = one_edge()
    assert contract(g, (1, 2, 1)) == ((1,), {(1, 2): 1})
    assert contract(g, (1, 1, 1)) == ((1,), {})
    a3 = path_graph(3)
    assert contract(a3, (1, 2, 3, 2, 1)) == ((1,), {(1, 2): 1, (2, 3): 1})


def test_contract_example_against_exhaustive_orders():
    a3 = path_graph(3)
    finals = all_elementary_orders((0, 1, 2, 1, 0), a3.adjacent)
    assert finals == {((0,), ((0, 1), (1, 2)))}


def test_contract_rejects_invalid_path():
    with pytest.raises(GraphError):
        contract(path_graph(3), (1, 3))


def test_cycle_basis_ranks():
    assert cycle_basis(cycle_graph(5)).rank == 1
    assert cycle_basis(multipartite_graph(2, 3)).rank == 4
    assert cycle_basis(path_graph(6)).rank == 0
    g = multipartite_graph(2, 3)
    assert (g.n, len(g.edges)) == (6, 9)


def test_cycle_basis_windings_are_unit_vectors():
    g = multipartite_graph(3, 2)
    cb = cycle_basis(g)
    assert cb.rank == len(g.edges) - g.n + 1
    for k, cyc in enumerate(cb.cycles):
        assert cyc[0] == cyc[-1]
        w = cb.winding(cyc)
        assert w == [1 if j == k else 0 for j in range(cb.rank)]


def test_cycle_basis_custom_tree():
    g = cycle_graph(4)
    cb = cycle_basis(g, tree_edges=[(1, 2), (2, 3), (3, 4)])
    assert cb.generators == [(0, 3)]
    with pytest.raises(GraphError):
        cycle_basis(g, tree_edges=[(1, 2), (2, 3)])
    with pytest.raises(GraphError):
        cycle_basis(g, tree_edges=[(1, 2), (2, 3), (3, 4), (4, 1)])


def test_enumerate_one_edge():
    paths = enumerate_contracted_paths(one_edge(), 1)
    assert paths == [(), (1,), (2,), (1, 2), (2, 1)]


def test_enumerate_against_brute_force():
    rng = random.Random(3)
    for _ in range(10):
        g = random_graph(rng, max_vertices=5, max_edges=6, rational=False)
        L = 3
        brute = {()}
        frontier = [(i,) for i in range(g.n)]
        for _ in range(L + 1):
            brute.update(frontier)
            frontier = [p + (j,) for p in frontier for j in g.neighbors[p[-1]]]
        brute = {p for p in brute if is_contracted(p)}
        got = enumerate_contracted_dense(g, L)
        assert len(got) == len(set(got))
        assert set(got) == brute


def test_enumerate_tree_count():
    rng = random.Random(5)
    for n in range(1, 8):
        t = random_tree(rng, n)
        assert len(enumerate_contracted_paths(t, diameter(t))) == n * n + 1


def test_enumerate_edgeless():
    g = edgeless_graph(4)
    assert enumerate_contracted_paths(g, 3) == [(), (1,), (2,), (3,), (4,)]


def test_has_tail():
    assert has_tail(path_graph(3))
    assert not has_tail(cycle_graph(4))
    assert not has_tail(edgeless_graph(1))


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 2)], {(1, 2): 2, (2, 1): 3})
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 2)], {(1, 2): 0})
    with pytest.raises(GraphError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(GraphError):
        Graph([1, 1], [])
    with pytest.raises(GraphError):
        from_dict({"edges": []})


def test_symbolic_default_and_dict_round_trip():
    g = from_dict({"vertices": ["a", "b", "c"],
                   "edges": [{"u": "a", "v": "b", "s": "1/2"}, {"u": "b", "v": "c"}]})
    assert g.is_symbolic()
    assert from_dict(g.to_dict()) == g
    assert g.components() == 1


@given(walk_cases)
def test_contract_idempotent(case):
    g, w = _case(*case)
    p, _ = contract_dense(g, w)
    assert contract_dense(g, p) == (p, {})
    assert is_contracted(p)


@given(walk_cases)
def test_contract_independent_of_order(case):
    g, w = _case(*case)
    p, q = contract_dense(g, w)
    popped = []
    for k, e in sorted(q.items()):
        popped.extend([g.edges[k]] * e)
    finals = all_elementary_orders(w, g.adjacent)
    assert finals == {(p, tuple(sorted(popped)))}


@given(walk_cases)
def test_contract_reversal_duality(case):
    g, w = _case(*case)
    p, q = contract_dense(g, w)
    rp, rq = contract_dense(g, w[::-1])
    assert rp == p[::-1]
    assert rq == q
