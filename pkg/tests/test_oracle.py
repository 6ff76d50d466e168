import pytest

from common import complete, cycle, es, path
from oddspan.errors import Disconnected, SizeCap
from oddspan.families import gen_complete_bipartite
from oddspan.graph_core import Graph
from oddspan.oracle import (
    EVEN_DEGREE_VERTEX,
    HAS_CYCLE,
    NOT_CONNECTED,
    NOT_SPANNING,
    NOT_SUBGRAPH,
    ODD_FACTOR_EDGE_CAP,
    ODD_TREE_VERTEX_CAP,
    WRONG_EDGE_COUNT,
    enumerate_spanning_trees,
    find_connected_odd_factor_bruteforce,
    find_odd_spanning_tree_bruteforce,
    verify_connected_odd_factor,
    verify_odd_spanning_tree,
)


def test_verify_tree_ok():
    rep = verify_odd_spanning_tree(complete(4), es((0, 1), (0, 2), (0, 3)))
    assert rep.ok and rep.failure is None and rep.vertex is None


def test_verify_tree_failures_in_order():
    g = complete(4)
    assert verify_odd_spanning_tree(cycle(4), es((0, 1), (0, 2), (0, 3))).failure == NOT_SUBGRAPH
    assert verify_odd_spanning_tree(g, es((0, 1))).failure == WRONG_EDGE_COUNT
    assert verify_odd_spanning_tree(g, es((0, 1), (0, 2), (1, 2))).failure == HAS_CYCLE
    rep = verify_odd_spanning_tree(path(4), es((0, 1), (1, 2), (2, 3)))
    assert rep.failure == EVEN_DEGREE_VERTEX
    assert rep.vertex == 1  # lowest even vertex reported


def test_verify_factor_ok():
    assert verify_connected_odd_factor(complete(4), complete(4).edge_set()).ok


def test_verify_factor_failures():
    g = complete(4)
    assert verify_connected_odd_factor(cycle(4), es((0, 2))).failure == NOT_SUBGRAPH
    rep = verify_connected_odd_factor(g, es((0, 1)))
    assert rep.failure == NOT_SPANNING and rep.vertex == 2
    assert verify_connected_odd_factor(g, es((0, 1), (2, 3))).failure == NOT_CONNECTED
    rep = verify_connected_odd_factor(cycle(4), cycle(4).edge_set())
    assert rep.failure == EVEN_DEGREE_VERTEX and rep.vertex == 0


def test_enumerate_counts():
    assert enumerate_spanning_trees(cycle(4)) == 4
    assert enumerate_spanning_trees(complete(4)) == 16
    assert enumerate_spanning_trees(path(5)) == 1
    assert enumerate_spanning_trees(Graph(1)) == 1


def test_enumerate_cayley():
    # n^(n-2) labeled trees in the complete graph
    for n in range(2, 7):
        assert enumerate_spanning_trees(complete(n)) == n ** (n - 2)


def test_enumerate_visits_valid_trees():
    got = []
    enumerate_spanning_trees(complete(4), got.append)
    assert len(got) == len(set(got)) == 16
    for t in got:
        assert len(t) == 3


def test_enumerate_early_stop():
    assert enumerate_spanning_trees(complete(4), lambda t: False) == 1


def test_enumerate_disconnected():
    with pytest.raises(Disconnected):
        enumerate_spanning_trees(Graph(4, [(0, 1), (2, 3)]))


def test_find_odd_tree_first_hit_is_frozen():
    assert find_odd_spanning_tree_bruteforce(complete(4)) == es((0, 1), (0, 2), (0, 3))
    assert find_odd_spanning_tree_bruteforce(Graph(2, [(0, 1)])) == es((0, 1))


def test_find_odd_tree_negative_cases():
    assert find_odd_spanning_tree_bruteforce(cycle(4)) is None
    assert find_odd_spanning_tree_bruteforce(cycle(6)) is None  # only path trees
    assert find_odd_spanning_tree_bruteforce(path(4)) is None
    # odd order: handshake forbids all-odd degrees
    for g in (cycle(5), complete(5), path(3), Graph(1)):
        assert find_odd_spanning_tree_bruteforce(g) is None


def test_find_odd_tree_agrees_with_verifier():
    from oddspan.sweep import all_connected_graphs

    hits = 0
    for g in all_connected_graphs(4):
        t = find_odd_spanning_tree_bruteforce(g)
        if t is not None:
            hits += 1
            assert verify_odd_spanning_tree(g, t).ok
    assert hits > 0


def test_find_factor_frozen():
    assert find_connected_odd_factor_bruteforce(complete(4)) == complete(4).edge_set()
    assert find_connected_odd_factor_bruteforce(cycle(4)) is None
    assert find_connected_odd_factor_bruteforce(cycle(6)) is None
    assert find_connected_odd_factor_bruteforce(cycle(5)) is None
    f = find_connected_odd_factor_bruteforce(gen_complete_bipartite(3, 3))
    assert f is not None and verify_connected_odd_factor(gen_complete_bipartite(3, 3), f).ok


def test_size_caps():
    with pytest.raises(SizeCap):
        find_odd_spanning_tree_bruteforce(path(ODD_TREE_VERTEX_CAP + 1))
    with pytest.raises(SizeCap):
        find_connected_odd_factor_bruteforce(path(ODD_FACTOR_EDGE_CAP + 2))
    with pytest.raises(Disconnected):
        find_odd_spanning_tree_bruteforce(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(Disconnected):
        find_connected_odd_factor_bruteforce(Graph(4, [(0, 1), (2, 3)]))
