import pytest

from common import complete, cycle, es, path
from oddspan.errors import EmptyGraph, GIsOdd, NotTriangleFree, OddOrder
from oddspan.families import gen_c5k, gen_complete_bipartite, gen_complete_bipartite_minus_edge
from oddspan.graph_core import Graph, complement
from oddspan.oracle import verify_odd_spanning_tree
from oddspan.sweep import build_theta, crafted_trifree_instances
from oddspan.trifree import (
    C5_OF_2,
    COMPLETE_BIPARTITE,
    K2S2T,
    K2S2T_MINUS_E,
    TWO_K2,
    build_case_frame,
    complement_connected,
    is_complete_bipartite,
    recognize_excluded,
    trifree_complement_tree,
)

# expected trees for the crafted instances, frozen by hand-tracing the
# construction; keyed by the instance label used in the sweep module
FROZEN_TREES = {
    "three-matchings": es((1, 2), (2, 4), (0, 2), (0, 3), (0, 5)),
    "edge-plus-star": es((1, 3), (3, 4), (0, 2), (0, 3), (0, 5), (0, 6), (0, 7)),
    "cube-like": es((1, 4), (1, 7), (2, 4), (1, 3), (0, 4), (0, 5), (0, 6)),
    "hexagon": es((0, 2), (0, 3), (0, 4), (1, 3), (3, 5)),
    "k44-minus-two-at-one": es((1, 5), (1, 6), (0, 5), (5, 7), (1, 2), (1, 3), (1, 4)),
    "k44-minus-matching": es((0, 4), (1, 5), (0, 2), (0, 3), (4, 5), (5, 6), (4, 7)),
    "k24-minus-matching": es((0, 2), (1, 3), (2, 3), (2, 4), (3, 5)),
    "theta-with-gap": es((3, 5), (5, 6), (4, 6), (6, 7), (0, 1), (0, 2), (0, 5)),
    "theta-2-1-3": es((3, 4), (3, 5), (3, 6), (0, 5), (0, 7), (0, 2), (1, 5)),
    "theta-3-3-2": es(
        (2, 3), (2, 4), (2, 5), (0, 4), (4, 6), (0, 7), (0, 8), (0, 9), (0, 1)
    ),
    "blown-cycle-4": es((4, 6), (0, 6), (2, 6), (2, 3), (2, 5), (1, 5), (5, 7)),
    "theta-1-4-1": es((1, 2), (2, 4), (2, 6), (6, 7), (0, 6), (0, 5), (0, 3)),
    "theta-2-3-1": es((1, 3), (3, 4), (0, 3), (2, 5), (5, 6), (0, 5), (0, 7)),
}


def test_is_complete_bipartite():
    assert is_complete_bipartite(cycle(4)) == (2, 2)
    assert is_complete_bipartite(path(4)) is None
    assert is_complete_bipartite(gen_complete_bipartite(1, 5)) == (1, 5)
    assert is_complete_bipartite(Graph(4, [(0, 1), (2, 3)])) is None
    assert is_complete_bipartite(complete(4)) is None


def test_complement_connected_examples():
    assert not complement_connected(gen_complete_bipartite(2, 3))
    assert complement_connected(cycle(5))
    assert complement_connected(path(4))
    with pytest.raises(EmptyGraph):
        complement_connected(Graph(0))
    with pytest.raises(NotTriangleFree):
        complement_connected(complete(3))


def test_recognize_excluded_families():
    assert recognize_excluded(Graph(4, [(0, 1), (2, 3)])) == TWO_K2
    assert recognize_excluded(gen_c5k(2)) == C5_OF_2
    assert recognize_excluded(gen_complete_bipartite(2, 2)) == K2S2T
    assert recognize_excluded(gen_complete_bipartite(2, 4)) == K2S2T
    assert recognize_excluded(gen_complete_bipartite_minus_edge(2, 4)) == K2S2T_MINUS_E
    assert recognize_excluded(gen_complete_bipartite(1, 3)) == COMPLETE_BIPARTITE
    assert recognize_excluded(gen_complete_bipartite(2, 3)) == COMPLETE_BIPARTITE
    assert recognize_excluded(cycle(6)) is None
    assert recognize_excluded(gen_c5k(3)) is None
    # P4 really is K22 minus an edge
    assert recognize_excluded(path(4)) == K2S2T_MINUS_E
    assert recognize_excluded(path(6)) is None


def test_case_frame_shape():
    fr = build_case_frame(cycle(6))
    assert fr.y == 0
    assert fr.xs == (1, 5)
    assert fr.ys == (0, 2, 3, 4)
    assert fr.y in fr.yprime
    for x in fr.xs:
        assert all(not cycle(6).has_edge(x, w) for w in fr.y_i[x])


def test_case_frame_preconditions():
    with pytest.raises(GIsOdd):
        build_case_frame(Graph(6, [(0, 1), (2, 3), (4, 5)]))
    with pytest.raises(NotTriangleFree):
        build_case_frame(complete(4))
    with pytest.raises(OddOrder):
        build_case_frame(gen_c5k(1))


def test_crafted_instances_hit_expected_branches():
    for label, g, want in crafted_trifree_instances():
        decision = trifree_complement_tree(g)
        if want[0] == "T" or want == "STAR":
            assert decision.exists, label
            assert decision.tree_id == want, label
            assert verify_odd_spanning_tree(complement(g), decision.tree).ok, label
        else:
            assert not decision.exists, label
            assert decision.family == want, label
            assert decision.tree is None


def test_crafted_trees_are_frozen():
    by_label = {label: g for label, g, _ in crafted_trifree_instances()}
    for label, want in FROZEN_TREES.items():
        decision = trifree_complement_tree(by_label[label])
        assert decision.tree == want, label


def test_path6_tree():
    decision = trifree_complement_tree(path(6))
    assert decision.exists and decision.tree_id == "T3"
    assert decision.tree == es((1, 3), (1, 4), (1, 5), (0, 4), (2, 4))


def test_star_decision_on_empty_pair():
    decision = trifree_complement_tree(Graph(2))
    assert decision.exists and decision.tree_id == "STAR"
    assert decision.tree == es((0, 1))


def test_decision_rejects_bad_inputs():
    with pytest.raises(EmptyGraph):
        trifree_complement_tree(Graph(0))
    with pytest.raises(NotTriangleFree):
        trifree_complement_tree(complete(3))
    with pytest.raises(OddOrder):
        trifree_complement_tree(cycle(5))


def test_build_theta_shape():
    g = build_theta(2, 3, 1)
    # shared vertex 0, attachments 1 and 2, then 2 + 3 side vertices
    assert g.n == 8
    assert g.has_edge(0, 1) and g.has_edge(0, 2)
    for a in (3, 4):
        for b in (5, 6, 7):
            assert g.has_edge(a, b)
    assert not g.has_edge(1, 2)
    h = complement(g)
    # the complement glues two cliques at vertex 0 with pendant attachments
    assert h.has_edge(1, 3) and h.has_edge(1, 4) and h.has_edge(2, 5)


def test_small_thetas_collapse_to_excluded_family():
    for shape in ((1, 1, 2), (1, 2, 1), (2, 1, 1)):
        assert recognize_excluded(build_theta(*shape)) == C5_OF_2
