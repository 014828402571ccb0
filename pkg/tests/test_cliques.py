from itertools import combinations

import pytest

from analysis.cliques import (
    clique_overlap,
    maximal_cliques,
    maximum_cliques,
    mutual_intersection,
    overlap_matrix,
)
from network import EdgeKind, layer
from oracles import brute_force_maximal_cliques, make_graph, random_graph


def test_twin_cliques_maximum(twin_cliques):
    found = maximum_cliques(twin_cliques)
    assert found.cliques == (("1", "2", "3", "4", "5"), ("1", "2", "3", "4", "6"))
    assert found.size_of_maximum == 5
    assert found.membership_counts == {"1": 2, "2": 2, "3": 2, "4": 2, "5": 1, "6": 1}
    assert clique_overlap(*found.cliques) == (4, 0.8)
    assert mutual_intersection(found.cliques) == frozenset("1234")
    assert overlap_matrix(found.cliques) == [[5, 4], [4, 5]]


def test_complete_graph_has_one_clique(k5):
    found = maximal_cliques(k5)
    assert found.cliques == (("1", "2", "3", "4", "5"),)


def test_isolated_nodes_are_trivial_cliques():
    g = make_graph([("a", "b")], nodes=["z"])
    assert maximal_cliques(g).cliques == (("a", "b"),)
    with_trivial = maximal_cliques(g, include_trivial=True)
    assert with_trivial.cliques == (("a", "b"), ("z",))
    assert with_trivial.components == (0, 1)


def test_min_size_filter(barbell):
    assert len(maximal_cliques(barbell)) == 3
    assert maximal_cliques(barbell, min_size=3).cliques == (("a", "b", "c"), ("d", "e", "f"))


def test_sorted_by_size_then_members(barbell):
    found = maximal_cliques(barbell)
    assert found.cliques == (("a", "b", "c"), ("d", "e", "f"), ("c", "d"))


def test_edgeless_graph_has_no_cliques():
    found = maximum_cliques(make_graph([], nodes=["a", "b"]))
    assert found.cliques == ()
    assert found.size_of_maximum == 0
    assert not found


def _complement_of_disjoint_groups(groups: int, size: int):
    nodes = [f"v{i:02d}" for i in range(groups * size)]
    block = {node: i // size for i, node in enumerate(nodes)}
    return make_graph([(u, v) for u, v in combinations(nodes, 2) if block[u] != block[v]])


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_complement_of_perfect_matching(m):
    found = maximal_cliques(_complement_of_disjoint_groups(m, 2))
    assert len(found) == 2**m
    assert {len(c) for c in found.cliques} == {m}


@pytest.mark.parametrize("groups, expected", [(2, 9), (3, 27)])
def test_complement_of_disjoint_triangles(groups, expected):
    # one member from each triangle: the extremal clique count 3^(n/3)
    found = maximal_cliques(_complement_of_disjoint_groups(groups, 3))
    assert len(found) == expected
    assert {len(c) for c in found.cliques} == {groups}


def test_empty_intersection_helpers():
    assert mutual_intersection([]) == frozenset()
    assert clique_overlap([], []) == (0, 0.0)


def test_against_subset_enumeration():
    for seed in range(100):
        n = 2 + seed % 14
        g = random_graph(n, 0.5, seed)
        found = maximal_cliques(g, include_trivial=True)
        assert set(found.as_sets()) == brute_force_maximal_cliques(g, include_trivial=True), seed


def test_maximal_cliques_form_an_antichain_covering_every_edge():
    for seed in range(30):
        g = random_graph(12, 0.4, 1000 + seed)
        sets = maximal_cliques(g).as_sets()
        for a, b in combinations(sets, 2):
            assert not a <= b and not b <= a
        for u, v in g.edges:
            assert any(u in c and v in c for c in sets)


@pytest.mark.parametrize("kind", ["alliance", "work"])
def test_fixture_maximum_cliques(fixture_net, golden, kind):
    found = maximum_cliques(layer(fixture_net, EdgeKind(kind)))
    assert [list(c) for c in found.cliques] == golden[kind]["maximum_cliques"]


def test_fixture_alliance_overlap(fixture_net, golden):
    found = maximum_cliques(layer(fixture_net, EdgeKind.ALLIANCE))
    shared, fraction = clique_overlap(*found.cliques)
    assert [shared, fraction] == golden["alliance"]["clique_overlap"]
