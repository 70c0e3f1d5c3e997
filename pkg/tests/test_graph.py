import pytest
from hypothesis import given, settings, strategies as st

from cliquenet.graph import (
    Graph,
    connected_components,
    induced_subgraph,
    load_edgelist,
    save_edgelist,
)

from oracles import complete_graph, random_connected_graph

import numpy as np


def test_add_node_dense_ids():
    g = Graph()
    assert g.add_node() == 0
    assert g.node_count == 1
    assert g.add_node() == 1
    g5 = Graph(5)
    assert g5.add_node() == 5
    assert g5.node_count == 6
    assert g5.degree[5] == 0


def test_add_edge_if_absent():
    g = Graph(2)
    assert g.add_edge_if_absent(0, 1) is True
    assert g.edge_count == 1
    assert g.add_edge_if_absent(0, 1) is False
    assert g.add_edge_if_absent(1, 0) is False
    assert g.edge_count == 1
    assert g.degree == [1, 1]


def test_add_edge_rejects_self_loop_and_bad_ids():
    g = Graph(2)
    with pytest.raises(ValueError):
        g.add_edge_if_absent(0, 0)
    with pytest.raises(ValueError):
        g.add_edge_if_absent(0, 2)
    with pytest.raises(ValueError):
        g.add_edge_if_absent(-1, 0)


def test_complete_subgraph_counts():
    g = Graph(5)
    assert g.complete_subgraph([0, 1, 2, 3, 4]) == 10
    assert g.complete_subgraph([0, 1, 2, 3, 4]) == 0  # idempotent
    g2 = Graph(3)
    g2.add_edge_if_absent(0, 1)
    assert g2.complete_subgraph([0, 1, 2]) == 2


def test_complete_subgraph_rejects_duplicates():
    g = Graph(3)
    with pytest.raises(ValueError):
        g.complete_subgraph([0, 1, 1])


def test_edges_iterates_sorted_once():
    g = Graph(4)
    g.add_edge_if_absent(2, 3)
    g.add_edge_if_absent(0, 3)
    g.add_edge_if_absent(0, 1)
    assert list(g.edges()) == [(0, 1), (0, 3), (2, 3)]


@given(st.integers(2, 10), st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=60))
@settings(max_examples=80)
def test_invariants_under_random_edge_insertions(n, pairs):
    g = Graph(n)
    for u, v in pairs:
        if u != v and u < n and v < n:
            g.add_edge_if_absent(u, v)
    g.validate()
    assert sum(g.degree) == 2 * g.edge_count


def test_mean_degree():
    g = complete_graph(5)
    assert g.mean_degree == 4.0


def test_connected_components():
    g = Graph(5)
    g.add_edge_if_absent(0, 1)
    g.add_edge_if_absent(1, 2)
    comps = connected_components(g)
    assert comps[0] == [0, 1, 2]
    assert sorted(map(tuple, comps[1:])) == [(3,), (4,)]


def test_induced_subgraph_relabels():
    g = Graph(5)
    g.add_edge_if_absent(1, 3)
    g.add_edge_if_absent(3, 4)
    sub = induced_subgraph(g, [1, 3, 4])
    assert sub.node_count == 3
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]
    sub.validate()


def test_edgelist_round_trip(tmp_path):
    rng = np.random.default_rng(3)
    for i in range(20):
        g = random_connected_graph(rng, 2, 8)
        path = tmp_path / f"g{i}.edges"
        save_edgelist(g, path, provenance="a=1 b=2")
        g2 = load_edgelist(path)
        assert g2.node_count == g.node_count
        assert g2.edge_count == g.edge_count
        assert g2.adjacency == g.adjacency


def test_edgelist_preserves_isolated_nodes(tmp_path):
    g = Graph(4)
    g.add_edge_if_absent(0, 1)
    path = tmp_path / "g.edges"
    save_edgelist(g, path)
    g2 = load_edgelist(path)
    assert g2.node_count == 4
    assert g2.edge_count == 1


def test_edgelist_header_and_format(tmp_path):
    g = Graph(3)
    g.add_edge_if_absent(2, 0)
    path = tmp_path / "g.edges"
    save_edgelist(g, path, provenance="model=test seed=9")
    lines = path.read_text().splitlines()
    assert lines[0] == "# nodes=3 edges=1"
    assert lines[1] == "# model=test seed=9"
    assert lines[2] == "0 2"


@pytest.mark.parametrize("content", [
    "0 1\n",                                # missing header
    "# nodes=2 edges=5\n0 1\n",             # wrong count
    "# nodes=2 edges=2\n0 1\n0 1\n",        # duplicate edge
    "# nodes=x edges=1\n0 1\n",             # malformed header
    "# nodes=2 edges=1\n0 1 2\n",           # malformed edge line
])
def test_edgelist_rejects_malformed(tmp_path, content):
    path = tmp_path / "bad.edges"
    path.write_text(content)
    with pytest.raises(ValueError):
        load_edgelist(path)
