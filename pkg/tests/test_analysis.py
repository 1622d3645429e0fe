import json

import networkx as nx
import numpy as np
import pytest

from spinlogic.analysis import (InteractionGraph, degree_centrality, export_graph,
                                graph_from_polynomial, metrics_table,
                                shortest_path_centrality, to_graph, variance_and_mean)
from spinlogic.circuits import compile_netlist, full_adder, ripple_adder
from spinlogic.errors import DimensionError, LocalityError
from spinlogic.poly import SpinPolynomial


def graph_of_edges(n, edges, w=1.0):
    return graph_from_polynomial(SpinPolynomial(n, {tuple(sorted(e)): w for e in edges}))


def as_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n_nodes))
    G.add_edges_from((e.u, e.v) for e in g.edges)
    return G


def test_path_graph():
    g = graph_of_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert list(shortest_path_centrality(g)) == [0, 2, 2, 0]
    assert np.allclose(degree_centrality(g), [1 / 3, 2 / 3, 2 / 3, 1 / 3])


def test_complete_and_triangle():
    k4 = graph_of_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert np.allclose(shortest_path_centrality(k4), 0)
    assert np.allclose(degree_centrality(k4), 1)
    tri = graph_of_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert np.allclose(shortest_path_centrality(tri), 0)


def test_star_and_split_paths():
    star = graph_of_edges(5, [(0, k) for k in range(1, 5)])
    assert shortest_path_centrality(star)[0] == 6
    # square: each pair of opposite corners has two shortest paths
    sq = graph_of_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert np.allclose(shortest_path_centrality(sq), 0.5)


def test_matches_networkx_on_adders(rng):
    for net in (full_adder("all-nand"), ripple_adder(4, "standard"), ripple_adder(4, "all-nand")):
        g = to_graph(compile_netlist(net))
        ref = nx.betweenness_centrality(as_nx(g), normalized=False)
        assert np.allclose(shortest_path_centrality(g), [ref[i] for i in range(g.n_nodes)])


def test_matches_networkx_random(rng):
    for _ in range(20):
        n = int(rng.integers(3, 15))
        G = nx.gnp_random_graph(n, 0.3, seed=int(rng.integers(1 << 30)))
        g = graph_of_edges(n, list(G.edges))
        ref = nx.betweenness_centrality(G, normalized=False)
        assert np.allclose(shortest_path_centrality(g), [ref[i] for i in range(n)])


def test_tree_identity(rng):
    # in a tree every pair has one path; total betweenness = sum over pairs of (distance - 1)
    for _ in range(10):
        n = int(rng.integers(3, 20))
        T = nx.random_labeled_tree(n, seed=int(rng.integers(1 << 30)))
        g = graph_of_edges(n, list(T.edges))
        d = dict(nx.all_pairs_shortest_path_length(T))
        total = sum(d[i][j] - 1 for i in range(n) for j in range(i + 1, n))
        assert shortest_path_centrality(g).sum() == pytest.approx(total)


def test_handshake():
    g = to_graph(compile_netlist(ripple_adder(4, "all-nand")))
    assert sum(g.degrees()) == 2 * g.n_edges
    mean, _ = variance_and_mean(degree_centrality(g))
    assert mean == pytest.approx(2 * g.n_edges / (g.n_nodes * (g.n_nodes - 1)))


def test_variance_and_mean():
    assert variance_and_mean([1, 2, 3, 4]) == (2.5, 1.25)
    with pytest.raises(ValueError):
        variance_and_mean([])


def test_degree_needs_two_nodes():
    with pytest.raises(DimensionError):
        degree_centrality(graph_from_polynomial(SpinPolynomial(1, {(0,): 1.0})))


def test_locality_error():
    with pytest.raises(LocalityError):
        graph_from_polynomial(SpinPolynomial(3, {(0, 1, 2): 1.0}))


def test_fields_and_roles():
    c = compile_netlist(full_adder("standard"))
    g = to_graph(c)
    assert [n.name for n in g.nodes] == c.wires
    assert g.nodes[0].role == "input"
    assert {n.role for n in g.nodes} == {"input", "output", "ancilla"}


def test_dot_export():
    h = SpinPolynomial(3, {(0,): -1.0, (1,): 2.0, (0, 1): -0.5, (1, 2): 3.0})
    dot = export_graph(graph_from_polynomial(h), "dot")
    assert dot.startswith("graph spins {")
    assert "0 -- 1 [weight=-0.5, penwidth=0.5, style=dashed];" in dot
    assert "1 -- 2 [weight=3, penwidth=3, style=solid];" in dot
    assert 'style="filled,dashed"' in dot
    with pytest.raises(ValueError):
        export_graph(graph_from_polynomial(h), "png")


def test_json_export_round_trip():
    g = to_graph(compile_netlist(full_adder("all-nand")))
    text = export_graph(g, "json")
    g2 = InteractionGraph.from_dict(json.loads(text))
    assert g2.nodes == g.nodes and g2.edges == g.edges
    assert export_graph(g2, "json") == text


def test_metrics_table():
    g = to_graph(compile_netlist(full_adder("all-nand")))
    rows = metrics_table(g).strip().split("\n")
    assert rows[0] == "node\trole\tdegree\tD_k\tSP_k"
    assert len(rows) == 15
