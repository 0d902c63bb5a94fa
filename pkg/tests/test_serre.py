import random

import pytest

from graph_iwasawa import (
    DisconnectedGraphError,
    Multigraph,
    adjacency_matrix,
    betti1,
    bouquet,
    cayley_serre,
    cycle_graph,
    derived_cover,
    euler_characteristic,
    laplacian,
    multigraph_from_json,
    multigraph_to_json,
    spanning_tree_count,
    to_dot,
    valency_matrix,
    validate_serre,
)
from oracles import random_base_multigraph, spanning_trees_brute


def four_edge_join() -> Multigraph:
    # two vertices joined by four parallel edges
    g = Multigraph(2)
    for _ in range(4):
        g.add_edge(0, 1)
    return g


def test_validate_bouquet_ok():
    assert validate_serre(bouquet(2)) == []


def test_validate_fixed_point():
    g = Multigraph(1)
    g.origin, g.terminus, g.inverse = [0], [0], [0]
    problems = validate_serre(g)
    assert any("fixed point" in p for p in problems)


def test_validate_disconnected():
    g = Multigraph(2)
    g.add_loop(0)
    g.add_loop(1)
    problems = validate_serre(g)
    assert any("not connected" in p for p in problems)


def test_validate_low_valency():
    g = Multigraph(2)
    g.add_edge(0, 1)
    assert any("valency" in p for p in validate_serre(g))


def test_validate_bad_involution():
    g = Multigraph(1)
    g.origin, g.terminus, g.inverse = [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 3, 0]
    assert any("involution" in p for p in validate_serre(g))


def test_adjacency_examples():
    assert adjacency_matrix(bouquet(2)) == [[4]]
    c4 = adjacency_matrix(cycle_graph(4))
    assert c4 == [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    assert adjacency_matrix(four_edge_join()) == [[0, 4], [4, 0]]


def test_valency_laplacian_examples():
    assert valency_matrix(bouquet(2)) == [[4]]
    assert laplacian(bouquet(2)) == [[0]]
    x1 = four_edge_join()
    assert valency_matrix(x1) == [[4, 0], [0, 4]]
    assert laplacian(x1) == [[4, -4], [-4, 4]]
    assert valency_matrix(cycle_graph(4)) == [
        [2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]


def test_laplacian_rows_sum_zero_and_symmetric():
    rng = random.Random(11)
    for _ in range(20):
        g = random_base_multigraph(rng)
        lap = laplacian(g)
        assert all(sum(row) == 0 for row in lap)
        n = g.num_vertices
        assert all(lap[i][j] == lap[j][i] for i in range(n) for j in range(n))


def test_euler_characteristic_and_betti():
    assert euler_characteristic(bouquet(2)) == -1
    for t in range(1, 6):
        assert euler_characteristic(bouquet(t)) == 1 - t
    for g in (1, 2, 5, 9):
        assert euler_characteristic(cycle_graph(g)) == 0
        assert betti1(cycle_graph(g)) == 1
    assert betti1(bouquet(3)) == 3


def test_edge_counts():
    rng = random.Random(5)
    for _ in range(20):
        g = random_base_multigraph(rng)
        assert 2 * g.num_undirected_edges == g.num_directed_edges


def test_spanning_trees_bouquets_and_cycles():
    for t in range(1, 6):
        assert spanning_tree_count(bouquet(t)) == 1
    for g in (1, 2, 3, 7, 12, 50):
        assert spanning_tree_count(cycle_graph(g)) == g


def test_spanning_trees_crt_path():
    # beyond the Bareiss ceiling: exercises the CRT determinant
    assert spanning_tree_count(cycle_graph(500)) == 500


def test_spanning_trees_cover_example():
    cover = derived_cover(cayley_serre(4, (1, 1)))
    assert cover.num_vertices == 4
    assert cover.num_undirected_edges == 8
    assert spanning_tree_count(cover) == 32


def test_spanning_trees_vs_bruteforce():
    rng = random.Random(23)
    for _ in range(15):
        g = random_base_multigraph(rng, max_vertices=4, max_edges=7)
        assert spanning_tree_count(g) == spanning_trees_brute(g)


def test_spanning_trees_deletion_independent():
    rng = random.Random(41)
    for _ in range(10):
        g = random_base_multigraph(rng, max_vertices=8, max_edges=12)
        counts = {spanning_tree_count(g, delete_index=i)
                  for i in range(g.num_vertices)}
        assert len(counts) == 1


def test_spanning_trees_requires_connected():
    g = Multigraph(2)
    g.add_loop(0)
    g.add_loop(1)
    with pytest.raises(DisconnectedGraphError):
        spanning_tree_count(g)


def test_vertex_cap():
    with pytest.raises(ValueError, match="cap"):
        spanning_tree_count(cycle_graph(100), cap=64)


def test_delete_index_out_of_range():
    with pytest.raises(ValueError, match="delete_index"):
        spanning_tree_count(cycle_graph(4), delete_index=4)


def test_dot_export():
    dot = to_dot(derived_cover(cayley_serre(2, (1, 1))), name="x1")
    assert dot == ("graph x1 {\n  0;\n  1;\n"
                   + "  0 -- 1;\n" * 4 + "}\n")
    g = Multigraph(1)
    g.add_loop(0)
    g.add_loop(0)
    assert to_dot(g).count("0 -- 0;") == 2


def test_json_roundtrip():
    g = four_edge_join()
    data = multigraph_to_json(g)
    g2 = multigraph_from_json(data)
    assert adjacency_matrix(g2) == adjacency_matrix(g)
    with pytest.raises(ValueError):
        multigraph_from_json({"edges": []})
