import networkx as nx
import pytest
from hypothesis import given

from cliquesum.decomposition import (
    BoundKind,
    core_bound,
    core_decompose,
    edge_support,
    h_bound,
    h_index_degrees,
    truss_bound,
    truss_decompose,
)
from cliquesum.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    empty_graph,
    path_graph,
    star_graph,
)
from cliquesum.verifier import max_clique_size

from conftest import graphs
from oracles import (
    core_numbers_by_definition,
    edge_set,
    h_by_exhaustion,
    k_truss_edges,
    truss_numbers_by_definition,
    truss_numbers_by_subsets,
)

K4_MINUS_EDGE = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
TWO_TRIANGLES = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def later_neighbors(g, order):
    pos = order.position
    return [sum(1 for w in g.adj[v] if pos[w] > pos[v]) for v in range(g.vertex_count)]


def check_degeneracy_order(g):
    res = core_decompose(g)
    later = later_neighbors(g, res.degeneracy_order)
    assert max(later, default=0) == res.degeneracy
    cores = [res.core_number[v] for v in res.degeneracy_order.perm]
    assert cores == sorted(cores)


def check_truss_order(g, direct=True):
    res = truss_decompose(g)
    perm = res.truss_order.perm
    vt = [res.vertex_truss[v] for v in perm]
    assert vt == sorted(vt)
    if not direct:
        return
    edges = edge_set(g)
    for i, v in enumerate(perm):
        k = res.vertex_truss[v]
        if k < 2:
            continue
        members = {x for e in k_truss_edges(edges, k) for x in e}
        assert {v, *perm[i + 1 :]} <= members, (v, k)


class TestCore:
    def test_k5(self):
        res = core_decompose(complete_graph(5))
        assert res.core_number == (4,) * 5 and res.degeneracy == 4

    def test_edgeless(self):
        assert core_decompose(empty_graph(4)).core_number == (0,) * 4

    def test_path4(self):
        # frozen from core_numbers_by_definition(path_graph(4))
        assert core_numbers_by_definition(path_graph(4)) == [1, 1, 1, 1]
        assert core_decompose(path_graph(4)).core_number == (1, 1, 1, 1)

    def test_ties_break_by_id(self):
        assert core_decompose(complete_graph(4)).degeneracy_order.perm == (0, 1, 2, 3)

    @given(graphs(max_n=14))
    def test_matches_definition(self, g):
        assert list(core_decompose(g).core_number) == core_numbers_by_definition(g)

    @given(graphs(max_n=25))
    def test_matches_networkx(self, g):
        G = nx.Graph()
        G.add_nodes_from(range(g.vertex_count))
        G.add_edges_from(g.edges())
        want = nx.core_number(G)
        assert core_decompose(g).core_number == tuple(want[v] for v in range(g.vertex_count))

    @given(graphs(max_n=20))
    def test_degeneracy_order_property(self, g):
        check_degeneracy_order(g)


class TestTruss:
    def test_k5(self):
        res = truss_decompose(complete_graph(5))
        assert set(res.truss_number.values()) == {5} and res.max_truss == 5

    def test_triangle(self):
        assert set(truss_decompose(complete_graph(3)).truss_number.values()) == {3}

    def test_k4_minus_edge(self):
        # frozen from the exhaustive edge-subset oracle
        want = truss_numbers_by_subsets(K4_MINUS_EDGE)
        assert want == {(0, 1): 3, (0, 2): 3, (0, 3): 3, (1, 2): 3, (1, 3): 3}
        assert truss_decompose(K4_MINUS_EDGE).truss_number == want

    def test_conventions(self):
        assert truss_decompose(Graph.from_edges(0, [])).max_truss == 0
        res = truss_decompose(empty_graph(3))
        assert res.max_truss == 1 and res.vertex_truss == (1, 1, 1)
        assert res.truss_order.perm == (0, 1, 2)

    def test_isolated_vertices_first(self):
        g = Graph.from_edges(5, [(1, 3), (3, 4), (1, 4)])
        perm = truss_decompose(g).truss_order.perm
        assert perm[:2] == (0, 2)

    @given(graphs(max_n=6))
    def test_matches_subset_oracle(self, g):
        if g.edge_count > 10:
            return
        assert truss_decompose(g).truss_number == truss_numbers_by_subsets(g)

    @given(graphs(max_n=14))
    def test_matches_definition(self, g):
        assert truss_decompose(g).truss_number == truss_numbers_by_definition(g)

    @given(graphs(max_n=16))
    def test_truss_order_property(self, g):
        check_truss_order(g)


class TestSupport:
    def test_examples(self):
        assert set(edge_support(complete_graph(3)).values()) == {1}
        assert set(edge_support(complete_graph(5)).values()) == {3}
        assert set(edge_support(star_graph(5)).values()) == {0}


class TestBounds:
    def test_h(self):
        assert h_bound(complete_graph(5)) == 5
        # exhaustive check of h = 1..6 against the star's degree sequence
        assert h_by_exhaustion([5, 1, 1, 1, 1, 1]) == 2
        assert h_bound(star_graph(5)) == 2
        assert h_bound(empty_graph(3)) == 1
        assert h_bound(Graph.from_edges(0, [])) == 0

    def test_core(self):
        assert core_bound(complete_graph(5)) == 5
        assert core_bound(complete_graph(3)) == 3
        assert core_bound(path_graph(4)) == 2
        assert core_bound(empty_graph(2)) == 1
        assert core_bound(Graph.from_edges(0, [])) == 0

    def test_truss(self):
        assert truss_bound(complete_graph(5)) == 5
        assert truss_bound(complete_graph(2)) == 2
        assert truss_bound(TWO_TRIANGLES) == 3

    def test_k33_values(self):
        k33 = complete_multipartite(3, 3)
        assert h_by_exhaustion(k33.degrees().tolist()) == 4
        assert max(core_numbers_by_definition(k33)) + 1 == 4
        assert max(truss_numbers_by_definition(k33).values()) == 2
        assert (h_bound(k33), core_bound(k33), truss_bound(k33)) == (4, 4, 2)

    @given(graphs(max_n=40))
    def test_h_matches_exhaustion(self, g):
        assert h_index_degrees(g.degrees().tolist()) == h_by_exhaustion(g.degrees().tolist())

    @given(graphs(max_n=30))
    def test_chain(self, g):
        assert h_bound(g) >= core_bound(g) >= truss_bound(g)

    @given(graphs(max_n=14))
    def test_sound(self, g):
        omega = max_clique_size(g)
        assert min(h_bound(g), core_bound(g), truss_bound(g)) >= omega

    @given(graphs(max_n=20))
    def test_truss_is_core(self, g):
        res = truss_decompose(g)
        assert res.max_truss - 1 <= max(core_decompose(g).core_number, default=0) or g.vertex_count == 0


@pytest.mark.parametrize("kind", list(BoundKind))
def test_bound_kind_round_trip(kind):
    assert BoundKind(kind.value) is kind
