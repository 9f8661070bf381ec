from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from turanlab.constructions import biclique, clique, cycle, graph_power, materialize, path, star, turan
from turanlab.errors import ArgumentError, CapacityError
from turanlab.graph import (
    Graph, all_labeled_graphs, automorphism_count, canonical_form, chromatic_number,
    color_critical_edges, color_critical_vertices, count_copies, count_embeddings, odd_girth,
)


def brute_embeddings(h, g):
    total = 0
    for image in permutations(range(g.order), h.order):
        if all(g.has_edge(image[u], image[v]) for u, v in h.edges()):
            total += 1
    return total


def to_nx(g):
    x = nx.Graph()
    x.add_nodes_from(range(g.order))
    x.add_edges_from(g.edges())
    return x


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


class TestGraphType:
    def test_rejects_asymmetric(self):
        with pytest.raises(ArgumentError):
            Graph(2, (0b10, 0))

    def test_rejects_loop(self):
        with pytest.raises(ArgumentError):
            Graph(1, (1,))

    def test_order_cap(self):
        Graph.empty(64)
        with pytest.raises(CapacityError):
            Graph.empty(65)

    def test_edge_ops(self):
        g = path(3).add_edge(0, 2)
        assert g == clique(3)
        assert g.remove_edge(0, 2) == path(3)
        assert clique(4).remove_vertex(0) == clique(3)

    def test_relabel_is_isomorphic(self):
        g = path(4)
        h = g.relabel([3, 1, 0, 2])
        assert h.edge_count == 3
        assert canonical_form(g) == canonical_form(h)


class TestCounting:
    def test_examples(self):
        assert count_embeddings(clique(2), materialize(turan(4, 2))) == 8
        assert count_embeddings(path(4), cycle(4)) == 8
        assert count_embeddings(clique(3), materialize(turan(5, 3))) == 24

    def test_copy_examples(self):
        assert count_copies(cycle(4), biclique(4, 4)) == 36
        assert count_copies(clique(2), materialize(turan(5, 2))) == 6
        assert count_copies(path(3), star(3)) == 3

    def test_pattern_larger_than_host_is_zero(self):
        assert count_embeddings(clique(4), clique(3)) == 0

    def test_against_brute_force(self, rng):
        for _ in range(60):
            h = random_graph(rng, rng.randint(1, 4))
            g = random_graph(rng, rng.randint(1, 6))
            assert count_embeddings(h, g) == brute_embeddings(h, g)

    @given(graphs(5), graphs(7))
    def test_copies_times_aut(self, h, g):
        assert count_copies(h, g) * automorphism_count(h) == count_embeddings(h, g)

    @given(graphs(4), graphs(6), st.data())
    def test_monotone_under_edge_addition(self, h, g, data):
        missing = [(i, j) for i in range(g.order) for j in range(i + 1, g.order) if not g.has_edge(i, j)]
        if not missing:
            return
        e = data.draw(st.sampled_from(missing))
        assert count_embeddings(h, g.add_edge(*e)) >= count_embeddings(h, g)

    @given(graphs(8))
    def test_edge_count(self, g):
        assert count_copies(clique(2), g) == g.edge_count


class TestAutomorphisms:
    def test_examples(self):
        assert automorphism_count(cycle(4)) == 8
        assert automorphism_count(path(4)) == 2
        assert automorphism_count(biclique(3, 3)) == 72

    def test_against_networkx(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
            x = to_nx(g)
            expected = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(x, x).isomorphisms_iter())
            assert automorphism_count(g) == expected

    def test_large_symmetric(self):
        from math import factorial
        assert automorphism_count(biclique(32, 32)) == 2 * factorial(32) ** 2
        assert automorphism_count(Graph.empty(20)) == factorial(20)


class TestCanonicalForm:
    def test_relabel_invariance(self, rng):
        for _ in range(10):
            g = random_graph(rng, rng.randint(2, 9))
            form = canonical_form(g)
            for _ in range(100):
                perm = list(range(g.order))
                rng.shuffle(perm)
                assert canonical_form(g.relabel(perm)) == form

    def test_examples(self):
        assert canonical_form(cycle(5)) == canonical_form(cycle(5).relabel([2, 4, 1, 3, 0]))
        assert canonical_form(path(3)) != canonical_form(clique(3))
        assert len({canonical_form(g) for g in all_labeled_graphs(4)}) == 11

    def test_distinguishes_non_isomorphic(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6]
        forms = set()
        for x in atlas:
            g = Graph.from_edges(6, x.edges())
            forms.add(canonical_form(g))
        assert len(forms) == len(atlas) == 156

    def test_form_decodes_to_isomorphic_graph(self, rng):
        from turanlab import graph6
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8))
            h = graph6.decode(canonical_form(g).decode())
            assert nx.is_isomorphic(to_nx(g), to_nx(h))


class TestChromatic:
    def test_examples(self):
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(materialize(turan(7, 3))) == 3
        assert chromatic_number(graph_power(cycle(7), 2)) == 4

    def test_turan_graphs(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                assert chromatic_number(materialize(turan(n, r))) == r

    def test_against_networkx_small(self, rng):
        # brute force: the least k admitting a proper colouring by exhaustive assignment
        from itertools import product
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 7))
            k = next(k for k in range(g.order + 1)
                     if any(all(c[u] != c[v] for u, v in g.edges()) for c in product(range(k), repeat=g.order)))
            assert chromatic_number(g) == k

    def test_empty(self):
        assert chromatic_number(Graph.empty(0)) == 0
        assert chromatic_number(Graph.empty(3)) == 1

    def test_critical(self):
        assert color_critical_edges(cycle(5)) == cycle(5).edges()
        assert color_critical_vertices(cycle(5)) == [0, 1, 2, 3, 4]
        assert color_critical_edges(cycle(6)) == []
        k4e = clique(4).remove_edge(0, 1)
        assert color_critical_vertices(k4e) == [2, 3]

    def test_odd_girth(self):
        assert odd_girth(cycle(9)) == 9
        assert odd_girth(clique(4)) == 3
        assert odd_girth(cycle(6)) is None
        assert cycle(6).is_bipartite() and not cycle(5).is_bipartite()
