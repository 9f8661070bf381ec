from fractions import Fraction

import networkx as nx
import pytest

from turanlab.constructions import (
    BlowupSpec, as_spec, balanced_sizes, biclique, blown_path, bowtie, clique, complete_multipartite,
    cycle, double_star, end_blown_path_power, graph_power, materialize, parse_graph_expr, path, star,
    to_expr, turan, unbalanced_cycle_power_host,
)
from turanlab.errors import ArgumentError, CapacityError, ParseError
from turanlab.graph import Graph, automorphism_count, canonical_form, chromatic_number, has_embedding
from turanlab.oracle import enumerate_graphs


def iso(a, b):
    return a.order == b.order and canonical_form(a) == canonical_form(b)


class TestFamilies:
    def test_path_cycle_clique(self):
        assert path(1) == Graph.empty(1)
        assert cycle(3) == clique(3)
        assert complete_multipartite([2, 2, 1]) == materialize(turan(5, 3))
        assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
        assert cycle(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_bounds(self):
        for bad in (lambda: path(0), lambda: cycle(2), lambda: clique(0), lambda: star(-1)):
            with pytest.raises(ArgumentError):
                bad()
        with pytest.raises(CapacityError):
            path(65)

    def test_double_star(self):
        assert double_star(1, 1) == path(4).relabel([2, 0, 1, 3])
        g = double_star(2, 3)
        assert (g.order, g.edge_count) == (7, 6)
        assert automorphism_count(double_star(2, 2)) == 8

    def test_star_and_biclique(self):
        assert star(3) == biclique(1, 3)
        assert biclique(2, 3).edge_count == 6

    def test_bowtie(self):
        g = bowtie()
        assert (g.order, g.edge_count, chromatic_number(g)) == (5, 6, 3)

    def test_graph_power(self):
        assert graph_power(path(4), 2).edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        assert graph_power(cycle(5), 2) == clique(5)
        c72 = graph_power(cycle(7), 2)
        assert c72.edge_count == 14 and chromatic_number(c72) == 4

    def test_power_of_diameter_is_union_of_cliques(self, rng):
        for _ in range(30):
            n = rng.randint(1, 9)
            g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.25])
            x = nx.Graph(g.edges())
            x.add_nodes_from(range(n))
            diam = max([nx.diameter(x.subgraph(c)) for c in nx.connected_components(x)] + [1])
            p = graph_power(g, diam)
            for comp in g.components():
                members = [v for v in range(n) if comp >> v & 1]
                for v in members:
                    assert p.adj[v] == comp & ~(1 << v)


class TestBlowups:
    def test_turan(self):
        assert turan(7, 3).sizes == (3, 2, 2)
        assert materialize(turan(4, 2)) == biclique(2, 2)
        assert materialize(turan(5, 2)).edge_count == 6
        with pytest.raises(ArgumentError):
            turan(2, 3)

    def test_turan_edge_counts(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                edges = materialize(turan(n, r)).edge_count
                parts = turan(n, r).sizes
                assert edges == n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in parts)
                bound = ((r - 1) * n * n) // (2 * r)
                assert edges <= bound
                if n % r == 0 or r == 2:
                    assert edges == bound

    def test_turan_floor_formula_is_not_exact(self):
        # T(12, 8) has classes 2,2,2,2,1,1,1,1: 66 - 4 = 62 edges, one short of the floor bound
        assert materialize(turan(12, 8)).edge_count == 62
        assert (7 * 144) // 16 == 63

    def test_materialize(self):
        assert materialize(BlowupSpec(clique(2), (3, 4))) == biclique(3, 4)
        assert materialize(as_spec(cycle(5))) == cycle(5)
        assert materialize(BlowupSpec(path(3), (2, 2, 2))).edge_count == 8
        with pytest.raises(CapacityError):
            materialize(BlowupSpec(clique(2), (40, 40)))

    def test_spec_invariants(self):
        with pytest.raises(ArgumentError):
            BlowupSpec(clique(2), (1, 0))
        with pytest.raises(ArgumentError):
            BlowupSpec(clique(2), (1,))

    def test_end_blown_path_power(self):
        s = end_blown_path_power(4, 2, 1)
        assert s.base == path(4) and s.sizes == (1, 1, 1, 1)
        s = end_blown_path_power(6, 3, 2)
        assert s.base.edge_count == 9 and s.sizes == (2, 1, 1, 1, 1, 2)
        assert end_blown_path_power(8, 3, 35).total == 76
        with pytest.raises(ArgumentError):
            end_blown_path_power(2, 2, 1)

    def test_blown_path(self):
        assert materialize(blown_path(2, 1, 3, 1)) == biclique(3, 1)
        assert blown_path(4, 2, 2, 2).sizes == (2, 2, 2, 2)
        assert blown_path(4, 3, 5, 4).sizes == (5, 3, 3, 4)
        with pytest.raises(ArgumentError):
            blown_path(3, 1, 1, 1)

    def test_unbalanced_host(self, rng):
        assert unbalanced_cycle_power_host(5, 2, 1, 10, 100).sizes == (10, 10, 10, 10, 60)
        h = unbalanced_cycle_power_host(7, 3, 1, 20, 10000)
        assert h.sizes == (500,) * 6 + (7000,) and h.base == graph_power(cycle(7), 2)
        for _ in range(50):
            k = rng.randint(3, 10)
            den = rng.randint(k, 40)
            num = rng.randint(1, max(1, (den - 1) // (k - 1)))
            if Fraction(num, den) >= Fraction(1, k - 1):
                continue
            n = rng.randint(k * den, 10 ** 9)
            assert unbalanced_cycle_power_host(k, 2, num, den, n).total == n

    def test_unbalanced_host_errors(self):
        with pytest.raises(ArgumentError):
            unbalanced_cycle_power_host(5, 2, 1, 4, 100)
        with pytest.raises(ArgumentError):
            unbalanced_cycle_power_host(5, 2, 1, 10, 20)

    def test_blowups_of_triangle_free_stay_triangle_free(self, rng):
        k3 = clique(3)
        for n in range(1, 7):
            for b in enumerate_graphs(n):
                sizes = tuple(rng.randint(1, 3) for _ in range(n))
                assert has_embedding(k3, materialize(BlowupSpec(b, sizes))) == has_embedding(k3, b)

    def test_balanced_sizes(self):
        assert balanced_sizes(10, 3) == (4, 3, 3)


class TestGrammar:
    def test_examples(self):
        assert parse_graph_expr("pow(path(4),2)") == graph_power(path(4), 2)
        host = parse_graph_expr("blow(pow(cycle(7),2),[500,500,500,500,500,500,7000])")
        assert host == unbalanced_cycle_power_host(7, 3, 1, 20, 10000)
        with pytest.raises(ParseError, match="size vector length"):
            parse_graph_expr("blow(path(3),[2])")

    def test_all_constructors(self):
        assert parse_graph_expr(" clique( 4 ) ") == clique(4)
        assert parse_graph_expr("biclique(2,3)") == biclique(2, 3)
        assert parse_graph_expr("star(3)") == star(3)
        assert parse_graph_expr("dstar(2,1)") == double_star(2, 1)
        assert parse_graph_expr("turan(7,3)") == turan(7, 3)
        assert parse_graph_expr("g6:Bw") == clique(3)

    @pytest.mark.parametrize("text,offset", [
        ("cycle(4", 7),
        ("clique(2,3)", 0),
        ("foo(3)", 0),
        ("path(x)", 5),
        ("path(3) extra", 8),
        ("blow(path(2),[1,0])", 14),
        ("g6:", 3),
    ])
    def test_errors_carry_offsets(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_graph_expr(text)
        assert info.value.offset == offset
        assert f"at byte {offset}" in str(info.value)

    def test_round_trip(self):
        objs = [path(5), cycle(7), clique(6), biclique(3, 4), star(5), double_star(2, 3), bowtie(),
                graph_power(cycle(9), 3), turan(12, 5), blown_path(6, 2, 3, 1), end_blown_path_power(5, 3, 2)]
        for obj in objs:
            back = parse_graph_expr(to_expr(obj))
            if isinstance(obj, BlowupSpec):
                assert back == obj
            else:
                assert iso(back, obj)
