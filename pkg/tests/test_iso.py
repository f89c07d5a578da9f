from itertools import combinations

import networkx as nx
import pytest

from catalog.families import FamilySpec, all_specs_up_to, construct
from graphs.codecs import encode_graph6
from graphs.graph import Graph, from_edge_list, to_networkx
from iso.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_labeling,
    find_isomorphism,
)
from oracles import brute_force_isomorphic, labeled_graphs, shuffled


def _is_isomorphism(perm, g, h):
    if sorted(perm) != list(range(g.order)):
        return False
    mapped = {
        (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges()
    }
    return mapped == set(h.edges())


class TestCanonicalForm:
    def test_invariant_under_relabeling(self, rng, p10, m11):
        for g in (p10, m11, Graph.complete_bipartite(2, 7)):
            for _ in range(5):
                assert canonical_form(shuffled(g, rng)) == canonical_form(g)

    def test_single_vertex(self):
        k1 = Graph.empty(1)
        assert canonical_form(k1).graph6 == encode_graph6(k1).decode()

    def test_all_triangles_on_three_vertices(self):
        forms = {
            canonical_form(g)
            for g in labeled_graphs(3)
            if g.edge_count() == 3
        }
        assert len(forms) == 1

    def test_labeling_realizes_form(self, m11):
        form, perm = canonical_labeling(m11)
        assert encode_graph6(m11.permute(perm)).decode() == form.graph6

    @pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11),
                                           (5, 34)])
    def test_counts_isomorphism_classes(self, n, classes):
        forms = {canonical_form(g) for g in labeled_graphs(n)}
        assert len(forms) == classes

    @pytest.mark.slow
    def test_counts_isomorphism_classes_order_six(self):
        assert len({canonical_form(g) for g in labeled_graphs(6)}) == 156

    def test_catalog_members_are_distinct(self):
        forms = [canonical_form(construct(spec))
                 for spec in all_specs_up_to(12)]
        assert len(forms) == len(set(forms))


class TestIsomorphism:
    def test_relabeled_cycle(self, rng, c5):
        h = shuffled(c5, rng)
        perm = find_isomorphism(c5, h)
        assert perm is not None
        assert _is_isomorphism(perm, c5, h)

    def test_different_sizes(self, k33):
        assert not are_isomorphic(k33, Graph.cycle(6))

    def test_c5_attachments_are_symmetric(self):
        assert are_isomorphic(
            construct(FamilySpec.c5attach(1, 0)),
            construct(FamilySpec.c5attach(0, 1)),
        )

    def test_same_degrees_not_isomorphic(self):
        # C6 e dois triângulos disjuntos: 2-regulares com 6 vértices
        two_triangles = from_edge_list(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert find_isomorphism(Graph.cycle(6), two_triangles) is None

    def test_witness_maps_edges_and_non_edges(self, rng, p10):
        for _ in range(10):
            h = shuffled(p10, rng)
            assert _is_isomorphism(find_isomorphism(p10, h), p10, h)

    def test_agrees_with_permutation_oracle(self, rng):
        graphs = []
        for _ in range(40):
            n = rng.randint(4, 7)
            edges = [p for p in combinations(range(n), 2)
                     if rng.random() < 0.5]
            graphs.append(from_edge_list(n, edges))
        for g, h in combinations(graphs, 2):
            assert are_isomorphic(g, h) == brute_force_isomorphic(g, h)

    @pytest.mark.slow
    @pytest.mark.parametrize("edges, classes", [(5, 21), (6, 41)])
    def test_exhaustive_order_seven(self, edges, classes):
        pairs = list(combinations(range(7), 2))
        representatives = {}
        for chosen in combinations(pairs, edges):
            g = from_edge_list(7, chosen)
            representatives.setdefault(canonical_form(g), g)
        assert len(representatives) == classes
        graphs = [to_networkx(g) for g in representatives.values()]
        for a, b in combinations(graphs, 2):
            assert not nx.is_isomorphic(a, b)

    def test_agrees_with_networkx(self, rng):
        for _ in range(30):
            n = rng.randint(6, 11)
            edges = [p for p in combinations(range(n), 2)
                     if rng.random() < 0.35]
            g = from_edge_list(n, edges)
            h = shuffled(g, rng) if rng.random() < 0.5 else from_edge_list(
                n, [p for p in combinations(range(n), 2)
                    if rng.random() < 0.35]
            )
            assert are_isomorphic(g, h) == nx.is_isomorphic(
                to_networkx(g), to_networkx(h)
            )

