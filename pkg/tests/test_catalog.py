import pytest

from catalog.families import (
    FamilySpec,
    Kind,
    all_members_with_order,
    all_specs_up_to,
    construct,
    fixture_letters,
    order_and_size,
)
from catalog.fixtures import FIXTURES
from dictionary.exceptions import ParamOutOfRange, UnknownFamily
from graphs.graph import Graph, diameter, is_triangle_free
from iso.canonical import are_isomorphic
from minor.obstructions import obstruction_certificate
from minor.search import find_minor


class TestFamilySpec:
    @pytest.mark.parametrize("text", [
        "k1n:5", "k2n:2", "c5:0,3", "k33", "k34", "k33s:2", "k34s:1",
        "p10", "w8", "w8p", "m11", "m11m", "m11e", "k34star", "f0", "f3",
    ])
    def test_parse_and_str(self, text):
        assert str(FamilySpec.parse(text)) == text

    def test_parse_is_case_insensitive(self):
        assert FamilySpec.parse(" P10 ") == FamilySpec.special("P10")

    @pytest.mark.parametrize("text", ["k5", "k1n:", "c5:1,2,3", "petersen"])
    def test_unknown_names(self, text):
        with pytest.raises(UnknownFamily):
            FamilySpec.parse(text)

    @pytest.mark.parametrize("text", [
        "k1n:1", "k2n:1", "k33s:0", "k34s:0", "c5:1",
    ])
    def test_parameters_out_of_range(self, text):
        with pytest.raises(ParamOutOfRange):
            FamilySpec.parse(text)

    def test_unknown_fixed_graph(self):
        with pytest.raises(UnknownFamily):
            FamilySpec.special("F0")

    def test_normalized(self):
        assert FamilySpec.c5attach(3, 1).normalized() == \
            FamilySpec.c5attach(1, 3)
        assert FamilySpec.c5attach(1, 3).normalized() == \
            FamilySpec.c5attach(1, 3)
        assert FamilySpec.star(4).normalized() == FamilySpec.star(4)

    def test_fixture_letters(self):
        assert fixture_letters(FamilySpec.special("M11minus")) == \
            "abcdefghik"
        assert fixture_letters(FamilySpec.k33()) is None


class TestConstruct:
    def test_sizes_match_construction(self):
        for spec in all_specs_up_to(16):
            g = construct(spec)
            assert (g.order, g.edge_count()) == order_and_size(spec)

    @pytest.mark.parametrize("name,order,size", [
        ("P10", 10, 15),
        ("W8", 8, 12),
        ("W8plus", 9, 15),
        ("M11", 11, 20),
        ("M11minus", 10, 17),
        ("M11eq", 9, 14),
        ("K34star", 8, 13),
    ])
    def test_special_sizes(self, name, order, size):
        g = construct(FamilySpec.special(name))
        assert (g.order, g.edge_count()) == (order, size)

    def test_labeling_conventions(self):
        star = construct(FamilySpec.star(4))
        assert star.degree(0) == 4
        k2n = construct(FamilySpec.biclique2(3))
        assert k2n.degree(0) == k2n.degree(1) == 3
        c5 = construct(FamilySpec.c5attach(1, 1))
        assert c5.neighbor_list(5) == [0, 2]
        assert c5.neighbor_list(6) == [0, 3]

    def test_subdivision_replaces_one_edge(self):
        g = construct(FamilySpec.k33sub(2))
        assert not g.adjacent(0, 3)
        assert g.neighbor_list(6) == [0, 3]
        assert g.neighbor_list(7) == [0, 3]

    def test_c5_with_no_attachments(self):
        assert construct(FamilySpec.c5attach(0, 0)) == Graph.cycle(5)

    def test_members_are_triangle_free_diameter_two(self):
        for spec in all_specs_up_to(20):
            g = construct(spec)
            if g.order == 1:
                continue
            assert is_triangle_free(g), spec
            if g.order > 2:
                assert diameter(g) == 2, spec

    def test_auxiliary_graphs_contain_an_obstruction(self):
        for name in ("F1", "F2", "F3"):
            g = construct(FamilySpec.aux(name))
            assert obstruction_certificate(g) is not None, name

    def test_fixture_edges_are_distinct(self):
        for fixture in FIXTURES.values():
            pairs = [frozenset(p) for p in fixture.edge_pairs()]
            assert len(pairs) == len(set(pairs))


class TestMembership:
    def test_order_listing_precedence(self):
        kinds = [spec.kind for spec in all_members_with_order(7)]
        assert kinds == [
            Kind.STAR, Kind.BICLIQUE2, Kind.K34, Kind.K33SUB, Kind.C5ATTACH,
            Kind.C5ATTACH,
        ]

    def test_no_auxiliary_member(self):
        assert all(spec.kind is not Kind.AUX
                   for spec in all_specs_up_to(14))

    def test_small_orders(self):
        assert all_members_with_order(1) == []
        assert all_members_with_order(3) == [FamilySpec.star(2)]

    def test_m11_minus_is_subgraph_of_m11(self, m11):
        minus = construct(FamilySpec.special("M11minus"))
        assert are_isomorphic(minus, m11.without_vertex(9))

    def test_m11_eq_drops_two_vertices_of_m11(self, m11):
        eq = construct(FamilySpec.special("M11eq"))
        kept = [v for v in range(m11.order) if v not in (8, 9)]
        assert m11.induced_subgraph(kept) == eq
        assert are_isomorphic(eq, m11.without_vertex(9).without_vertex(8))

    def test_w8_plus_restricts_to_w8(self):
        plus = construct(FamilySpec.special("W8plus"))
        w8 = construct(FamilySpec.special("W8"))
        assert plus.induced_subgraph(range(8)) == w8
        assert are_isomorphic(plus.without_vertex(8), w8)
        assert plus.degree(8) == 3

    def test_k34star_contains_k34_as_minor(self, k34):
        host = construct(FamilySpec.special("K34star"))
        assert find_minor(k34, host) is not None

    def test_members_avoid_obstructions(self):
        for spec in all_specs_up_to(9):
            assert obstruction_certificate(construct(spec)) is None, spec

    @pytest.mark.slow
    def test_members_avoid_obstructions_up_to_fourteen(self):
        for k in range(10, 15):
            for spec in all_members_with_order(k):
                g = construct(spec)
                assert obstruction_certificate(g) is None, spec
