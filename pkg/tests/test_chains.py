import pytest
from hypothesis import given, settings, strategies as st

from cutchain.chains import (
    ChainError,
    ChainOfCycles,
    ComponentPart,
    Cycle,
    assemble_components,
    build_chain,
    canonical_layout,
    random_chain,
    random_subgraph,
    underlying_graph,
    validate_chain,
    verify_embedding,
)
from cutchain.graphs import Graph, make_graph
from cutchain.layouts import (
    LinearLayout,
    cut_profile,
    exact_cutwidth,
    find_width2_layout,
    layout_width,
    separating_vertices,
)

from _helpers import chains, complete_graph, graphs, path_graph, star_graph


def triangle_chain():
    return ChainOfCycles((Cycle((1, 2, 3), 1, 2),))


def two_triangles():
    return ChainOfCycles((Cycle((1, 2, 3), 1, 3), Cycle((3, 4, 5), 3, 5)))


class TestValidateChain:
    def test_single_triangle_ok(self):
        assert validate_chain(triangle_chain()) == []

    def test_shared_junction_ok(self):
        assert validate_chain(two_triangles()) == []

    def test_two_shared_vertices_rejected(self):
        bad = ChainOfCycles((Cycle((1, 2, 3), 1, 3), Cycle((3, 2, 4), 3, 4)))
        assert any("intersect exactly" in v for v in validate_chain(bad))

    def test_junction_mismatch_rejected(self):
        bad = ChainOfCycles((Cycle((1, 2, 3), 1, 2), Cycle((3, 4, 5), 3, 5)))
        violations = validate_chain(bad)
        assert any("ends at b=2 but cycle 2 starts at a=3" in v for v in violations)

    def test_far_cycles_must_be_disjoint(self):
        bad = ChainOfCycles(
            (
                Cycle((1, 2, 3), 1, 3),
                Cycle((3, 4, 5), 3, 5),
                Cycle((5, 6, 1), 5, 6),
            )
        )
        assert any("must be disjoint" in v for v in validate_chain(bad))

    def test_degenerate_cycles_rejected(self):
        assert any("at least 3" in v for v in validate_chain(ChainOfCycles((Cycle((1, 2), 1, 2),))))
        assert any("coincide" in v for v in validate_chain(ChainOfCycles((Cycle((1, 2, 3), 1, 1),))))
        assert any("no cycles" in v for v in validate_chain(ChainOfCycles(())))


class TestUnderlyingGraph:
    def test_triangle(self):
        g, names = underlying_graph(triangle_chain())
        assert g == complete_graph(3)
        assert names == {1: 1, 2: 2, 3: 3}

    def test_bowtie(self):
        g, _ = underlying_graph(two_triangles())
        assert (g.n, g.m) == (5, 6)

    def test_three_triangles(self):
        chain = ChainOfCycles(
            (Cycle((1, 2, 3), 1, 3), Cycle((3, 4, 5), 3, 5), Cycle((5, 6, 7), 5, 7))
        )
        g, _ = underlying_graph(chain)
        assert (g.n, g.m) == (7, 9)

    def test_renumbers_sparse_ids(self):
        chain = ChainOfCycles((Cycle((10, 20, 30), 10, 30),))
        g, names = underlying_graph(chain)
        assert g == complete_graph(3)
        assert names == {10: 1, 20: 2, 30: 3}

    def test_rejects_invalid_chain(self):
        with pytest.raises(ChainError):
            underlying_graph(ChainOfCycles((Cycle((1, 2), 1, 2),)))


class TestCanonicalLayout:
    def test_triangle_profile(self):
        chain = ChainOfCycles((Cycle((1, 2, 3), 1, 3),))
        g, _ = underlying_graph(chain)
        layout = canonical_layout(chain)
        assert layout == LinearLayout((1, 2, 3))
        assert cut_profile(g, layout) == (2, 2)

    def test_c5_width_exactly_2(self):
        chain = ChainOfCycles((Cycle((1, 2, 3, 4, 5), 1, 3),))
        g, _ = underlying_graph(chain)
        assert layout_width(g, canonical_layout(chain)) == 2

    def test_two_triangles_width_2(self):
        g, _ = underlying_graph(two_triangles())
        assert g.n == 5
        assert layout_width(g, canonical_layout(two_triangles())) == 2

    @settings(max_examples=120, deadline=None)
    @given(chains(max_cycles=6, max_len=9))
    def test_always_width_at_most_2(self, chain):
        assert validate_chain(chain) == []
        g, _ = underlying_graph(chain)
        assert layout_width(g, canonical_layout(chain)) <= 2


class TestVerifyEmbedding:
    def test_identity_on_underlying_graph(self):
        chain = two_triangles()
        g, names = underlying_graph(chain)
        embedding = {graph_v: chain_id for chain_id, graph_v in names.items()}
        assert verify_embedding(g, chain, embedding) == []

    def test_collision_detected(self):
        chain = triangle_chain()
        g = make_graph(2, [(1, 2)])
        problems = verify_embedding(g, chain, {1: 1, 2: 1})
        assert any("both map" in p for p in problems)

    def test_missing_edge_detected(self):
        chain = two_triangles()
        g = make_graph(5, [(1, 5)])
        problems = verify_embedding(g, chain, {v: v for v in range(1, 6)})
        assert any("not a chain edge" in p for p in problems)

    def test_off_chain_image_detected(self):
        chain = triangle_chain()
        g = Graph(1, frozenset())
        assert any("not on the chain" in p for p in verify_embedding(g, chain, {1: 9}))


class TestBuildChain:
    def test_triangle_is_its_own_chain(self):
        tri = complete_graph(3)
        chain, embedding = build_chain(tri, LinearLayout((1, 2, 3)))
        assert len(chain.cycles) == 1
        assert chain.cycles[0] == Cycle((1, 2, 3), 1, 3)
        assert embedding == {1: 1, 2: 2, 3: 3}

    def test_p4_identity_gives_three_dummy_triangles(self):
        # all four positions separate, so each edge becomes its own cycle
        p4 = path_graph(4)
        chain, embedding = build_chain(p4, LinearLayout((1, 2, 3, 4)))
        assert [c.vertices for c in chain.cycles] == [(1, 2, 5), (2, 3, 6), (3, 4, 7)]
        assert validate_chain(chain) == []
        assert verify_embedding(p4, chain, embedding) == []

    def test_path_closure_when_interior_is_covered(self):
        # layout 1,3,2 spans position 2, leaving only the two end separators
        p3 = path_graph(3)
        chain, embedding = build_chain(p3, LinearLayout((1, 3, 2)))
        assert len(chain.cycles) == 1
        assert verify_embedding(p3, chain, embedding) == []

    def test_bowtie_splits_at_shared_vertex(self):
        bowtie = make_graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
        chain, embedding = build_chain(bowtie, LinearLayout((1, 2, 3, 4, 5)))
        assert len(chain.cycles) == 2
        assert chain.cycles[0].b == chain.cycles[1].a == 3
        assert validate_chain(chain) == []
        assert verify_embedding(bowtie, chain, embedding) == []

    def test_star_with_spread_layout(self):
        star = star_graph(3)
        chain, embedding = build_chain(star, LinearLayout((2, 1, 3, 4)))
        assert [c.vertices for c in chain.cycles] == [(1, 2, 5), (3, 2, 4)]
        assert embedding == {1: 2, 2: 1, 3: 3, 4: 4}
        assert verify_embedding(star, chain, embedding) == []

    def test_rejects_wide_layout(self):
        with pytest.raises(ValueError, match="width"):
            build_chain(complete_graph(4), LinearLayout((1, 2, 3, 4)))

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError, match="connected"):
            build_chain(make_graph(4, [(1, 2), (3, 4)]), LinearLayout((1, 2, 3, 4)))

    def test_rejects_single_vertex(self):
        with pytest.raises(ValueError, match="2 vertices"):
            build_chain(Graph(1, frozenset()), LinearLayout((1,)))

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=2, max_n=7))
    def test_soundness_on_searchable_graphs(self, g):
        from cutchain.graphs import connected_components

        if len(connected_components(g)) != 1:
            return
        layout = find_width2_layout(g)
        if layout is None:
            return
        chain, embedding = build_chain(g, layout)
        assert validate_chain(chain) == []
        assert verify_embedding(g, chain, embedding) == []
        seps = separating_vertices(g, layout)
        assert len(chain.cycles) == len(seps) - 1
        assert embedding[layout.order[0]] == chain.cycles[0].a
        assert embedding[layout.order[-1]] == chain.cycles[-1].b


def _part_for(g):
    layout = find_width2_layout(g)
    chain, embedding = build_chain(g, layout)
    return ComponentPart(g, tuple(g.vertices), chain, embedding)


class TestAssembleComponents:
    def test_single_part_unchanged(self):
        part = _part_for(complete_graph(3))
        chain, embedding = assemble_components([part])
        assert chain == part.chain
        assert embedding == part.embedding

    def test_two_triangles_get_a_spacer(self):
        tri = complete_graph(3)
        part1 = _part_for(tri)
        part2 = ComponentPart(tri, (4, 5, 6), part1.chain, part1.embedding)
        chain, embedding = assemble_components([part1, part2])
        assert len(chain.cycles) == 3
        assert validate_chain(chain) == []
        host = make_graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
        assert verify_embedding(host, chain, embedding) == []

    def test_triangle_plus_isolated_vertex(self):
        part1 = _part_for(complete_graph(3))
        part2 = ComponentPart(Graph(1, frozenset()), (4,), None, None)
        chain, embedding = assemble_components([part1, part2])
        assert len(chain.cycles) == 2
        assert embedding[4] in set(chain.cycles[1].vertices)
        assert embedding[4] not in (chain.cycles[1].a, chain.cycles[1].b)
        host = make_graph(4, [(1, 2), (1, 3), (2, 3)])
        assert verify_embedding(host, chain, embedding) == []

    def test_isolated_first_then_triangle(self):
        part1 = ComponentPart(Graph(1, frozenset()), (1,), None, None)
        tri = complete_graph(3)
        base = _part_for(tri)
        part2 = ComponentPart(tri, (2, 3, 4), base.chain, base.embedding)
        chain, embedding = assemble_components([part1, part2])
        assert validate_chain(chain) == []
        host = make_graph(4, [(2, 3), (2, 4), (3, 4)])
        assert verify_embedding(host, chain, embedding) == []

    def test_chain_length_formula(self):
        tri = complete_graph(3)
        base = _part_for(tri)
        parts = [
            ComponentPart(tri, (1, 2, 3), base.chain, base.embedding),
            ComponentPart(Graph(1, frozenset()), (4,), None, None),
            ComponentPart(tri, (5, 6, 7), base.chain, base.embedding),
            ComponentPart(Graph(1, frozenset()), (8,), None, None),
        ]
        chain, _ = assemble_components(parts)
        # one spacer per part after the first: 3 joins plus 2 part cycles
        assert len(chain.cycles) == 1 + 1 + (1 + 1) + 1

    def test_rejects_overlapping_ids(self):
        part = _part_for(complete_graph(3))
        with pytest.raises(ValueError, match="overlap"):
            assemble_components([part, part])

    def test_rejects_invalid_part(self):
        part = _part_for(complete_graph(3))
        broken = ComponentPart(part.graph, (4, 5, 6), part.chain, {1: 1, 2: 1, 3: 3})
        with pytest.raises(ValueError, match="embedding"):
            assemble_components([broken])


class TestRandomChain:
    def test_smallest_case_is_triangle(self):
        chain = random_chain(1, 3, seed=0)
        assert len(chain.cycles) == 1
        assert len(chain.cycles[0].vertices) == 3

    def test_deterministic(self):
        assert random_chain(4, 8, seed=5) == random_chain(4, 8, seed=5)

    @pytest.mark.parametrize("seed", range(8))
    def test_generated_chains_validate(self, seed):
        assert validate_chain(random_chain(5, 9, seed)) == []

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            random_chain(0, 5, 1)
        with pytest.raises(ValueError):
            random_chain(2, 2, 1)


class TestRandomSubgraph:
    def test_keep_all(self):
        chain = random_chain(3, 6, seed=11)
        g, _ = underlying_graph(chain)
        assert random_subgraph(chain, 1.0, seed=0) == g

    def test_keep_none(self):
        chain = random_chain(3, 6, seed=11)
        g, _ = underlying_graph(chain)
        sub = random_subgraph(chain, 0.0, seed=0)
        assert sub.n == g.n and sub.m == 0

    @pytest.mark.parametrize("seed", range(6))
    def test_subgraphs_have_cutwidth_at_most_2(self, seed):
        chain = random_chain(2, 6, seed=seed)
        sub = random_subgraph(chain, 0.6, seed=seed + 100)
        assert exact_cutwidth(sub).width <= 2

    def test_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            random_subgraph(random_chain(1, 3, 0), -0.1, 0)
