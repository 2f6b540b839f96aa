import pytest

from spcube import (
    Multigraph,
    add_leaf,
    add_loop,
    apply_operation,
    blocks,
    contract,
    delete_edge,
    duplicate_edge,
    graph_from_json,
    graph_to_json,
    has_k4_minor,
    is_isomorphic,
    is_series_parallel,
    is_two_connected,
    minor,
    one_sum,
    permute_edges,
    spanning_trees,
    subdivide_edge,
    tree_count,
    two_sum,
)
from spcube import catalog
from spcube.verify import (
    check_blocks_partition,
    check_deletion_contraction,
    check_sp_closure,
    check_sp_vs_minor,
    check_tree_count_routes,
    check_tree_weights,
)


def masks_to_strings(masks, width):
    return {"".join("1" if m >> j & 1 else "0" for j in range(width)) for m in masks}


class TestSpanningTrees:
    def test_k4_minus_edge_worked_example(self):
        g = catalog.k4_minus_edge()
        got = masks_to_strings(spanning_trees(g), 5)
        assert got == {
            "01110", "10110", "11010", "11100",
            "01011", "01101", "10101", "10011",
        }

    def test_c2(self):
        assert masks_to_strings(spanning_trees(catalog.c2()), 2) == {"10", "01"}

    def test_single_vertex_with_loop(self):
        g = Multigraph(1, ((0, 0),))
        assert spanning_trees(g) == [0]

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            spanning_trees(Multigraph(2, ()))

    def test_sorted_deterministic(self):
        masks = spanning_trees(catalog.k4_minus_edge())
        assert masks == sorted(masks)


class TestMinor:
    def test_contract_e5(self):
        g = contract(catalog.k4_minus_edge(), 4)
        assert masks_to_strings(spanning_trees(g), 4) == {"0101", "0110", "1001", "1010"}

    def test_delete_e5(self):
        g = delete_edge(catalog.k4_minus_edge(), 4)
        assert masks_to_strings(spanning_trees(g), 4) == {"0111", "1011", "1101", "1110"}

    def test_contract_c2_gives_loop(self):
        g = minor(catalog.c2(), 0, "contract")
        assert g.n == 1 and g.edges == ((0, 0),)

    def test_contract_loop_rejected(self):
        with pytest.raises(ValueError):
            contract(Multigraph(1, ((0, 0),)), 0)

    def test_bad_index_rejected(self):
        with pytest.raises(ValueError):
            minor(catalog.c2(), 5, "delete")

    def test_edge_count_drops_by_one(self):
        g = catalog.k4_minus_edge()
        assert contract(g, 2).e == g.e - 1
        assert delete_edge(g, 2).e == g.e - 1


class TestOperations:
    def test_duplicate_c2(self):
        g = duplicate_edge(catalog.c2(), 1)
        assert g.edges == ((0, 1),) * 3
        assert masks_to_strings(spanning_trees(g), 3) == {"100", "010", "001"}

    def test_subdivide_c2_gives_triangle(self):
        g = subdivide_edge(catalog.c2(), 1)
        assert masks_to_strings(spanning_trees(g), 3) == {"110", "101", "011"}

    def test_leaf_then_loop(self):
        g = add_loop(add_leaf(catalog.k1(), 0), 0)
        assert masks_to_strings(spanning_trees(g), 2) == {"10"}

    def test_pair_occupies_i_and_next(self):
        g = catalog.k4_minus_edge()
        d = duplicate_edge(g, 1)
        assert d.edges[1] == d.edges[2] == g.edges[1]
        assert d.edges[3:] == g.edges[2:]
        s = subdivide_edge(g, 1)
        assert s.edges[:1] == g.edges[:1]
        assert s.edges[3:] == g.edges[2:]

    def test_marked_edge_protected(self):
        g = catalog.c2_marked()
        with pytest.raises(ValueError):
            duplicate_edge(g, 0)
        with pytest.raises(ValueError):
            subdivide_edge(g, 0)
        assert duplicate_edge(g, 1).distinguished == 0

    def test_mark_shifts_when_pair_inserted_before(self):
        g = Multigraph(3, ((0, 1), (1, 2), (0, 2)), distinguished=2)
        assert duplicate_edge(g, 0).distinguished == 3

    def test_apply_operation_dispatch(self):
        g = catalog.c2()
        assert apply_operation(g, ("duplicate", 0)).e == 3
        assert apply_operation(g, ("subdivide", 0)).n == 3
        assert apply_operation(g, ("loop", 1)).edges[-1] == (1, 1)
        assert apply_operation(g, ("leaf", 0)).n == 3


class TestBlocks:
    def test_triangle_with_pendant(self):
        g = add_leaf(catalog.triangle(), 0)
        bs = blocks(g)
        assert len(bs) == 2
        assert sorted(len(b.edge_indices) for b in bs) == [1, 3]

    def test_k4_minus_edge_single_block(self):
        g = catalog.k4_minus_edge()
        assert is_two_connected(g)
        assert len(blocks(g)) == 1

    def test_two_triangles_sharing_vertex(self):
        g = one_sum(catalog.triangle(), 0, catalog.triangle(), 0)
        bs = blocks(g)
        assert len(bs) == 2
        assert all(len(b.edge_indices) == 3 for b in bs)

    def test_loops_are_blocks(self):
        g = add_loop(catalog.c2(), 0)
        bs = blocks(g)
        assert len(bs) == 2
        assert any(b.graph.edges == ((0, 0),) for b in bs)


class TestSeriesParallel:
    def test_k4_minus_edge(self):
        assert is_series_parallel(catalog.k4_minus_edge())

    def test_k4_is_not(self):
        assert not is_series_parallel(catalog.k4_x16())
        assert has_k4_minor(catalog.k4_x16())

    def test_tripled_edge(self):
        assert is_series_parallel(catalog.parallel_edges(3))

    def test_star_with_loop(self):
        g = Multigraph(4, ((0, 1), (0, 2), (0, 3), (0, 0)))
        assert is_series_parallel(g)

    def test_k4_plus_decorations_still_detected(self):
        g = add_loop(add_leaf(catalog.k4_x16(), 2), 0)
        assert not is_series_parallel(g)


class TestTwoSum:
    def test_c2_c2_gives_triple_edge(self):
        # identifying the marked edges merges both endpoint pairs, so two
        # 2-cycles glue into the 3-parallel-edge graph on 2 vertices
        g = two_sum(catalog.c2_marked(), catalog.c2_marked())
        assert (g.n, g.e, g.distinguished) == (2, 3, 0)
        assert g.edges == ((0, 1),) * 3
        # consistent with the term calculus: the glued pattern graph is the
        # product-join of two single edges (checked in the gluing suite)

    def test_triangle_c2(self):
        tri = Multigraph(3, ((0, 1), (1, 2), (0, 2)), distinguished=0)
        g = two_sum(tri, catalog.c2_marked())
        # gluing a 2-cycle onto a triangle edge doubles that edge
        assert (g.n, g.e) == (3, 4)
        want = Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)), distinguished=0)
        assert is_isomorphic(g, want, use_distinguished=True)

    def test_edge_count_arithmetic(self):
        tri = Multigraph(3, ((0, 1), (1, 2), (0, 2)), distinguished=0)
        assert two_sum(catalog.c2_marked(), tri).e == 2 + 3 - 1

    def test_requires_marks(self):
        with pytest.raises(ValueError):
            two_sum(catalog.c2(), catalog.c2_marked())


class TestMarkedInvariants:
    def test_loop_mark_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(1, ((0, 0),), distinguished=0)

    def test_bridge_mark_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(2, ((0, 1),), distinguished=0)

    def test_valid_mark(self):
        g = catalog.c2_marked()
        assert g.distinguished == 0


class TestIsomorphism:
    def test_respects_marks(self):
        # 4-cycle with doubled edge: mark on the doubled pair vs opposite it
        a = Multigraph(4, ((0, 1), (0, 1), (0, 2), (2, 3), (1, 3)), distinguished=0)
        b = Multigraph(4, ((0, 1), (0, 2), (2, 3), (2, 3), (1, 3)), distinguished=0)
        assert is_isomorphic(a, b, use_distinguished=False)
        assert not is_isomorphic(a, b, use_distinguished=True)

    def test_permutation_invariance(self):
        g = catalog.k4_minus_edge()
        h = permute_edges(g, (4, 3, 2, 1, 0))
        assert is_isomorphic(g, h)

    def test_loop_vs_parallel_distinguished(self):
        a = Multigraph(2, ((0, 0), (0, 1)))
        b = Multigraph(2, ((0, 1), (0, 1)))
        assert not is_isomorphic(a, b)


class TestJson:
    def test_round_trip(self):
        g = catalog.k4_y18()
        assert graph_from_json(graph_to_json(g)) == g

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            graph_from_json("[1,2,3]")


class TestTreeCount:
    def test_matches_enumeration(self):
        for g in (catalog.k4_minus_edge(), catalog.triangle(), catalog.c2()):
            assert tree_count(g) == len(spanning_trees(g))

    def test_k4_cayley(self):
        assert tree_count(catalog.k4_x16()) == 16


class TestPropertySuites:
    def test_deletion_contraction(self):
        assert check_deletion_contraction(max_edges=6) == []

    def test_tree_weights(self):
        assert check_tree_weights(max_edges=6) == []

    def test_tree_count_routes(self):
        assert check_tree_count_routes(max_edges=6) == []

    def test_sp_closure(self):
        assert check_sp_closure(max_edges=5) == []

    def test_blocks_partition(self):
        assert check_blocks_partition(max_edges=6) == []

    def test_sp_vs_minor(self):
        assert check_sp_vs_minor(max_edges=5) == []

    @pytest.mark.slow
    def test_sp_vs_minor_deep(self):
        assert check_sp_vs_minor(max_edges=6) == []

    @pytest.mark.slow
    def test_deletion_contraction_deep(self):
        assert check_deletion_contraction(max_edges=8) == []
