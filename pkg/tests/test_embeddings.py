import pytest
from fractions import Fraction

from spcube import (
    EdgePattern,
    SizeGuardError,
    VertexPattern,
    apply_map,
    contains_pattern,
    count_maps,
    density_t,
    enumerate_maps,
    ex_cube,
    ex_layer,
    layer_strings,
)
from spcube.embeddings import EmbeddingMap
from spcube.verify import (
    check_density_properties,
    check_ex_bnb_vs_bruteforce,
    check_map_counts,
    check_map_weights,
)

X_C2 = VertexPattern(1, 1, frozenset({"01", "10"}))


class TestMaps:
    def test_count_1_1_2_2(self):
        assert count_maps(1, 1, 2, 2) == 24
        assert sum(1 for _ in enumerate_maps(1, 1, 2, 2)) == 24

    def test_count_choose(self):
        from math import comb

        # (a'+b')!/(a'! b'!) is the binomial coefficient
        assert count_maps(0, 0, 3, 2) == comb(5, 2)

    def test_count_starred(self):
        assert count_maps(1, 1, 1, 1, starred=True) == 6

    def test_formula_suite(self):
        assert check_map_counts() == []

    def test_identity_map(self):
        p = EmbeddingMap((0, 1), 2)
        assert apply_map(p, "01") == "01"

    def test_mixed_map(self):
        p = EmbeddingMap((1, "0", 0, "1"), 2)
        assert apply_map(p, "01") == "1001"

    def test_elementwise_image(self):
        p = EmbeddingMap((0, 1, "0", "1"), 2)
        assert {apply_map(p, s) for s in X_C2.strings} == {"0101", "1001"}

    def test_weights(self):
        assert check_map_weights() == []

    def test_starred_passthrough(self):
        p = EmbeddingMap((0, 1, "1"), 2)
        assert apply_map(p, "*0") == "*01"

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            apply_map(EmbeddingMap((0, 1), 2), "011")


class TestDensity:
    def test_full_layer(self):
        full = VertexPattern(2, 2, frozenset(layer_strings(2, 2)))
        assert density_t(X_C2, full) == 1

    def test_antipodal_zero(self):
        target = VertexPattern(2, 2, frozenset({"0011", "1100"}))
        assert density_t(X_C2, target) == 0

    def test_empty_pattern(self):
        empty = VertexPattern(1, 1, frozenset())
        assert density_t(empty, VertexPattern(1, 2, frozenset({"011"}))) == 1

    def test_exact_fraction(self):
        target = VertexPattern(2, 2, frozenset(layer_strings(2, 2)) - {"0011"})
        t = density_t(X_C2, target)
        assert isinstance(t, Fraction) and 0 < t < 1

    def test_mismatch_rejected(self):
        small = VertexPattern(2, 2, frozenset({"0011"}))
        with pytest.raises(ValueError):
            density_t(small, X_C2)

    def test_property_suite(self):
        assert check_density_properties() == []


class TestContains:
    def test_positive(self):
        target = VertexPattern(2, 2, frozenset(layer_strings(2, 2)) - {"0011"})
        found, witness = contains_pattern(target, X_C2)
        assert found
        assert {apply_map(witness, s) for s in X_C2.strings} <= target.strings

    def test_negative(self):
        target = VertexPattern(2, 2, frozenset({"0011", "1100"}))
        assert contains_pattern(target, X_C2) == (False, None)

    def test_cube_mode(self):
        pool = frozenset({"000", "011", "101", "110"})  # even-weight class of Q3
        found, witness = contains_pattern(pool, X_C2)
        assert found  # the weight-2 layer holds e.g. {011, 101}
        assert {apply_map(witness, s) for s in X_C2.strings} <= pool
        found2, w2 = contains_pattern(frozenset({"000", "011"}), X_C2)
        assert not found2 and w2 is None


class TestExLayer:
    def test_l11(self):
        value, witness = ex_layer(1, 1, X_C2)
        assert value == 1

    def test_l22_with_witness(self):
        value, witness = ex_layer(2, 2, X_C2)
        assert value == 2
        assert witness == ["0011", "1100"]

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError):
            ex_layer(2, 2, VertexPattern(1, 1, frozenset()))

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            ex_layer(5, 5, X_C2)

    def test_bruteforce_agrees(self):
        assert check_ex_bnb_vs_bruteforce(trials=8) == []

    @pytest.mark.slow
    def test_bruteforce_agrees_deep(self):
        assert check_ex_bnb_vs_bruteforce(trials=20) == []

    def test_starred(self):
        y = EdgePattern(0, 0, frozenset({"*"}))
        value, witness = ex_layer(1, 0, y)
        assert value == 0  # a single starred string embeds into any nonempty set


class TestExCube:
    def test_single_vertex_pattern(self):
        single = VertexPattern(0, 1, frozenset({"1"}))
        value, witness = ex_cube(2, single)
        assert value == 0 and witness == []

    def test_xc2_in_q2(self):
        value, _ = ex_cube(2, X_C2)
        # forbidden pairs are the two diagonals; one point of each can stay
        assert value == 2

    def test_monotone_density_q2_to_q3(self):
        v2, _ = ex_cube(2, X_C2)
        v3, _ = ex_cube(3, X_C2)
        assert Fraction(v3, 8) <= Fraction(v2, 4)

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            ex_cube(5, X_C2)

    def test_matches_exhaustive_subsets(self):
        from itertools import combinations

        from spcube.embeddings import _cube_images, _cube_vertex_universe

        universe = _cube_vertex_universe(2)
        images = _cube_images(2, X_C2)
        best = 0
        for size in range(len(universe), -1, -1):
            found = False
            for combo in combinations(universe, size):
                s = set(combo)
                if not any(img <= s for img in images):
                    best = size
                    found = True
                    break
            if found:
                break
        assert best == ex_cube(2, X_C2)[0]
