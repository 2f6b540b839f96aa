"""Acceptance suite: the quantitative contract of the whole package.

Each test prints one PASS line with its headline numbers (run pytest with
-s to see them).  Bounds and tolerances are pinned here, not configurable.
"""

import time

import pytest

from spcube import (
    contains_pattern,
    density_lower_bound,
    dual_pattern,
    duplicate_e,
    duplicate_v,
    enumerate_maps,
    enumerate_terms,
    ex_layer,
    ex_layer_bruteforce,
    f2_vertex_density,
    f2_vertex_set,
    fib,
    h_graph,
    layer_strings,
    m_table,
    max_spanning_trees,
    partite_pattern,
    alon_pattern,
    phi,
    product_join,
    psi,
    to_marked_graph,
    two_sum,
    x16_pattern,
    x_k4_pattern,
    x_pattern,
    y18_pattern,
    y_k4_pattern,
    y_pattern,
)
from spcube import catalog
from spcube.cli import main
from spcube.multigraph import duplicate_edge, permute_edges, subdivide_edge
from spcube.operators import CODUP, DUP
from spcube.patterns import VertexPattern, pg_shape
from spcube.embeddings import count_maps

X_WORKED = {
    "01110", "10110", "11010", "11100",
    "01011", "01101", "10101", "10011",
}
X_CONTRACT = {"0101", "0110", "1001", "1010"}
X_DELETE = {"0111", "1011", "1101", "1110"}
TABLE_M_12 = [1, 2, 4, 8, 14, 24, 42, 72, 122, 204, 343, 576]
TABLE_M_STRETCH = [960, 1608]
FIB_MAXIMA = [1, 1, 2, 3, 5, 8, 13, 21, 34]


def _report(name: str, detail: str) -> None:
    print(f"ACCEPTANCE {name}: PASS ({detail})")


@pytest.fixture(scope="module")
def terms_with_patterns():
    """All terms with <= 8 edges, with marked graph and both patterns."""
    out = []
    for d in range(1, 9):
        for t in enumerate_terms(d):
            g = to_marked_graph(t)
            out.append((t, g, x_pattern(g), y_pattern(g, 0)))
    return out


def test_criterion_01_worked_example(capsys):
    start = time.perf_counter()
    g = catalog.k4_minus_edge()
    assert x_pattern(g).strings == frozenset(X_WORKED)
    from spcube.multigraph import contract, delete_edge

    assert x_pattern(contract(g, 4)).strings == frozenset(X_CONTRACT)
    assert x_pattern(delete_edge(g, 4)).strings == frozenset(X_DELETE)
    h = h_graph(g, 4)
    assert pg_shape(h) == "cycle(8)"
    # same answers through the CLI surface
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        from spcube.multigraph import graph_to_json

        fh.write(graph_to_json(g))
        path = fh.name
    assert main(["pattern", "x", "--graph", path]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert set(out[1:]) == X_WORKED
    assert main(["pattern", "h", "--graph", path, "--edge", "4"]) == 0
    assert "cycle(8)" in capsys.readouterr().out
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    with capsys.disabled():
        _report("01 worked example", f"{elapsed:.2f}s")


def test_criterion_02_m_table():
    start = time.perf_counter()
    rows = m_table(12)
    values = [r.value for r in rows]
    assert values == TABLE_M_12
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    stretch = [r.value for r in m_table(14)[12:]]
    assert stretch == TABLE_M_STRETCH
    _report("02 max-edge table", f"m(1..12) exact in {elapsed:.2f}s; stretch 13-14 ok")


def test_criterion_03_fibonacci():
    start = time.perf_counter()
    values = [max_spanning_trees(d, "exhaustive").value for d in range(9)]
    assert values == FIB_MAXIMA
    assert values == [fib(d + 1) for d in range(9)]
    chain = [max_spanning_trees(d, "witness").value for d in range(17)]
    assert chain == [fib(d + 1) for d in range(17)]
    assert chain[16] == 1597
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    _report("03 fibonacci maxima", f"census to 8 edges + chain to 16 in {elapsed:.2f}s")


def test_criterion_04_m_bounds():
    from spcube import check_m_bounds

    rows = m_table(14)
    report = check_m_bounds(rows)
    assert all(r["ok"] for r in report)
    _report("04 m bounds", f"F(d+2)-1 <= m(d) <= d*F(d+2)/2 for d <= {rows[-1].d}")


def test_criterion_05_core_correspondence(terms_with_patterns):
    violations = 0
    checked = 0
    for t, g, x, y in terms_with_patterns:
        for i in range(1, g.e):
            for op, kind in ((duplicate_edge, DUP), (subdivide_edge, CODUP)):
                g2 = op(g, i)
                checked += 1
                if x_pattern(g2) != duplicate_v(x, i, kind):
                    violations += 1
                if y_pattern(g2, 0) != duplicate_e(y, i - 1, kind):
                    violations += 1
    assert violations == 0
    _report("05 operator correspondence", f"{checked} graph-op cases, 0 violations")


def test_criterion_06_duality(terms_with_patterns):
    from spcube.spterm import dual

    violations = 0
    for t, g, x, y in terms_with_patterns:
        gd = to_marked_graph(dual(t))
        if dual_pattern(x) != x_pattern(gd):
            violations += 1
        if dual_pattern(y) != y_pattern(gd, 0):
            violations += 1
    assert violations == 0
    _report("06 duality", f"{len(terms_with_patterns)} terms, 0 violations")


def test_criterion_07_gluing():
    import random

    rng = random.Random(1729)
    by_size = {d: list(enumerate_terms(d)) for d in range(1, 10)}
    violations = 0
    for _ in range(200):
        d1 = rng.randint(1, 9)
        d2 = rng.randint(1, 10 - d1)
        t1, t2 = rng.choice(by_size[d1]), rng.choice(by_size[d2])
        g1, g2 = to_marked_graph(t1), to_marked_graph(t2)
        glued = h_graph(two_sum(g1, g2), 0)
        joined = product_join(h_graph(g1, 0), h_graph(g2, 0))
        if glued != joined:
            violations += 1
    assert violations == 0
    _report("07 product-join gluing", "200 random 2-sums, 0 violations")


def test_criterion_08_phi_psi(terms_with_patterns):
    violations = 0
    for t, g, x, y in terms_with_patterns:
        if psi(x, 0) != y:
            violations += 1
        g_last = permute_edges(g, tuple(range(1, g.e)) + (0,))
        if phi(y_pattern(g_last, g.e - 1)) != x_pattern(g_last):
            violations += 1
    assert violations == 0
    _report("08 phi/psi identities", f"{len(terms_with_patterns)} terms, 0 violations")


def test_criterion_09_named_patterns():
    from itertools import combinations

    checked = 0
    for total in range(1, 8):
        for k in range(1, total + 1):
            for cuts in combinations(range(1, total), k - 1):
                bounds = (0,) + cuts + (total,)
                sizes = tuple(b - a for a, b in zip(bounds, bounds[1:]))
                assert alon_pattern(sizes) == x_pattern(catalog.alon_graph(sizes))
                assert partite_pattern(sizes) == y_pattern(catalog.partite_graph(sizes))
                checked += 1
    x16 = x16_pattern()
    assert len(x16) == 16
    assert frozenset(layer_strings(3, 3)) - x16.strings == {
        "010101", "011010", "100110", "101001",
    }
    assert x16 == x_k4_pattern()
    y18 = y18_pattern()
    assert len(y18) == 18
    assert y18 == y_k4_pattern()
    _report("09 named patterns", f"{checked} block tuples + x16/y18 exact")


def test_criterion_10_f2():
    start = time.perf_counter()
    full_middle = VertexPattern(2, 2, frozenset(layer_strings(2, 2)))
    for seed in range(50):
        contained, _ = contains_pattern(f2_vertex_set(4, 4, seed), full_middle)
        assert not contained
    mean = sum(f2_vertex_density(8, 8, seed) for seed in range(100)) / 100
    target = density_lower_bound(8)
    assert abs(float(mean) - float(target)) <= 0.05
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report(
        "10 GF(2) construction",
        f"50 seeds avoid middle layer; mean density {float(mean):.4f} "
        f"vs {float(target):.4f} in {elapsed:.1f}s",
    )


def test_criterion_11_map_counts():
    from itertools import product as iproduct
    from math import factorial

    checked = 0
    for a, b, a2, b2 in iproduct(range(4), repeat=4):
        if a > a2 or b > b2:
            continue
        plain = sum(1 for _ in enumerate_maps(a, b, a2, b2))
        assert plain == factorial(a2 + b2) // (
            factorial(a2 - a) * factorial(b2 - b)
        )
        starred = sum(1 for _ in enumerate_maps(a, b, a2, b2, starred=True))
        assert starred == factorial(a2 + b2 + 1) // (
            factorial(a2 - a) * factorial(b2 - b)
        )
        assert plain == count_maps(a, b, a2, b2)
        checked += 1
    _report("11 embedding counts", f"{checked} parameter tuples, both formulas")


def test_criterion_12_extremal_oracles():
    xc2 = VertexPattern(1, 1, frozenset({"01", "10"}))
    value, _ = ex_layer(1, 1, xc2)
    assert value == 1
    value, witness = ex_layer(2, 2, xc2)
    assert value == 2 and witness == ["0011", "1100"]

    import random

    rng = random.Random(98765)
    layers = [(2, 2), (1, 3), (3, 1), (4, 1), (1, 4), (2, 3), (3, 2), (5, 1)]
    for trial in range(20):
        a2, b2 = rng.choice(layers)
        a = rng.randint(0, min(a2, 2))
        b = rng.randint(0, min(b2, 2))
        pool = layer_strings(a, b)
        x = VertexPattern(a, b, frozenset(rng.sample(pool, rng.randint(1, len(pool)))))
        assert ex_layer(a2, b2, x) == ex_layer_bruteforce(a2, b2, x)
    _report("12 extremal oracles", "pinned values + 20 random cross-checks")
