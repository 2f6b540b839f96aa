#!/usr/bin/env python3
"""Dense layer subsets that avoid the full middle layer, from GF(2) rank.

Admit a string when the random vectors indexed by its 1-positions form a
basis.  Pigeonhole in a 2-dimensional quotient forbids any embedded copy
of the full middle layer of Q4, yet the density stays near 29%.  Exact
extremal numbers on small layers come from the branch-and-bound search.
"""

from spcube.constructions import (
    density_lower_bound,
    f2_vertex_density,
    f2_vertex_set,
)
from spcube.embeddings import contains_pattern, ex_layer
from spcube.patterns import VertexPattern, layer_strings


def main():
    full_middle = VertexPattern(2, 2, frozenset(layer_strings(2, 2)))

    print("seed : |S| of 70  density   contains full middle layer?")
    for seed in range(6):
        s = f2_vertex_set(4, 4, seed)
        contained, _ = contains_pattern(s, full_middle)
        print(f"{seed:4d} : {len(s):3d}       {len(s) / 70:.3f}     {contained}")

    seeds = range(40)
    mean = sum(f2_vertex_density(8, 8, seed) for seed in seeds) / len(seeds)
    print(f"\nmean density at (8,8) over {len(seeds)} seeds: {float(mean):.4f}")
    print(f"basis probability (the expectation):      {float(density_lower_bound(8)):.4f}")

    xc2 = VertexPattern(1, 1, frozenset({"01", "10"}))
    print("\nexact extremal numbers for the 2-cycle pattern {01, 10}:")
    for a, b in ((1, 1), (2, 2), (3, 2)):
        value, witness = ex_layer(a, b, xc2)
        print(f"  ex(L({a},{b})) = {value}   witness: {' '.join(witness)}")


if __name__ == "__main__":
    main()
