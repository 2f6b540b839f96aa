"""Dense pattern-avoiding layer subsets from GF(2) linear algebra.

Strings are admitted to the set when the random vectors indexed by their
1-positions (plus, for edge sets, a fixed extra vector and the starred
position's vector) form a basis.  Vector sampling is driven by a
counter-based generator keyed by an explicit 64-bit seed, so every
constructed set is reproducible from (a, b, seed) alone.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .errors import SizeGuardError
from .patterns import EdgePattern, VertexPattern

__all__ = [
    "gf2_rank",
    "random_vectors",
    "f2_vertex_set",
    "f2_vertex_set_from_vectors",
    "f2_vertex_count",
    "f2_vertex_density",
    "f2_edge_set",
    "f2_edge_set_from_vectors",
    "density_lower_bound",
]


def gf2_rank(vectors: list[int]) -> int:
    """Rank over GF(2) of bit-vectors packed into ints."""
    basis: dict[int, int] = {}
    rank = 0
    for v in vectors:
        v = _reduce(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
            rank += 1
    return rank


def _reduce(v: int, basis: dict[int, int]) -> int:
    while v:
        h = v.bit_length() - 1
        if h not in basis:
            return v
        v ^= basis[h]
    return 0


def random_vectors(count: int, dim: int, seed: int) -> list[int]:
    """``count`` uniform vectors in GF(2)^dim from a Philox stream."""
    if dim < 1 or dim > 64:
        raise ValueError("dimension must be between 1 and 64")
    gen = np.random.Generator(np.random.Philox(key=seed))
    words = gen.integers(0, 2**64 - 1, size=count, dtype=np.uint64, endpoint=True)
    mask = (1 << dim) - 1
    return [int(w) & mask for w in words]


def f2_vertex_set_from_vectors(
    a: int, b: int, vectors: list[int], *, max_layer: int = 500_000
) -> VertexPattern:
    """Strings of L(a,b) whose 1-positions index a basis of GF(2)^b."""
    if len(vectors) != a + b:
        raise ValueError(f"need {a + b} vectors, got {len(vectors)}")
    if comb(a + b, b) > max_layer:
        raise SizeGuardError("layer too large to materialize; use f2_vertex_density")
    strings = set()
    for ones in combinations(range(a + b), b):
        if gf2_rank([vectors[j] for j in ones]) == b:
            strings.add(
                "".join("1" if j in ones else "0" for j in range(a + b))
            )
    return VertexPattern(a, b, frozenset(strings))


def f2_vertex_set(a: int, b: int, seed: int) -> VertexPattern:
    """Seeded basis-selected subset of L(a,b); deterministic given the seed."""
    if b < 1:
        raise ValueError("b must be at least 1")
    return f2_vertex_set_from_vectors(a, b, random_vectors(a + b, b, seed))


def f2_vertex_count(a: int, b: int, seed: int) -> int:
    """|f2_vertex_set(a, b, seed)| without materializing the strings.

    Counts independent b-subsets by depth-first extension of a partial
    basis; agreement with the materialized set is part of the test suite.
    """
    if b < 1:
        raise ValueError("b must be at least 1")
    vectors = random_vectors(a + b, b, seed)
    n = len(vectors)
    basis: dict[int, int] = {}

    def rec(i: int, need: int) -> int:
        if need == 0:
            return 1
        if n - i < need:
            return 0
        total = rec(i + 1, need)
        v = _reduce(vectors[i], basis)
        if v:
            h = v.bit_length() - 1
            basis[h] = v
            total += rec(i + 1, need - 1)
            del basis[h]
        return total

    return rec(0, b)


def f2_vertex_density(a: int, b: int, seed: int) -> Fraction:
    """Exact density |S| / |L(a,b)| of the seeded construction."""
    return Fraction(f2_vertex_count(a, b, seed), comb(a + b, b))


def f2_edge_set_from_vectors(
    a: int, b: int, vectors: list[int], *, max_layer: int = 500_000
) -> EdgePattern:
    """Starred strings of L'(a,b) admitted when the 1-position vectors
    extend to a basis of GF(2)^(b+1) both by vectors[0] and by the starred
    position's vector.

    ``vectors`` has length a+b+2: one extra leading vector, then one per
    string position.
    """
    n = a + b + 1
    if len(vectors) != n + 1:
        raise ValueError(f"need {n + 1} vectors, got {len(vectors)}")
    if n * comb(n - 1, b) > max_layer:
        raise SizeGuardError("starred layer too large to materialize")
    v0 = vectors[0]
    pos = vectors[1:]
    strings = set()
    for star in range(n):
        rest = [j for j in range(n) if j != star]
        for ones in combinations(rest, b):
            chosen = [pos[j] for j in ones]
            if gf2_rank(chosen + [v0]) != b + 1:
                continue
            if gf2_rank(chosen + [pos[star]]) != b + 1:
                continue
            strings.add(
                "".join(
                    "*" if j == star else ("1" if j in ones else "0") for j in range(n)
                )
            )
    return EdgePattern(a, b, frozenset(strings))


def f2_edge_set(a: int, b: int, seed: int) -> EdgePattern:
    """Seeded basis-selected subset of L'(a,b)."""
    if b < 1:
        raise ValueError("b must be at least 1")
    return f2_edge_set_from_vectors(a, b, random_vectors(a + b + 2, b + 1, seed))


def density_lower_bound(b: int) -> Fraction:
    """Probability that b uniform vectors in GF(2)^b form a basis:
    the product of (1 - 2^-i) for i = 1..b.  Decreasing in b, always
    above 0.2887."""
    if b < 1:
        raise ValueError("b must be at least 1")
    out = Fraction(1)
    for i in range(1, b + 1):
        out *= 1 - Fraction(1, 2**i)
    return out
