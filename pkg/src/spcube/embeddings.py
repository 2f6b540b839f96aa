"""Layer-to-layer embedding maps, densities, and exact extremal searches.

An embedding map is a template string mixing slot symbols s1..sk with
constant 0/1 characters; applying it to a layer string substitutes the
string's characters into the slots.  Containment, the embedding density
t(X, X'), and the exact extremal numbers ex(layer, X) and ex(cube, X) are
all built on these maps.  Every search here is exact; oversized requests
raise ``SizeGuardError`` instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from .errors import SizeGuardError
from .patterns import (
    EdgePattern,
    VertexPattern,
    layer_strings,
    sort_key,
    starred_layer_strings,
)

__all__ = [
    "EmbeddingMap",
    "count_maps",
    "enumerate_maps",
    "apply_map",
    "density_t",
    "contains_pattern",
    "ex_layer",
    "ex_layer_bruteforce",
    "ex_cube",
]


@dataclass(frozen=True)
class EmbeddingMap:
    """A template: tokens are slot indices (int, 0-based) or '0'/'1'."""

    tokens: tuple
    slots: int

    def __post_init__(self):
        seen = sorted(t for t in self.tokens if isinstance(t, int))
        if seen != list(range(self.slots)):
            raise ValueError("tokens must use each slot exactly once")
        if any(not isinstance(t, int) and t not in ("0", "1") for t in self.tokens):
            raise ValueError("constants must be '0' or '1'")

    def __str__(self) -> str:
        return " ".join(f"s{t + 1}" if isinstance(t, int) else t for t in self.tokens)


def count_maps(a: int, b: int, a2: int, b2: int, starred: bool = False) -> int:
    """Number of embedding maps from L(a,b) (or L'(a,b)) into the larger layer."""
    if a > a2 or b > b2:
        raise ValueError("target layer must dominate the source layer")
    length = a2 + b2 + (1 if starred else 0)
    return factorial(length) // (factorial(a2 - a) * factorial(b2 - b))


def enumerate_maps(a: int, b: int, a2: int, b2: int, starred: bool = False):
    """All embedding maps, in a fixed deterministic order."""
    if a > a2 or b > b2:
        raise ValueError("target layer must dominate the source layer")
    k = a + b + (1 if starred else 0)
    counts: list[tuple[object, int]] = [(j, 1) for j in range(k)]
    counts.append(("0", a2 - a))
    counts.append(("1", b2 - b))
    length = k + (a2 - a) + (b2 - b)

    def rec(prefix: list):
        if len(prefix) == length:
            yield EmbeddingMap(tuple(prefix), k)
            return
        for idx, (tok, cnt) in enumerate(counts):
            if cnt == 0:
                continue
            counts[idx] = (tok, cnt - 1)
            prefix.append(tok)
            yield from rec(prefix)
            prefix.pop()
            counts[idx] = (tok, cnt)

    yield from rec([])


def apply_map(p: EmbeddingMap, s: str) -> str:
    """Substitute string s into the slots of p; constants pass through."""
    if len(s) != p.slots:
        raise ValueError(f"string length {len(s)} does not match {p.slots} slots")
    return "".join(s[t] if isinstance(t, int) else t for t in p.tokens)


def _image_inside(p: EmbeddingMap, strings, target: frozenset[str]) -> bool:
    for s in strings:
        if apply_map(p, s) not in target:
            return False
    return True


def _layer_params(pat) -> tuple[int, int, bool]:
    return pat.a, pat.b, isinstance(pat, EdgePattern)


def density_t(small, big) -> Fraction:
    """Exact fraction of embedding maps sending ``small`` into ``big``.

    Both patterns must be of the same kind, with big's layer dominating
    small's.
    """
    if type(small) is not type(big):
        raise ValueError("patterns must be of the same kind")
    a, b, starred = _layer_params(small)
    a2, b2, _ = _layer_params(big)
    if a > a2 or b > b2:
        raise ValueError("layer mismatch: big must dominate small")
    total = 0
    good = 0
    target = big.strings
    src = sorted(small.strings, key=sort_key)
    for p in enumerate_maps(a, b, a2, b2, starred):
        total += 1
        if _image_inside(p, src, target):
            good += 1
    return Fraction(good, total)


def contains_pattern(s, x) -> tuple[bool, EmbeddingMap | None]:
    """Does some embedding map send pattern x into the set s?

    ``s`` may be a VertexPattern/EdgePattern (single-layer mode) or a
    plain set of strings of uniform length (oriented full-cube mode:
    strings of every weight, all layers are tried).  Returns a witness
    map on success.
    """
    a, b, starred = _layer_params(x)
    src = sorted(x.strings, key=sort_key)
    if isinstance(s, (VertexPattern, EdgePattern)):
        if isinstance(s, EdgePattern) != starred:
            raise ValueError("set and pattern kinds differ")
        a2, b2, _ = _layer_params(s)
        if a2 < a or b2 < b:
            return (False, None)
        target = s.strings
        for p in enumerate_maps(a, b, a2, b2, starred):
            if _image_inside(p, src, target):
                return (True, p)
        return (False, None)

    pool = frozenset(s)
    if not pool:
        return (not src, None) if not src else (False, None)
    lengths = {len(t) for t in pool}
    if len(lengths) != 1:
        raise ValueError("cube-mode set must have strings of uniform length")
    n = lengths.pop()
    width = n - (1 if starred else 0)
    for a2 in range(a, width - b + 1):
        b2 = width - a2
        if b2 < b:
            continue
        for p in enumerate_maps(a, b, a2, b2, starred):
            if _image_inside(p, src, pool):
                return (True, p)
    return (False, None)


# ---------------------------------------------------------------------------
# exact extremal searches


def _forbidden_masks(universe: list[str], image_sets) -> list[int]:
    index = {s: j for j, s in enumerate(universe)}
    masks = set()
    for img in image_sets:
        m = 0
        for s in img:
            m |= 1 << index[s]
        masks.add(m)
    # drop supersets: hitting a subset hits the superset
    masks = sorted(masks, key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _min_hit(sets: list[int], banned: int) -> int | None:
    """Minimum size of a set of elements meeting every mask, using no
    banned elements; None if impossible."""
    best: list[int | None] = [None]

    def lb(live: list[int]) -> int | None:
        count = 0
        used = 0
        for m in live:
            allowed = m & ~banned
            if not allowed:
                return None
            if not (allowed & used):
                count += 1
                used |= allowed
        return count

    def rec(hit: int, size: int) -> None:
        live = [m for m in sets if not (m & hit)]
        if not live:
            if best[0] is None or size < best[0]:
                best[0] = size
            return
        bound = lb(live)
        if bound is None:
            return
        if best[0] is not None and size + bound >= best[0]:
            return
        target = min(live, key=lambda m: bin(m & ~banned).count("1"))
        opts = target & ~banned
        while opts:
            bit = opts & -opts
            opts ^= bit
            rec(hit | bit, size + 1)

    rec(0, 0)
    return best[0]


def _max_avoiding(universe: list[str], masks: list[int]) -> tuple[int, list[str]]:
    """Largest subset of the universe containing none of the masks, with
    the lexicographically least witness among the optima."""
    n = len(universe)
    if any(m == 0 for m in masks):
        raise ValueError("an empty forbidden configuration cannot be avoided")
    h = _min_hit(masks, banned=0)
    assert h is not None  # banned is empty, so a hitting set always exists
    size = n - h
    # lexicographically least witness: grow greedily, confirming each pick
    chosen = 0
    picked: list[str] = []
    for j in range(n):
        if len(picked) == size:
            break
        cand = chosen | (1 << j)
        rest = _min_hit(masks, banned=cand)
        if rest is not None and rest <= n - size and bin(cand).count("1") <= size:
            chosen = cand
            picked.append(universe[j])
    return size, picked


def ex_layer(
    a2: int,
    b2: int,
    x,
    *,
    max_layer: int = 28,
    max_maps: int = 200_000,
) -> tuple[int, list[str]]:
    """Exact extremal number: the largest subset of the (a2, b2) layer
    into which no embedded copy of x fits, plus one witness set.

    The witness is the lexicographically least among maximum witnesses.
    Refuses (``SizeGuardError``) above the desk-scale guards.
    """
    if not x.strings:
        raise ValueError("the empty pattern embeds in every set; ex is undefined")
    a, b, starred = _layer_params(x)
    if a > a2 or b > b2:
        raise ValueError("target layer must dominate the pattern's layer")
    universe = (
        starred_layer_strings(a2, b2) if starred else layer_strings(a2, b2)
    )
    if len(universe) > max_layer:
        raise SizeGuardError(
            f"layer size {len(universe)} exceeds the exact-search guard {max_layer}"
        )
    total_maps = count_maps(a, b, a2, b2, starred)
    if total_maps > max_maps:
        raise SizeGuardError(f"{total_maps} embedding maps exceed the guard {max_maps}")
    src = sorted(x.strings, key=sort_key)
    images = (
        frozenset(apply_map(p, s) for s in src)
        for p in enumerate_maps(a, b, a2, b2, starred)
    )
    masks = _forbidden_masks(universe, images)
    return _max_avoiding(universe, masks)


def ex_layer_bruteforce(a2: int, b2: int, x, *, max_layer: int = 16) -> tuple[int, list[str]]:
    """Plain subset enumeration; validation oracle for ``ex_layer``."""
    if not x.strings:
        raise ValueError("the empty pattern embeds in every set; ex is undefined")
    a, b, starred = _layer_params(x)
    if a > a2 or b > b2:
        raise ValueError("target layer must dominate the pattern's layer")
    universe = (
        starred_layer_strings(a2, b2) if starred else layer_strings(a2, b2)
    )
    if len(universe) > max_layer:
        raise SizeGuardError(f"layer size {len(universe)} exceeds {max_layer}")
    src = sorted(x.strings, key=sort_key)
    images = (
        frozenset(apply_map(p, s) for s in src)
        for p in enumerate_maps(a, b, a2, b2, starred)
    )
    masks = list(set(_forbidden_masks(universe, images)))
    n = len(universe)
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            m = 0
            for j in combo:
                m |= 1 << j
            if all(f & m != f for f in masks):
                return size, [universe[j] for j in combo]
    raise AssertionError("unreachable: the empty set avoids everything")


def _cube_vertex_universe(n: int) -> list[str]:
    return sorted(
        ("".join(bits) for bits in product("01", repeat=n)), key=sort_key
    )


def _cube_edge_universe(n: int) -> list[str]:
    out = []
    for star in range(n):
        for bits in product("01", repeat=n - 1):
            s = "".join(bits[:star]) + "*" + "".join(bits[star:])
            out.append(s)
    return sorted(out, key=sort_key)


def _cube_images(n: int, x) -> set[frozenset[str]]:
    """Images of pattern x under every sub-cube (face) embedding: ordered
    coordinate injections, per-coordinate flips, constants elsewhere."""
    a, b, starred = _layer_params(x)
    d = a + b + (1 if starred else 0)
    src = sorted(x.strings, key=sort_key)
    images: set[frozenset[str]] = set()
    if d > n:
        return images
    flip = {"0": "1", "1": "0", "*": "*"}
    for positions in permutations(range(n), d):
        for flips in product((False, True), repeat=d):
            for consts in product("01", repeat=n - d):
                img = []
                for s in src:
                    out = [""] * n
                    free = set(positions)
                    for j, pos in enumerate(positions):
                        ch = s[j]
                        out[pos] = flip[ch] if (flips[j] and ch != "*") else ch
                    it = iter(consts)
                    for pos in range(n):
                        if pos not in free:
                            out[pos] = next(it)
                    img.append("".join(out))
                images.add(frozenset(img))
    return images


def ex_cube(n: int, x, *, max_n: int = 4) -> tuple[int, list[str]]:
    """Exact extremal number over the whole n-cube: the largest set of
    vertices (or edges, for an EdgePattern) of the n-cube containing no
    face-embedded copy of x.  Desk-scale oracle, guarded at n <= 4."""
    if not x.strings:
        raise ValueError("the empty pattern embeds in every set; ex is undefined")
    if n > max_n:
        raise SizeGuardError(f"cube dimension {n} exceeds the exact-search guard {max_n}")
    starred = isinstance(x, EdgePattern)
    universe = _cube_edge_universe(n) if starred else _cube_vertex_universe(n)
    images = _cube_images(n, x)
    if not images:
        return len(universe), list(universe)
    masks = _forbidden_masks(universe, images)
    return _max_avoiding(universe, masks)
