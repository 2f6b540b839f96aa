"""Duplication and coduplication operators on layer patterns.

``duplicate_v(X, i, "D")`` expands coordinate i of every string into a
pair at positions i and i+1: a 0 becomes 00 and a 1 becomes both 01 and
10.  Coduplication ("D'") is the 0/1-swapped variant: 1 -> 11 and
0 -> {01, 10}.  These mirror edge duplication and edge subdivision on the
underlying graph (with the duplicated pair landing at edge positions i
and i+1), which is the contract the property tests pin down.

On starred strings the star expands to a star-and-constant pair.  The
only convention consistent with the graph operations is that duplication
pads the star with 0 ({s0*, s*0} from s*) and coduplication pads it with
1 ({s1*, s*1}); note the coduplication pad is a 1, not a second star or a
mirrored copy, a point easy to get wrong when transcribing the displayed
set definitions.
"""

from __future__ import annotations

from .patterns import EdgePattern, VertexPattern

__all__ = ["duplicate_v", "duplicate_e", "DUP", "CODUP"]

DUP = "D"
CODUP = "D'"


def _check(kind: str, i: int, width: int) -> None:
    if kind not in (DUP, CODUP):
        raise ValueError(f"kind must be {DUP!r} or {CODUP!r}")
    if not (0 <= i < width):
        raise ValueError(f"coordinate {i} out of range for width {width}")


def duplicate_v(x: VertexPattern, i: int, kind: str) -> VertexPattern:
    """Expand coordinate i of a vertex pattern; result in L(a+1, b) for
    duplication, L(a, b+1) for coduplication."""
    _check(kind, i, x.a + x.b)
    double, split = ("0", "1") if kind == DUP else ("1", "0")
    out = set()
    for s in x.strings:
        pre, c, suf = s[:i], s[i], s[i + 1 :]
        if c == double:
            out.add(pre + c + c + suf)
        else:
            out.add(pre + c + double + suf)
            out.add(pre + double + c + suf)
    if kind == DUP:
        return VertexPattern(x.a + 1, x.b, frozenset(out))
    return VertexPattern(x.a, x.b + 1, frozenset(out))


def duplicate_e(y: EdgePattern, i: int, kind: str) -> EdgePattern:
    """Expand coordinate i of an edge pattern.  The star always splits
    into {pad+*, *+pad} where pad is 0 for duplication and 1 for
    coduplication; 0/1 behave as in ``duplicate_v``."""
    _check(kind, i, y.a + y.b + 1)
    double, pad = ("0", "0") if kind == DUP else ("1", "1")
    out = set()
    for s in y.strings:
        pre, c, suf = s[:i], s[i], s[i + 1 :]
        if c == double:
            out.add(pre + c + c + suf)
        else:
            # a split coordinate (the other constant, or the star)
            out.add(pre + c + pad + suf)
            out.add(pre + pad + c + suf)
    if kind == DUP:
        return EdgePattern(y.a + 1, y.b, frozenset(out))
    return EdgePattern(y.a, y.b + 1, frozenset(out))
