"""Exact desk-scale searches: Fibonacci tree maxima and the max-edge table.

Two independent routes compute the edge-count maximum m(d) over marked
2-connected networks with d non-distinguished edges:

* ``method="dp"`` (default): dynamic programming over achievable
  (lower-size, upper-size, edge-count) triples.  Binary series/parallel
  combination is exact for these triples (a 2-sum glues pattern graphs by
  a product-join, which is what the parallel rule computes; the series
  rule is its 0/1-swapped dual), and all three combination rules are
  monotone, so dominated triples can be pruned without losing maxima.
* ``method="terms"``: literal iteration over all canonical terms,
  counting Hamming-1 pairs between the two tree sets of each marked
  graph.

The test suite pins both routes to each other and revalidates every
reported witness by recomputing its pattern size from scratch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .catalog import fib_chain
from .errors import SizeGuardError
from .multigraph import Multigraph, graph_to_json, tree_count, spanning_trees
from .patterns import y_pattern
from .spterm import (
    EDGE,
    SpTerm,
    canonical,
    canonical_key,
    enumerate_connected_sp,
    enumerate_terms,
    format_term,
    to_marked_graph,
)

__all__ = [
    "fib",
    "TableRow",
    "max_spanning_trees",
    "fib_table",
    "m_value",
    "m_table",
    "check_m_bounds",
    "m_value_all_marked_graphs",
    "rows_to_csv",
    "rows_to_markdown",
]

EXHAUSTIVE_TREE_LIMIT = 8
WITNESS_CHAIN_LIMIT = 16
M_TABLE_LIMIT = 16


def fib(k: int) -> int:
    """Fibonacci numbers indexed F(1) = F(2) = 1, F(3) = 2, ..."""
    if k < 1:
        raise ValueError("k must be at least 1")
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class TableRow:
    d: int
    value: int
    witness: object  # SpTerm or Multigraph
    millis: float

    def witness_text(self) -> str:
        if isinstance(self.witness, SpTerm):
            return format_term(self.witness)
        if isinstance(self.witness, Multigraph):
            return graph_to_json(self.witness)
        return str(self.witness)


# ---------------------------------------------------------------------------
# Fibonacci spanning-tree maxima


def max_spanning_trees(d: int, mode: str = "exhaustive") -> TableRow:
    """Maximum spanning-tree count over connected series-parallel
    multigraphs with d edges.

    ``exhaustive`` searches the full isomorphism census (d <= 8);
    ``witness`` only builds the alternating duplicate/subdivide chain
    graph and reports its count (d <= 16).
    """
    start = time.perf_counter()
    if mode == "exhaustive":
        if d > EXHAUSTIVE_TREE_LIMIT:
            raise SizeGuardError(
                f"exhaustive census is guarded at {EXHAUSTIVE_TREE_LIMIT} edges"
            )
        best = -1
        witness: Multigraph | None = None
        for g in enumerate_connected_sp(d):
            c = tree_count(g)
            if c > best:
                best = c
                witness = g
        assert witness is not None
        return TableRow(d, best, witness, _ms(start))
    if mode == "witness":
        if d > WITNESS_CHAIN_LIMIT:
            raise SizeGuardError(f"witness chain is guarded at {WITNESS_CHAIN_LIMIT} edges")
        g = fib_chain(d)
        count = len(spanning_trees(g))
        if count != tree_count(g):
            raise AssertionError("tree enumeration and determinant count disagree")
        return TableRow(d, count, g, _ms(start))
    raise ValueError(f"unknown mode {mode!r}")


def fib_table(d_max: int, mode: str = "exhaustive") -> list[TableRow]:
    return [max_spanning_trees(d, mode) for d in range(d_max + 1)]


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


# ---------------------------------------------------------------------------
# the m(d) table


def _combine_series(x, y):
    (a1, b1, e1), (a2, b2, e2) = x, y
    return (a1 * b2 + a2 * b1, b1 * b2, e1 * b2 + e2 * b1)


def _combine_parallel(x, y):
    (a1, b1, e1), (a2, b2, e2) = x, y
    return (a1 * a2, b1 * a2 + b2 * a1, e1 * a2 + e2 * a1)


def _prune(cands: dict[tuple[int, int, int], SpTerm]) -> dict:
    """Drop triples dominated coordinatewise by another candidate."""
    items = sorted(cands.items(), key=lambda kv: (-kv[0][0], -kv[0][1], -kv[0][2]))
    kept: list[tuple[tuple[int, int, int], SpTerm]] = []
    for trip, term in items:
        a, b, e = trip
        if any(ka >= a and kb >= b and ke >= e for (ka, kb, ke), _ in kept):
            continue
        kept.append((trip, term))
    return dict(kept)


def _dp_frontiers(d_max: int) -> list[dict]:
    """frontier[d]: undominated (|X(G/e)|, |X(G\\e)|, |Y(G,e)|) triples for
    d-edge networks, each with a canonical witness term."""
    frontier: list[dict] = [dict() for _ in range(d_max + 1)]
    if d_max >= 1:
        frontier[1] = {(1, 1, 1): EDGE}
    for d in range(2, d_max + 1):
        cands: dict[tuple[int, int, int], SpTerm] = {}
        for d1 in range(1, d // 2 + 1):
            d2 = d - d1
            for t1_trip, t1 in frontier[d1].items():
                for t2_trip, t2 in frontier[d2].items():
                    for combine, build in (
                        (_combine_series, _series2),
                        (_combine_parallel, _parallel2),
                    ):
                        trip = combine(t1_trip, t2_trip)
                        term = build(t1, t2)
                        old = cands.get(trip)
                        if old is None or canonical_key(term) < canonical_key(old):
                            cands[trip] = term
        frontier[d] = _prune(cands)
    return frontier


def _series2(t1: SpTerm, t2: SpTerm) -> SpTerm:
    from .spterm import series

    return canonical(series(t1, t2))


def _parallel2(t1: SpTerm, t2: SpTerm) -> SpTerm:
    from .spterm import parallel

    return canonical(parallel(t1, t2))


def m_value(d: int, method: str = "dp") -> tuple[int, SpTerm]:
    """m(d): the maximum edge-pattern size over marked 2-connected
    series-parallel graphs with d+1 edges, with a witness term."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > M_TABLE_LIMIT:
        raise SizeGuardError(f"m table is guarded at d = {M_TABLE_LIMIT}")
    if method == "dp":
        frontier = _dp_frontiers(d)[d]
        best = max(e for (_, _, e) in frontier)
        witnesses = [t for (a, b, e), t in frontier.items() if e == best]
        witness = min(witnesses, key=format_term)
        return best, witness
    if method == "terms":
        best = -1
        witness = None
        for t in enumerate_terms(d):
            y = y_pattern(to_marked_graph(t), 0)
            if len(y) > best or (len(y) == best and format_term(t) < format_term(witness)):
                best = len(y)
                witness = t
        assert witness is not None
        return best, witness
    raise ValueError(f"unknown method {method!r}")


def m_table(d_max: int, method: str = "dp") -> list[TableRow]:
    """Rows (d, m(d), witness term, millis) for d = 1..d_max."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    if d_max > M_TABLE_LIMIT:
        raise SizeGuardError(f"m table is guarded at d = {M_TABLE_LIMIT}")
    rows = []
    if method == "dp":
        start = time.perf_counter()
        frontiers = _dp_frontiers(d_max)
        for d in range(1, d_max + 1):
            best = max(e for (_, _, e) in frontiers[d])
            witness = min(
                (t for (a, b, e), t in frontiers[d].items() if e == best),
                key=format_term,
            )
            rows.append(TableRow(d, best, witness, _ms(start)))
            start = time.perf_counter()
        return rows
    for d in range(1, d_max + 1):
        start = time.perf_counter()
        value, witness = m_value(d, method)
        rows.append(TableRow(d, value, witness, _ms(start)))
    return rows


def check_m_bounds(rows: list[TableRow]) -> list[dict]:
    """Assert fib(d+2) - 1 <= m(d) <= d * fib(d+2) / 2 for every row.

    A violation raises (it would mean an implementation bug); the returned
    report carries the per-row numbers.
    """
    report = []
    for row in rows:
        lower = fib(row.d + 2) - 1
        upper = Fraction(row.d * fib(row.d + 2), 2)
        ok = lower <= row.value and row.value <= upper
        if not ok:
            raise AssertionError(
                f"m({row.d}) = {row.value} violates {lower} <= m <= {upper}"
            )
        report.append(
            {"d": row.d, "value": row.value, "lower": lower, "upper": upper, "ok": ok}
        )
    return report


def m_value_all_marked_graphs(d: int) -> int:
    """Cross-check for the 2-connected reduction: the maximum edge-pattern
    size over ALL connected series-parallel graphs with d+1 edges and any
    valid marked edge (not just the 2-connected ones).  Very small d only.
    """
    best = -1
    for g in enumerate_connected_sp(d + 1):
        for i, (u, v) in enumerate(g.edges):
            if u == v:
                continue
            try:
                y = y_pattern(g, i)
            except ValueError:
                continue  # bridge
            best = max(best, len(y))
    return best


# ---------------------------------------------------------------------------
# table emitters


def rows_to_csv(rows: list[TableRow]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["d", "value", "witness-term", "millis"])
    for r in rows:
        w.writerow([r.d, r.value, r.witness_text(), f"{r.millis:.3f}"])
    return buf.getvalue()


def rows_to_markdown(rows: list[TableRow]) -> str:
    lines = ["| d | value | witness-term | millis |", "| - | - | - | - |"]
    for r in rows:
        lines.append(
            f"| {r.d} | {r.value} | `{r.witness_text()}` | {r.millis:.3f} |"
        )
    return "\n".join(lines) + "\n"
