#!/usr/bin/env python3
"""Duplication and coduplication mirror graph operations exactly.

Duplicating edge i of a graph doubles coordinate i of every tree string
(0 -> 00, 1 -> 01/10); subdividing it is the 0/1-swapped operator.  The
same square commutes for the starred edge patterns, and swapping series
with parallel in the underlying network complements every string.
"""

from spcube import catalog
from spcube.multigraph import duplicate_edge, subdivide_edge
from spcube.operators import CODUP, DUP, duplicate_e, duplicate_v
from spcube.patterns import dual_pattern, phi, psi, x_pattern, y_pattern
from spcube.spterm import EDGE, dual, parallel, series, to_marked_graph


def show(label, pattern):
    print(f"{label:28s} {' '.join(pattern.sorted_strings)}")


def main():
    c2 = catalog.c2()
    x = x_pattern(c2)
    show("X of the 2-cycle", x)
    show("duplicate coord 1", duplicate_v(x, 1, DUP))
    show("  = X of 3 parallel edges", x_pattern(duplicate_edge(c2, 1)))
    show("coduplicate coord 1", duplicate_v(x, 1, CODUP))
    show("  = X of the triangle", x_pattern(subdivide_edge(c2, 1)))

    print()
    t = series(EDGE, parallel(EDGE, EDGE))
    g = to_marked_graph(t)
    y = y_pattern(g, 0)
    show("Y of a marked 4-edge graph", y)
    show("duplicate coord 0", duplicate_e(y, 0, DUP))
    show("  = Y after edge duplication", y_pattern(duplicate_edge(g, 1), 0))

    print()
    show("X of the triangle term", x_pattern(to_marked_graph(series(EDGE, EDGE))))
    show("complement of it", dual_pattern(x_pattern(to_marked_graph(series(EDGE, EDGE)))))
    show("  = X of the dual term", x_pattern(to_marked_graph(dual(series(EDGE, EDGE)))))

    print()
    g5 = catalog.k4_minus_edge()  # marked edge last by construction
    print("phi(Y) == X:", phi(y_pattern(g5, 4)) == x_pattern(g5))
    print("psi_4(X) == Y:", psi(x_pattern(g5), 4) == y_pattern(g5, 4))


if __name__ == "__main__":
    main()
