"""Building co-normal products and looking at their symmetry.

Run with:  python3 demos/01_products_and_groups.py
"""

from __future__ import annotations

import numpy as np

from conormal import (
    ProductIndexMap,
    aut_factorizes,
    cartesian,
    complete,
    conormal,
    cycle,
    group_order,
    is_spanning_subgraph,
    path,
    star,
)

# Two vertices of G * H are adjacent when their first coordinates are
# adjacent in G or their second coordinates are adjacent in H.
g, h = path(4), cycle(5)
prod = conormal(g, h)
print(f"P4 * C5: {prod.n} vertices, {prod.m} edges")

# Vertex (a, b) sits at index a * |V(H)| + b.
im = ProductIndexMap.of(g, h)
print("index of (2, 3):", im.index(2, 3), "-> decodes back to", im.decode(im.index(2, 3)))

# The degree of (a, b) is deg(a)|V(H)| + deg(b)|V(G)| - deg(a)deg(b).
deg = np.asarray(prod.degrees()).reshape(g.n, h.n)
print("degree table (rows: P4 vertices, columns: C5 vertices)")
print(deg)

# The Cartesian product uses a subset of those edges on the same vertex set.
box = cartesian(g, h)
print("P4 box C5 spans P4 * C5:", is_spanning_subgraph(box, prod))

# Symmetry: for these factors every automorphism of the product is a pair
# (alpha, beta) of factor automorphisms ...
print("|Aut(P4)| * |Aut(C5)| =", group_order(g) * group_order(h), " |Aut(P4 * C5)| =", group_order(prod))
print("Aut(P4 * C5) factorizes:", aut_factorizes(g, h))

# ... but false twins (the leaves of a star) let the product mix coordinates.
print("|Aut(K1,3)| * |Aut(P4)| =", group_order(star(3)) * group_order(path(4)),
      " |Aut(K1,3 * P4)| =", group_order(conormal(star(3), path(4))))

# Complete factors multiply out to a complete graph.
print("K3 * K2 == K6:", conormal(complete(3), complete(2)) == complete(6))
