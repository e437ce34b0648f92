"""Co-normal and Cartesian products with a row-major vertex convention.

Vertex ``(g, h)`` of a product ``G * H`` is stored at index
``g * |V(H)| + h``: the left factor is major. Every labeling formula and
automorphism constructor in the package relies on this single convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class ProductIndexMap:
    n_left: int
    n_right: int

    @classmethod
    def of(cls, left: Graph, right: Graph) -> ProductIndexMap:
        return cls(left.n, right.n)

    @property
    def size(self) -> int:
        return self.n_left * self.n_right

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_left and 0 <= h < self.n_right):
            raise IndexError(f"pair ({g}, {h}) out of range for {self.n_left}x{self.n_right}")
        return g * self.n_right + h

    def decode(self, i: int) -> tuple[int, int]:
        if not 0 <= i < self.size:
            raise IndexError(f"product index {i} out of range")
        return divmod(i, self.n_right)


def conormal(g: Graph, h: Graph) -> Graph:
    """``(g1,h1) ~ (g2,h2)`` iff ``g1 g2`` is an edge of G or ``h1 h2`` is an edge of H."""
    a = g.matrix.astype(bool)
    b = h.matrix.astype(bool)
    ones_g = np.ones((g.n, g.n), dtype=bool)
    ones_h = np.ones((h.n, h.n), dtype=bool)
    adj = np.kron(a, ones_h) | np.kron(ones_g, b)
    return Graph.from_matrix(adj)


def cartesian(g: Graph, h: Graph) -> Graph:
    """``(g1,h1) ~ (g2,h2)`` iff equal in one coordinate and adjacent in the other."""
    adj = np.kron(g.matrix, np.eye(h.n, dtype=np.int8)) + np.kron(np.eye(g.n, dtype=np.int8), h.matrix)
    return Graph.from_matrix(adj)


def conormal_power(g: Graph, k: int) -> Graph:
    """k-th co-normal power, folded from the left."""
    if k < 1:
        raise GraphError(f"power must be >= 1, got {k}")
    out = g
    for _ in range(k - 1):
        out = conormal(out, g)
    return out


def power_index(n: int, k: int, coords: tuple[int, ...]) -> int:
    """Index of ``(x_1, ..., x_k)`` in the k-th power of an order-n graph."""
    if len(coords) != k:
        raise IndexError(f"expected {k} coordinates, got {len(coords)}")
    i = 0
    for x in coords:
        if not 0 <= x < n:
            raise IndexError(f"coordinate {x} out of range for order {n}")
        i = i * n + x
    return i
