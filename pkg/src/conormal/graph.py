"""Finite simple graphs on dense vertex indices, named families and the
structural predicates used as theorem hypotheses."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import GraphError, InvalidFamilyError, InvalidPairError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Two graphs compare equal iff they have the same order and the same edge
    set; isomorphism is a separate question (see :mod:`conormal.symmetry`).
    The edge list is normalised to sorted ``(u, v)`` pairs with ``u < v`` on
    construction, so ``Graph(3, [(2, 1), (0, 1)])`` is valid input.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _nbrs: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"graph order must be a positive integer, got {self.n!r}")
        n = int(self.n)
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "_nbrs", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        n = a.shape[0]
        if a.shape != (n, n) or not np.array_equal(a, a.T):
            raise GraphError("adjacency matrix must be square and symmetric")
        if np.any(np.diag(a)):
            raise GraphError("adjacency matrix has a non-zero diagonal")
        us, vs = np.nonzero(np.triu(a, 1))
        return cls(n, list(zip(us.tolist(), vs.tolist())))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_family(kind: str, n: int) -> Graph:
    """Path, cycle or complete graph on ``n`` vertices."""
    if n < 1:
        raise InvalidFamilyError(f"family order must be >= 1, got {n}")
    if kind == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise InvalidFamilyError(f"cycle needs n >= 3, got {n}")
        return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if kind == "complete":
        return Graph(n, list(combinations(range(n), 2)))
    raise InvalidFamilyError(f"unknown family {kind!r}")


def path(n: int) -> Graph:
    return make_family("path", n)


def cycle(n: int) -> Graph:
    return make_family("cycle", n)


def complete(n: int) -> Graph:
    return make_family("complete", n)


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty(n: int) -> Graph:
    return Graph(n)


_FAMILY_CODES = {"P": "path", "C": "cycle", "K": "complete"}


def parse_family(name: str) -> Graph | None:
    """Parse short names such as ``P4``, ``C5``, ``K3``, ``K1,3`` or ``E4``.

    Returns None when ``name`` is not a family name.
    """
    s = name.strip()
    if len(s) < 2 or not s[1:].replace(",", "").isdigit():
        return None
    head, rest = s[0].upper(), s[1:]
    if head == "K" and "," in rest:
        a, b = rest.split(",", 1)
        if a != "1" or not b:
            return None
        return star(int(b))
    if "," in rest:
        return None
    if head == "E":
        return empty(int(rest))
    if head in _FAMILY_CODES:
        return make_family(_FAMILY_CODES[head], int(rest))
    return None


def complement(g: Graph) -> Graph:
    return Graph(g.n, [e for e in combinations(range(g.n), 2) if not g.adjacent(*e)])


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def neighborhood(g: Graph, v: int, closed: bool = False) -> frozenset[int]:
    _check_vertex(g, v)
    return g.neighbors(v) | {v} if closed else g.neighbors(v)


class TwinStatus(enum.Enum):
    FALSE_TWINS = "false_twins"
    TRUE_TWINS = "true_twins"
    NOT_TWINS = "not_twins"


def twin_status(g: Graph, u: int, v: int) -> TwinStatus:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InvalidPairError("twin status needs two distinct vertices")
    if g.neighbors(u) == g.neighbors(v):
        return TwinStatus.FALSE_TWINS
    if neighborhood(g, u, True) == neighborhood(g, v, True):
        return TwinStatus.TRUE_TWINS
    return TwinStatus.NOT_TWINS


def has_false_twins(g: Graph) -> bool:
    seen: set[frozenset[int]] = set()
    for v in range(g.n):
        s = g.neighbors(v)
        if s in seen:
            return True
        seen.add(s)
    return False


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of mutually twin vertices (open or closed), singletons omitted.

    A vertex cannot have both a false twin and a true twin, so the classes
    are disjoint. Swapping two members of a class is an automorphism.
    """
    groups: dict[tuple[str, frozenset[int]], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("open", g.neighbors(v)), []).append(v)
        groups.setdefault(("closed", g.neighbors(v) | {v}), []).append(v)
    return sorted(c for c in groups.values() if len(c) > 1)


def dominating_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    return h.n == g.n and all(g.adjacent(u, v) for u, v in h.edges)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def remove_vertex(g: Graph, v: int) -> Graph:
    """``G - v`` with the remaining vertices renumbered in order."""
    _check_vertex(g, v)
    if g.n == 1:
        raise GraphError("cannot remove the only vertex")

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    return Graph(g.n - 1, [(shift(a), shift(b)) for a, b in g.edges if v not in (a, b)])


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Image of ``g`` under the vertex map ``i -> perm[i]``."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertex set")
    return Graph(g.n, [(p[a], p[b]) for a, b in g.edges])


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose edge set is the bit pattern ``mask`` over the
    pairs of ``range(n)`` in lexicographic order (bit 0 = pair (0, 1))."""
    pairs = list(combinations(range(n), 2))
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
