"""Automorphism groups, isomorphism, product automorphisms and the action of
automorphisms on edges.

Permutations are tuples ``p`` with ``p[i]`` the image of vertex ``i``.
Groups are explicit element lists (a ``(order, n)`` integer array), which
is what labeling verification needs; the search that produces them works
through a stabilizer chain so the element list is only materialised on
request and only up to ``Budget.element_limit`` elements.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from ._search import ColoredGraph, GroupData, Searcher, automorphism_data, find_isomorphism
from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, GraphError
from .graph import Graph
from .products import ProductIndexMap, conormal

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p o q``: apply q first."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _as_perm(p: Sequence[int], n: int) -> np.ndarray:
    a = np.asarray(p, dtype=np.int64)
    if a.shape != (n,):
        raise GraphError(f"permutation of degree {a.size} does not match graph order {n}")
    if not np.array_equal(np.sort(a), np.arange(n)):
        raise GraphError("not a permutation")
    return a


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    a = _as_perm(p, g.n)
    m = g.matrix
    return bool(np.array_equal(m[np.ix_(a, a)], m))


@dataclass(frozen=True, eq=False)
class AutomorphismGroup:
    """All automorphisms of a graph, identity in row 0."""

    degree: int
    array: np.ndarray = field(repr=False)
    generators: tuple[Permutation, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return int(self.array.shape[0])

    @property
    def identity(self) -> Permutation:
        return identity(self.degree)

    @property
    def elements(self) -> list[Permutation]:
        return [tuple(int(x) for x in row) for row in self.array]

    def nontrivial(self) -> np.ndarray:
        return self.array[1:]

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        row = np.asarray(p)
        if row.shape != (self.degree,):
            return False
        return bool(np.any(np.all(self.array == row, axis=1)))


_CACHE: OrderedDict[object, GroupData] = OrderedDict()
_CACHE_SIZE = 4096


def _cached(key, compute):
    hit = _CACHE.get(key)
    if hit is not None:
        _CACHE.move_to_end(key)
        return hit
    val = compute()
    _CACHE[key] = val
    if len(_CACHE) > _CACHE_SIZE:
        _CACHE.popitem(last=False)
    return val


def clear_cache() -> None:
    _CACHE.clear()


def colored(g: Graph, vertex_labels=None, edge_labels=None) -> ColoredGraph:
    """Colored view of ``g``; edge labels are indexed by ``g.edges`` position."""
    if edge_labels is None:
        return ColoredGraph(g.matrix, vertex_labels, edge_values=(1,) if g.m else ())
    lab = np.asarray(edge_labels, dtype=np.int64)
    if lab.shape != (g.m,):
        raise GraphError(f"edge labeling has {lab.size} entries, graph has {g.m} edges")
    m = np.zeros((g.n, g.n), dtype=np.int64)
    if g.m:
        e = np.asarray(g.edges)
        m[e[:, 0], e[:, 1]] = lab
        m[e[:, 1], e[:, 0]] = lab
    return ColoredGraph(m, vertex_labels)


def group_data(g: Graph, budget: Budget | None = None) -> GroupData:
    budget = budget or DEFAULT_BUDGET
    return _cached(("aut", g), lambda: automorphism_data(colored(g), budget.meter("automorphism search")))


def group_order(g: Graph, budget: Budget | None = None) -> int:
    return group_data(g, budget).order


def automorphisms(g: Graph, budget: Budget | None = None) -> AutomorphismGroup:
    """Complete automorphism group of ``g`` as an explicit element list.

    Raises BudgetExceeded when the search needs more than
    ``budget.node_limit`` refinement nodes or the group has more than
    ``budget.element_limit`` elements.
    """
    budget = budget or DEFAULT_BUDGET
    data = group_data(g, budget)
    if data.order > budget.element_limit:
        raise BudgetExceeded("automorphism group elements", budget.element_limit, data.order)
    arr = data.elements()
    gens = tuple(tuple(int(x) for x in p) for p in data.generators)
    return AutomorphismGroup(g.n, arr, gens)


def is_rigid(g: Graph, budget: Budget | None = None) -> bool:
    return group_order(g, budget) == 1


def nontrivial_stabilizer_element(cg: ColoredGraph, budget: Budget | None = None) -> Permutation | None:
    """Some non-identity color-preserving automorphism, or None if the
    colored graph is rigid. Never enumerates the group."""
    budget = budget or DEFAULT_BUDGET
    data = automorphism_data(cg, budget.meter("stabilizer search"), stop_at_first=True)
    if not data.generators:
        return None
    return tuple(int(x) for x in data.generators[0])


def root_trace(cg: ColoredGraph) -> bytes:
    """Isomorphism invariant: digest of the refinement of the initial
    coloring."""
    return Searcher(cg, Budget(node_limit=1).meter("root refinement")).refine(cg.vcolors)[1]


def isomorphism(g: Graph, h: Graph, budget: Budget | None = None) -> Permutation | None:
    """A bijection ``f`` with ``uv in E(g) <=> f(u)f(v) in E(h)``, or None."""
    budget = budget or DEFAULT_BUDGET
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    f = find_isomorphism(colored(g), colored(h), budget.meter("isomorphism search"))
    return None if f is None else tuple(int(x) for x in f)


def are_isomorphic(g: Graph, h: Graph, budget: Budget | None = None) -> bool:
    return isomorphism(g, h, budget) is not None


def product_automorphism(
    a: Sequence[int], b: Sequence[int], swap: bool, index_map: ProductIndexMap
) -> Permutation:
    """Vertex map of ``G * H`` built from factor maps.

    Without swap: ``(g, h) -> (a(g), b(h))`` with ``a`` on V(G), ``b`` on V(H).
    With swap (requires equal factor orders): ``(g, h) -> (b(h), a(g))``
    where ``a: V(G) -> V(H)`` and ``b: V(H) -> V(G)``.
    """
    nl, nr = index_map.n_left, index_map.n_right
    if swap:
        if nl != nr:
            raise GraphError("coordinate swap needs factors of equal order")
        if len(a) != nl or len(b) != nr:
            raise GraphError("factor map degrees do not match the index map")
        return tuple(b[h] * nr + a[g] for g in range(nl) for h in range(nr))
    if len(a) != nl or len(b) != nr:
        raise GraphError("factor map degrees do not match the index map")
    return tuple(a[g] * nr + b[h] for g in range(nl) for h in range(nr))


def product_group_array(ga: np.ndarray, gb: np.ndarray, nr: int) -> np.ndarray:
    """All ``(alpha, beta)`` product maps, as rows, for element arrays of two groups."""
    rows = ga[:, None, :, None] * nr + gb[None, :, None, :]
    return rows.reshape(ga.shape[0] * gb.shape[0], -1)


def aut_factorizes(g: Graph, h: Graph, budget: Budget | None = None) -> bool:
    """True iff every automorphism of ``G * H`` is a product map ``(alpha, beta)``."""
    budget = budget or DEFAULT_BUDGET
    ag, ah = automorphisms(g, budget), automorphisms(h, budget)
    prod_order = group_order(conormal(g, h), budget)
    if prod_order != ag.order * ah.order:
        return False
    prod = product_group_array(ag.array, ah.array, h.n)
    full = automorphisms(conormal(g, h), budget).array
    return {r.tobytes() for r in full} == {r.tobytes() for r in prod}


def edge_action(g: Graph, p: Sequence[int]) -> Permutation:
    """Permutation of edge positions induced by the automorphism ``p``."""
    if not is_automorphism(g, p):
        raise GraphError("edge action is only defined for automorphisms")
    idx = g.edge_index
    out = []
    for u, v in g.edges:
        x, y = p[u], p[v]
        out.append(idx[(x, y) if x < y else (y, x)])
    return tuple(out)


def edge_permutations(g: Graph, perms: np.ndarray) -> np.ndarray:
    """Row-wise edge action of a stack of automorphisms."""
    pos = np.full((g.n, g.n), -1, dtype=np.int64)
    if g.m:
        e = np.asarray(g.edges)
        pos[e[:, 0], e[:, 1]] = np.arange(g.m)
        pos[e[:, 1], e[:, 0]] = np.arange(g.m)
        us, vs = e[:, 0], e[:, 1]
        return pos[perms[:, us], perms[:, vs]]
    return np.zeros((perms.shape[0], 0), dtype=np.int64)


def all_isomorphisms_between(g: Graph, h: Graph, budget: Budget | None = None) -> list[Permutation]:
    """Every isomorphism ``g -> h`` (empty when not isomorphic)."""
    f = isomorphism(g, h, budget)
    if f is None:
        return []
    # each isomorphism is f o alpha for a unique alpha in Aut(g)
    return [compose(f, a) for a in automorphisms(g, budget).elements]

