"""Distinguishing numbers and indices, the product labelings built from
factor labelings, lifting edge labelings along spanning subgraphs, and
Hamiltonian-path detection.

A labeling is distinguishing when the only automorphism preserving it is
the identity. Two routes decide that: iterating an explicit group
(:func:`is_distinguishing`) and searching the labeled graph for a
non-identity color-preserving automorphism (:func:`fixes_only_identity`).
The solvers pick whichever is cheaper for the group at hand.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Callable, Literal

import numpy as np

from ._search import ColoredGraph, automorphism_data
from .budget import DEFAULT_BUDGET, Budget, Meter
from .errors import (
    BudgetExceeded,
    GraphError,
    NoEdgesError,
    NonFaithfulActionError,
    PreconditionError,
)
from .graph import Graph, is_connected, twin_classes
from .symmetry import (
    AutomorphismGroup,
    Permutation,
    automorphisms,
    colored,
    edge_permutations,
    group_data,
    is_automorphism,
    isomorphism,
    nontrivial_stabilizer_element,
    root_trace,
)

Mode = Literal["exact", "certificate"]

# groups up to this size are checked element by element during random search
_EXPLICIT_VERIFY_LIMIT = 4_000_000  # group order x domain size
_EXACT_MODE_RETRIES = 32


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        _check_labels(self.labels, self.d)


@dataclass(frozen=True)
class EdgeLabeling:
    """Labels indexed by position in the graph's sorted edge list."""

    labels: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        _check_labels(self.labels, self.d)


def _check_labels(labels: tuple[int, ...], d: int) -> None:
    if d < 1:
        raise GraphError(f"label count must be >= 1, got {d}")
    bad = [x for x in labels if not 1 <= x <= d]
    if bad:
        raise GraphError(f"labels {sorted(set(bad))} outside 1..{d}")


Labeling = VertexLabeling | EdgeLabeling


@dataclass(frozen=True)
class DistinguishingResult:
    """Outcome of a D or D' computation.

    ``exact`` is False only in certificate mode when the value is an upper
    bound; ``lower_bound`` is then the best proven lower bound.
    ``lower_bound_basis`` says why no smaller value works: ``rigid``,
    ``nontrivial_group`` (value 2), ``exhaustive`` (search at value-1 came
    back empty) or ``twin_classes`` (a class of k mutual twins needs k
    distinct labels).
    """

    kind: Literal["vertex", "edge"]
    value: int
    mode: Mode
    witness: Labeling
    lower_bound_basis: str
    exact: bool
    lower_bound: int

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "mode": self.mode,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "lower_bound_basis": self.lower_bound_basis,
            "witness": list(self.witness.labels),
        }


def is_distinguishing(g: Graph, group: AutomorphismGroup, labeling: Labeling) -> bool:
    """True iff no non-identity element of ``group`` preserves ``labeling``."""
    if group.degree != g.n:
        raise GraphError("group degree does not match the graph")
    lab = np.asarray(labeling.labels)
    if isinstance(labeling, EdgeLabeling):
        if lab.size != g.m:
            raise GraphError(f"edge labeling has {lab.size} entries, graph has {g.m} edges")
        acting = edge_permutations(g, group.nontrivial())
    else:
        if lab.size != g.n:
            raise GraphError(f"vertex labeling has {lab.size} entries, graph has {g.n} vertices")
        acting = group.nontrivial()
    if acting.shape[0] == 0:
        return True
    return not bool(np.any(np.all(lab[acting] == lab, axis=1)))


def fixes_only_identity(g: Graph, labeling: Labeling, budget: Budget | None = None) -> bool:
    """Group-free check: search the labeled graph for a non-identity
    automorphism preserving the labels."""
    if isinstance(labeling, EdgeLabeling):
        cg = colored(g, edge_labels=labeling.labels)
    else:
        if len(labeling.labels) != g.n:
            raise GraphError("vertex labeling length does not match the graph")
        cg = colored(g, vertex_labels=labeling.labels)
    return nontrivial_stabilizer_element(cg, budget) is None


def edge_kernel_element(g: Graph) -> Permutation | None:
    """A non-identity automorphism fixing every edge setwise, if any.

    Only two configurations allow one: two isolated vertices (swap them) or
    a K2 component (swap its ends). Any vertex of degree >= 2 is pinned by
    its incident edges, and so is every neighbour of such a vertex.
    """
    iso = [v for v in range(g.n) if g.degree(v) == 0]
    p = list(range(g.n))
    if len(iso) >= 2:
        p[iso[0]], p[iso[1]] = iso[1], iso[0]
        return tuple(p)
    for u, v in g.edges:
        if g.degree(u) == 1 and g.degree(v) == 1:
            p[u], p[v] = v, u
            return tuple(p)
    return None


def _require_index_defined(g: Graph) -> None:
    if g.m == 0:
        raise NoEdgesError("distinguishing index needs at least one edge")
    k = edge_kernel_element(g)
    if k is not None:
        raise NonFaithfulActionError(
            f"automorphism {k} fixes every edge, so no edge labeling is distinguishing"
        )


class _Problem:
    """A labeling problem reduced to positions with values.

    Edge problems: one position per edge, values are labels.

    Vertex problems: one position per twin class of G (the twin quotient).
    Any distinguishing labeling gives the members of a class distinct
    labels, and twin swaps never matter beyond that, so a class of size s
    takes as its value an s-subset of the labels. A labeling is
    distinguishing iff no non-identity automorphism of the quotient, colored
    by twin kind and class size, preserves the values. Positions that are
    twins in the quotient need distinct values; the search lists them in
    increasing order.
    """

    def __init__(self, g: Graph, kind: str, budget: Budget):
        self.g = g
        self.kind = kind
        self.budget = budget
        self.order = group_data(g, budget).order
        if kind == "vertex":
            self._init_vertex()
        else:
            self.nodes = [[i] for i in range(g.m)]
            self.arity = [1] * g.m
            self.qcolors = np.zeros(g.m, dtype=np.int64)
            self.qcg = None
            self.classes: list[list[int]] = []
            self.group_order = self.order
        self.size = len(self.nodes)
        self._acting: np.ndarray | None = None
        self._acting_ready = False
        self._combos: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def _init_vertex(self) -> None:
        g = self.g
        members = {v: [v] for v in range(g.n)}
        kinds = {v: 0 for v in range(g.n)}
        for c in twin_classes(g):
            for v in c:
                members.pop(v, None)
            members[c[0]] = c
            kinds[c[0]] = 2 if g.adjacent(c[0], c[1]) else 1
        reps = sorted(members)
        self.nodes = [members[r] for r in reps]
        self.arity = [len(members[r]) for r in reps]
        self.qcolors = np.asarray([kinds[r] * (g.n + 1) + len(members[r]) for r in reps], dtype=np.int64)
        qm = g.matrix[np.ix_(reps, reps)].astype(np.int64)
        self.qcg = ColoredGraph(qm, self.qcolors, edge_values=(1,) if qm.any() else ())
        meter = self.budget.meter("twin quotient automorphism search")
        self.qdata = automorphism_data(self.qcg, meter)
        self.group_order = self.qdata.order
        # twins of the colored quotient
        groups: dict[tuple, list[int]] = {}
        for i in range(len(reps)):
            nb = frozenset(np.flatnonzero(qm[i]).tolist())
            groups.setdefault((int(self.qcolors[i]), "open", nb), []).append(i)
            groups.setdefault((int(self.qcolors[i]), "closed", nb | {i}), []).append(i)
        self.classes = sorted(c for c in groups.values() if len(c) > 1)

    def combos(self, d: int, s: int) -> list[tuple[int, ...]]:
        key = (d, s)
        if key not in self._combos:
            self._combos[key] = list(combinations(range(1, d + 1), s))
        return self._combos[key]

    def acting(self) -> np.ndarray | None:
        """Non-identity group elements acting on the positions, or None when
        the group is too large to list."""
        if not self._acting_ready:
            self._acting_ready = True
            n_el = self.group_order
            if n_el <= self.budget.element_limit and n_el * max(self.size, 1) <= _EXPLICIT_VERIFY_LIMIT:
                if self.kind == "vertex":
                    self._acting = self.qdata.elements()[1:]
                else:
                    self._acting = edge_permutations(self.g, automorphisms(self.g, self.budget).nontrivial())
        return self._acting

    def labeling(self, vals: np.ndarray, d: int) -> Labeling:
        if self.kind == "edge":
            return EdgeLabeling(tuple(int(x) + 1 for x in vals), d)
        labels = [0] * self.g.n
        for node, s, v in zip(self.nodes, self.arity, vals):
            for x, lab in zip(node, self.combos(d, s)[int(v)]):
                labels[x] = lab
        return VertexLabeling(tuple(labels), d)

    def verify(self, vals: np.ndarray, d: int) -> bool:
        acting = self.acting()
        if acting is not None:
            if acting.shape[0] == 0:
                return True
            return not bool(np.any(np.all(vals[acting] == vals, axis=1)))
        if self.kind == "edge":
            cg = colored(self.g, edge_labels=vals + 1)
        else:
            # values only need to be comparable between positions of equal color
            cg = ColoredGraph(self.qcg.matrix, self.qcolors * (1 << 32) + vals, self.qcg.edge_values)
        return nontrivial_stabilizer_element(cg, self.budget) is None

    def domain(self, d: int) -> list[int]:
        return [comb(d, s) for s in self.arity]

    def lower_bound(self) -> int:
        """Smallest d >= 2 leaving room for the forced distinct values."""
        d = max(2, max(self.arity, default=1))
        while any(comb(d, self.arity[c[0]]) < len(c) for c in self.classes):
            d += 1
        return d

    def random_witness(self, d: int, seed: int, tries: int) -> np.ndarray | None:
        rng = np.random.default_rng([seed, d, 0 if self.kind == "vertex" else 1])
        dom = np.asarray(self.domain(d), dtype=np.int64)
        for _ in range(tries):
            vals = (rng.random(self.size) * dom).astype(np.int64)
            for c in self.classes:
                if dom[c[0]] >= len(c):
                    vals[c] = rng.choice(int(dom[c[0]]), size=len(c), replace=False)
            if self.verify(vals, d):
                return vals
        return None

    def exhaustive(self, d: int, meter: Meter) -> np.ndarray | None:
        blocks = sorted(self.classes, key=lambda c: (-len(c), c[0]))
        seen = {x for c in blocks for x in c}
        perm = np.asarray([x for c in blocks for x in c] + [x for x in range(self.size) if x not in seen], dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(self.size)
        prev = [-1] * self.size
        for c in self.classes:
            for a, b in zip(c, c[1:]):
                prev[int(inv[b])] = int(inv[a])
        dom = [self.domain(d)[int(x)] for x in perm]
        # label renaming symmetry applies when every value is a single label
        canonical = all(s == 1 for s in self.arity)

        def unpermute(vals: np.ndarray) -> np.ndarray:
            out = np.empty_like(vals)
            out[perm] = vals
            return out

        acting = self.acting()
        if acting is None:
            found = _backtrack(dom, canonical, None, prev, lambda v: self.verify(unpermute(v), d), meter)
        else:
            found = _backtrack(dom, canonical, inv[acting[:, perm]], prev, None, meter)
        return None if found is None else unpermute(found)


def _closing_schedule(acting: np.ndarray, size: int):
    """For each position t, the (element, x, y) pairs whose two positions are
    both assigned once position t is, and the elements whose whole support
    is assigned at t."""
    ks, xs = np.nonzero(acting != np.arange(size))
    ys = acting[ks, xs]
    ts = np.maximum(xs, ys)
    deadline = np.zeros(acting.shape[0], dtype=np.int64)
    np.maximum.at(deadline, ks, ts)
    order = np.argsort(ts, kind="stable")
    ks, xs, ys, ts = ks[order], xs[order], ys[order], ts[order]
    cuts = np.searchsorted(ts, np.arange(size + 1))
    pairs = [(ks[cuts[t] : cuts[t + 1]], xs[cuts[t] : cuts[t + 1]], ys[cuts[t] : cuts[t + 1]]) for t in range(size)]
    dorder = np.argsort(deadline, kind="stable")
    dcuts = np.searchsorted(deadline[dorder], np.arange(size + 1))
    due = [dorder[dcuts[t] : dcuts[t + 1]] for t in range(size)]
    return pairs, due


def _backtrack(
    domain: list[int],
    canonical: bool,
    acting: np.ndarray | None,
    prev: list[int],
    leaf_check: Callable[[np.ndarray], bool] | None,
    meter: Meter,
) -> np.ndarray | None:
    """Find values ``0 <= v[p] < domain[p]`` that no listed group element
    preserves, or None.

    With ``canonical`` the values are labels and are assigned in canonical
    form (each new value at most one more than the largest so far), so
    renamings of the same labeling are visited once. ``prev[p]`` names an
    earlier position whose value the value at ``p`` must exceed (-1 for
    none). With an explicit group an element is marked broken as soon as
    two positions it relates carry different values, and a branch dies when
    some element's support is fully assigned without being broken. Without
    one, complete assignments go to ``leaf_check``.
    """
    size = len(domain)
    if size == 0:
        return None
    vals = np.zeros(size, dtype=np.int64)
    if acting is not None:
        pairs, due = _closing_schedule(acting, size)
        broken = [np.zeros(acting.shape[0], dtype=bool)] + [None] * size
    nxt = [0] * size
    top = [-1] * (size + 1)
    pos = 0
    while pos >= 0:
        if pos == size:
            if leaf_check is None or leaf_check(vals):
                return vals.copy()
            pos -= 1
            continue
        limit = domain[pos] - 1
        if canonical:
            limit = min(limit, top[pos] + 1)
        v = nxt[pos]
        if prev[pos] >= 0:
            v = max(v, int(vals[prev[pos]]) + 1)
        if v > limit:
            nxt[pos] = 0
            pos -= 1
            continue
        nxt[pos] = v + 1
        vals[pos] = v
        meter.tick()
        if acting is not None:
            ks, xs, ys = pairs[pos]
            b = broken[pos]
            if ks.size:
                b = b.copy()
                b[ks[vals[xs] != vals[ys]]] = True
            if due[pos].size and not b[due[pos]].all():
                continue
            broken[pos + 1] = b
        top[pos + 1] = max(top[pos], v)
        pos += 1
    return None


def _solve(problem: _Problem, mode: Mode, seed: int) -> DistinguishingResult:
    kind, budget = problem.kind, problem.budget
    if problem.order == 1:
        return DistinguishingResult(kind, 1, mode, problem.labeling(np.zeros(problem.size, dtype=np.int64), 1), "rigid", True, 1)
    meter = budget.meter(f"{kind} labeling search")
    lb = problem.lower_bound()
    proven = lb  # no labeling with fewer than `proven` labels exists
    basis = "nontrivial_group" if lb == 2 else "twin_classes"
    top = problem.g.n if kind == "vertex" else problem.g.m
    try:
        if lb > 2 and mode == "exact":
            if problem.exhaustive(lb - 1, meter) is not None:
                raise AssertionError("twin-class lower bound contradicted by search")
            basis = "exhaustive"
        d = lb
        while d <= top:
            # exact mode has the exhaustive search as backstop, so only a
            # short random probe precedes it
            tries = min(budget.retries, _EXACT_MODE_RETRIES) if mode == "exact" else budget.retries
            w = problem.random_witness(d, seed, tries)
            if w is None and mode == "exact":
                w = problem.exhaustive(d, meter)
                if w is None:
                    d += 1
                    proven = d
                    basis = "exhaustive"
                    continue
            if w is None:
                d += 1
                continue
            return DistinguishingResult(kind, d, mode, problem.labeling(w, d), basis, proven == d, proven)
    except BudgetExceeded as exc:
        exc.lower_bound = proven
        raise
    raise AssertionError(f"no distinguishing {kind} labeling found up to the domain size")


# Results are shared across isomorphic graphs: a hit on an isomorphic
# cached graph carries the witness over through the isomorphism.
_RESULTS: OrderedDict[tuple, list[tuple[Graph, DistinguishingResult]]] = OrderedDict()
_RESULTS_SIZE = 4096


def clear_results() -> None:
    _RESULTS.clear()


def _transport(result: DistinguishingResult, src: Graph, dst: Graph, f: Permutation) -> DistinguishingResult:
    w = result.witness.labels
    if result.kind == "vertex":
        labels = [0] * dst.n
        for u in range(src.n):
            labels[f[u]] = w[u]
        witness: Labeling = VertexLabeling(tuple(labels), result.witness.d)
    else:
        labels = [0] * dst.m
        idx = dst.edge_index
        for i, (u, v) in enumerate(src.edges):
            x, y = f[u], f[v]
            labels[idx[(x, y) if x < y else (y, x)]] = w[i]
        witness = EdgeLabeling(tuple(labels), result.witness.d)
    return replace(result, witness=witness)


def _memo(kind: str, g: Graph, mode: str, seed: int, budget: Budget, compute) -> DistinguishingResult:
    key = (kind, mode, seed, budget.retries, g.n, g.m, root_trace(colored(g)))
    bucket = _RESULTS.get(key)
    if bucket is None:
        bucket = _RESULTS[key] = []
        if len(_RESULTS) > _RESULTS_SIZE:
            _RESULTS.popitem(last=False)
    else:
        _RESULTS.move_to_end(key)
    for other, res in bucket:
        if other == g:
            return res
    for other, res in bucket:
        f = isomorphism(other, g, budget)
        if f is not None:
            hit = _transport(res, other, g, f)
            bucket.append((g, hit))
            return hit
    res = compute()
    bucket.append((g, res))
    return res


def distinguishing_number(
    g: Graph, mode: Mode = "exact", seed: int = 0, budget: Budget | None = None
) -> DistinguishingResult:
    """D(G).

    exact: the minimum, with every smaller label count refuted by search.
    certificate: values 1 and 2 are still exact (rigid, or non-rigid with a
    verified 2-witness); larger values are upper bounds unless the twin
    classes already force them.
    """
    budget = budget or DEFAULT_BUDGET
    return _memo("vertex", g, mode, seed, budget, lambda: _solve(_Problem(g, "vertex", budget), mode, seed))


def distinguishing_index(
    g: Graph, mode: Mode = "exact", seed: int = 0, budget: Budget | None = None
) -> DistinguishingResult:
    """D'(G); raises NoEdgesError / NonFaithfulActionError when undefined."""
    budget = budget or DEFAULT_BUDGET
    _require_index_defined(g)
    return _memo("edge", g, mode, seed, budget, lambda: _solve(_Problem(g, "edge", budget), mode, seed))


def _require_distinguishing(g: Graph, labeling: Labeling, name: str, budget: Budget) -> None:
    if not fixes_only_identity(g, labeling, budget):
        raise PreconditionError(f"{name} is distinguishing", "a non-identity automorphism preserves it")


def construct_l1(g: Graph, h: Graph, c: VertexLabeling, budget: Budget | None = None) -> VertexLabeling:
    """Labeling of ``G * H`` from a distinguishing labeling ``c`` of G.

    Row ``i`` (1-based over V(H)) gets the labels of ``c`` shifted by
    ``(i - 1) * d``; with 0-based ``h`` the label of ``(g, h)`` is
    ``h * d + c[g]``. Uses ``d * |V(H)|`` labels.
    """
    budget = budget or DEFAULT_BUDGET
    if len(c.labels) != g.n:
        raise GraphError("labeling length does not match the left factor")
    _require_distinguishing(g, c, "left factor labeling", budget)
    labels = [hh * c.d + c.labels[gg] for gg in range(g.n) for hh in range(h.n)]
    return VertexLabeling(tuple(labels), c.d * h.n)


def construct_l2(g: Graph, h: Graph, c: VertexLabeling, budget: Budget | None = None) -> VertexLabeling:
    """Mirror of :func:`construct_l1` from a distinguishing labeling of H:
    ``(g, h) -> g * d + c[h]`` (0-based ``g``), ``|V(G)| * d`` labels."""
    budget = budget or DEFAULT_BUDGET
    if len(c.labels) != h.n:
        raise GraphError("labeling length does not match the right factor")
    _require_distinguishing(h, c, "right factor labeling", budget)
    labels = [gg * c.d + c.labels[hh] for gg in range(g.n) for hh in range(h.n)]
    return VertexLabeling(tuple(labels), g.n * c.d)


def lift_edge_labeling(
    g: Graph, h: Graph, labeling: EdgeLabeling, repeated_label: int = 1, budget: Budget | None = None
) -> EdgeLabeling:
    """Extend a distinguishing edge labeling of a spanning subgraph H to G.

    Edges of H keep their labels, the other edges of G all get
    ``repeated_label``. Requires every automorphism of G to be an
    automorphism of H.
    """
    budget = budget or DEFAULT_BUDGET
    if h.n != g.n:
        raise PreconditionError("H spans G", f"orders differ: {h.n} vs {g.n}")
    missing = [e for e in h.edges if not g.adjacent(*e)]
    if missing:
        raise PreconditionError("H spans G", f"edge {missing[0]} of H is not an edge of G")
    for p in group_data(g, budget).generators:
        if not is_automorphism(h, p):
            raise PreconditionError(
                "Aut(G) is a subgroup of Aut(H)", f"automorphism {tuple(int(x) for x in p)} of G does not preserve H"
            )
    if len(labeling.labels) != h.m:
        raise GraphError("labeling length does not match the edges of H")
    if not 1 <= repeated_label <= labeling.d:
        raise GraphError(f"repeated label must be one of 1..{labeling.d}")
    _require_distinguishing(h, labeling, "subgraph labeling", budget)
    own = dict(zip(h.edges, labeling.labels))
    out = EdgeLabeling(tuple(own.get(e, repeated_label) for e in g.edges), labeling.d)
    if not fixes_only_identity(g, out, budget):
        raise AssertionError("lifted labeling is not distinguishing")
    return out


def is_traceable(g: Graph, budget: Budget | None = None, max_vertices: int = 24) -> bool:
    """Exact Hamiltonian-path test by memoised search over (visited set, end)."""
    if g.n > max_vertices:
        raise BudgetExceeded("hamiltonian path search (vertices)", max_vertices, g.n)
    if g.n == 1:
        return True
    if not is_connected(g):
        return False
    meter = (budget or DEFAULT_BUDGET).meter("hamiltonian path search")
    nbr = [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]
    full = (1 << g.n) - 1
    dead: set[tuple[int, int]] = set()

    def extend(mask: int, v: int) -> bool:
        if mask == full:
            return True
        if (mask, v) in dead:
            return False
        meter.tick()
        free = nbr[v] & ~mask
        while free:
            bit = free & -free
            free ^= bit
            if extend(mask | bit, bit.bit_length() - 1):
                return True
        dead.add((mask, v))
        return False

    # one endpoint per orbit would suffice; all starts keeps this independent of the group code
    return any(extend(1 << v, v) for v in range(g.n))

