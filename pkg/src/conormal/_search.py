"""Individualization-refinement search over vertex- and edge-colored graphs.

One kernel serves three callers: enumerating automorphism groups (through
a stabilizer chain of generators and transversals), isomorphism testing,
and deciding whether a labeling is fixed by a non-identity automorphism.

Partitions are integer color arrays whose values are cell ranks. A
refinement round gives every vertex the signature
``(own color, #neighbors of edge color c in cell j for all c, j)`` and
re-ranks vertices by sorted signature, so the result is equivariant under
isomorphisms and cell order only ever gets finer. The trace of a
refinement is a digest of the signature tables seen; two nodes of the
search tree can only be related by an isomorphism when their traces agree.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .budget import Meter


class ColoredGraph:
    """Edge-colored adjacency matrix plus initial vertex colors.

    ``matrix[u, v] == 0`` means no edge; positive entries are edge colors.
    """

    __slots__ = ("n", "matrix", "vcolors", "edge_values", "layers")

    def __init__(self, matrix: np.ndarray, vcolors=None, edge_values=None):
        m = np.asarray(matrix, dtype=np.int64)
        self.n = m.shape[0]
        self.matrix = m
        if vcolors is None:
            self.vcolors = np.zeros(self.n, dtype=np.int64)
        else:
            self.vcolors = np.asarray(vcolors, dtype=np.int64)
        if edge_values is None:
            edge_values = np.unique(m[m > 0])
        self.edge_values = tuple(int(c) for c in edge_values)
        self.layers = [(m == c).astype(np.float64) for c in self.edge_values]


@dataclass
class Node:
    colors: np.ndarray
    trace: bytes
    cell: np.ndarray | None  # vertices of the target cell; None at a leaf


class Searcher:
    def __init__(self, cg: ColoredGraph, meter: Meter):
        self.cg = cg
        self.meter = meter
        self._ar = np.arange(cg.n)

    def refine(self, colors: np.ndarray) -> tuple[np.ndarray, bytes]:
        self.meter.tick()
        n = self.cg.n
        _, colors = np.unique(colors, return_inverse=True)
        colors = colors.reshape(-1)
        h = hashlib.blake2b(digest_size=16)
        h.update(np.bincount(colors).tobytes())
        k = int(colors.max()) + 1
        while k < n:
            onehot = np.zeros((n, k))
            onehot[self._ar, colors] = 1.0
            sig = np.concatenate([colors[:, None].astype(np.float64)] + [lay @ onehot for lay in self.cg.layers], axis=1)
            uniq, inv = np.unique(sig, axis=0, return_inverse=True)
            h.update(np.int64(uniq.shape[1]).tobytes())
            h.update(uniq.tobytes())
            colors = inv.reshape(-1)
            if len(uniq) == k:
                break
            k = len(uniq)
        return colors, h.digest()

    @staticmethod
    def individualize(colors: np.ndarray, v: int) -> np.ndarray:
        c = colors * 2 + 1
        c[v] -= 1
        return c

    @staticmethod
    def target_cell(colors: np.ndarray) -> np.ndarray | None:
        counts = np.bincount(colors)
        if counts.max() == 1:
            return None
        big = np.where(counts > 1, counts, np.iinfo(np.int64).max)
        return np.flatnonzero(colors == int(np.argmin(big)))

    def node(self, colors: np.ndarray) -> Node:
        c, tr = self.refine(colors)
        return Node(c, tr, self.target_cell(c))

    def first_path(self) -> list[Node]:
        path = [self.node(self.cg.vcolors)]
        while path[-1].cell is not None:
            top = path[-1]
            path.append(self.node(self.individualize(top.colors, int(top.cell[0]))))
        return path


def _leaf_map(source_leaf: np.ndarray, target_leaf: np.ndarray) -> np.ndarray:
    # vertex of rank r in the source leaf -> vertex of rank r in the target leaf
    return np.argsort(target_leaf)[source_leaf]


def is_color_isomorphism(src: ColoredGraph, dst: ColoredGraph, f: np.ndarray) -> bool:
    """True iff ``i -> f[i]`` maps ``src`` onto ``dst`` preserving all colors."""
    return bool(
        np.array_equal(dst.vcolors[f], src.vcolors)
        and np.array_equal(dst.matrix[np.ix_(f, f)], src.matrix)
    )


def _descend(target: Searcher, colors: np.ndarray, level: int, path: list[Node], source: ColoredGraph) -> np.ndarray | None:
    """Depth-first search below a target node whose trace matches
    ``path[level]``, for a leaf equivalent to the source leaf whose induced
    map is a color isomorphism."""
    cell = target.target_cell(colors)
    if cell is None:
        f = _leaf_map(path[-1].colors, colors)
        return f if is_color_isomorphism(source, target.cg, f) else None
    want = path[level + 1].trace
    for w in cell:
        c2, tr = target.refine(target.individualize(colors, int(w)))
        if tr != want:
            continue
        found = _descend(target, c2, level + 1, path, source)
        if found is not None:
            return found
    return None


def find_isomorphism(src: ColoredGraph, dst: ColoredGraph, meter: Meter) -> np.ndarray | None:
    if src.n != dst.n or src.edge_values != dst.edge_values:
        return None
    if not np.array_equal(np.sort(src.vcolors), np.sort(dst.vcolors)):
        return None
    path = Searcher(src, meter).first_path()
    target = Searcher(dst, meter)
    c, tr = target.refine(dst.vcolors)
    if tr != path[0].trace:
        return None
    return _descend(target, c, 0, path, src)


def _orbit(v: int, gens: list[np.ndarray]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = int(g[x])
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _transversal(v: int, gens: list[np.ndarray], n: int) -> np.ndarray:
    """Rows t with t[v] running over the orbit of v; identity first."""
    reps = {v: np.arange(n)}
    order = [v]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for g in gens:
            y = int(g[x])
            if y not in reps:
                reps[y] = g[reps[x]]
                order.append(y)
    return np.stack([reps[x] for x in order])


@dataclass
class GroupData:
    """Stabilizer chain along the first path of the search tree.

    ``base[L]`` is the vertex individualized at level L and
    ``transversals[L]`` holds one element of the pointwise stabilizer of
    ``base[:L]`` for every image of ``base[L]``. The group order is the
    product of the transversal sizes.
    """

    n: int
    base: list[int]
    generators: list[np.ndarray]
    transversals: list[np.ndarray]
    nodes: int

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def elements(self) -> np.ndarray:
        elems = np.arange(self.n)[None, :]
        for t in reversed(self.transversals):
            elems = np.concatenate([row[elems] for row in t], axis=0)
        return elems


def automorphism_data(cg: ColoredGraph, meter: Meter, stop_at_first: bool = False) -> GroupData:
    """Generators and transversals of the color-preserving automorphism group.

    With ``stop_at_first`` the search returns as soon as one non-identity
    automorphism is known (its transversal data is then incomplete).
    """
    s = Searcher(cg, meter)
    path = s.first_path()
    depth = len(path) - 1
    base = [int(node.cell[0]) for node in path[:-1]]
    gens: list[np.ndarray] = []
    transversals: list[np.ndarray] = [np.arange(cg.n)[None, :]] * depth
    for level in reversed(range(depth)):
        node = path[level]
        v = base[level]
        orbit = _orbit(v, gens)
        excluded: set[int] = set()
        for w in node.cell:
            w = int(w)
            if w in orbit or w in excluded:
                continue
            c2, tr = s.refine(s.individualize(node.colors, w))
            g = _descend(s, c2, level + 1, path, cg) if tr == path[level + 1].trace else None
            if g is None:
                excluded |= _orbit(w, gens)
                continue
            gens.append(g)
            if stop_at_first:
                return GroupData(cg.n, base, gens, [], meter.count)
            orbit = _orbit(v, gens)
        transversals[level] = _transversal(v, gens, cg.n)
    return GroupData(cg.n, base, gens, transversals, meter.count)
