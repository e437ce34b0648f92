"""Brute-force reference implementations.

Everything here works on plain ``(n, edge set)`` data and applies the
definitions literally: all permutations, all labelings, all vertex pairs.
Nothing is imported from the package except the Graph container, so these
functions can judge the package's search-based algorithms.
"""

from __future__ import annotations

import itertools

from conormal.graph import Graph


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges}


def adjacency(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_automorphisms(g: Graph) -> set[tuple[int, ...]]:
    """All permutations of V(G) preserving the edge set."""
    es = edge_set(g)
    out = set()
    for p in itertools.permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in es for u, v in g.edges):
            out.add(p)
    return out


def naive_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    eh = edge_set(h)
    return any(all(frozenset((p[u], p[v])) in eh for u, v in g.edges) for p in itertools.permutations(range(g.n)))


def _edge_maps(g: Graph, auts) -> list[tuple[int, ...]]:
    pos = {frozenset(e): i for i, e in enumerate(g.edges)}
    return [tuple(pos[frozenset((p[u], p[v]))] for u, v in g.edges) for p in auts]


def networkx_automorphisms(g: Graph) -> set[tuple[int, ...]]:
    """Automorphisms via networkx's VF2 matcher, for graphs too large for
    the all-permutations filter."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return {tuple(m[v] for v in range(g.n)) for m in GraphMatcher(G, G).isomorphisms_iter()}


def naive_distinguishing_number(g: Graph, auts: set[tuple[int, ...]] | None = None) -> int:
    """Least d such that some labeling in {1..d}^n is fixed by no
    non-identity automorphism; plain d^n enumeration. ``auts`` defaults to
    the all-permutations filter."""
    ident = tuple(range(g.n))
    auts = [p for p in (naive_automorphisms(g) if auts is None else auts) if p != ident]
    for d in range(1, g.n + 1):
        for lab in itertools.product(range(1, d + 1), repeat=g.n):
            if all(any(lab[p[x]] != lab[x] for x in range(g.n)) for p in auts):
                return d
    raise AssertionError("unreachable: n distinct labels always distinguish")


def naive_distinguishing_index(g: Graph) -> int | None:
    """Least d over {1..d}^m edge labelings; None when no edge labeling
    breaks every non-identity automorphism (undefined index)."""
    ident = tuple(range(g.n))
    auts = [p for p in naive_automorphisms(g) if p != ident]
    m = len(g.edges)
    if m == 0:
        return None
    maps = _edge_maps(g, auts)
    if any(e == tuple(range(m)) for e in maps):
        return None
    for d in range(1, m + 1):
        for lab in itertools.product(range(1, d + 1), repeat=m):
            if all(any(lab[q[x]] != lab[x] for x in range(m)) for q in maps):
                return d
    raise AssertionError("unreachable: a faithful action is broken by m distinct labels")


def labeling_is_distinguishing(g: Graph, labels, kind: str = "vertex") -> bool:
    ident = tuple(range(g.n))
    auts = [p for p in naive_automorphisms(g) if p != ident]
    if kind == "vertex":
        return all(any(labels[p[x]] != labels[x] for x in range(g.n)) for p in auts)
    maps = _edge_maps(g, auts)
    return all(any(labels[q[x]] != labels[x] for x in range(len(g.edges))) for q in maps)


def naive_conormal_edges(g: Graph, h: Graph) -> set[tuple[int, int]]:
    """Edge set of G*H straight from the definition, vertices (a, b) numbered a*|V(H)| + b."""
    eg, eh = edge_set(g), edge_set(h)
    verts = [(a, b) for a in range(g.n) for b in range(h.n)]
    out = set()
    for i, (a, b) in enumerate(verts):
        for j, (c, d) in enumerate(verts):
            if i < j and (frozenset((a, c)) in eg or frozenset((b, d)) in eh):
                out.add((i, j))
    return out


def naive_cartesian_edges(g: Graph, h: Graph) -> set[tuple[int, int]]:
    eg, eh = edge_set(g), edge_set(h)
    verts = [(a, b) for a in range(g.n) for b in range(h.n)]
    out = set()
    for i, (a, b) in enumerate(verts):
        for j, (c, d) in enumerate(verts):
            if i < j and ((a == c and frozenset((b, d)) in eh) or (b == d and frozenset((a, c)) in eg)):
                out.add((i, j))
    return out


def naive_hamiltonian_path(g: Graph) -> bool:
    """Factorial search over vertex orders."""
    if g.n <= 1:
        return True
    es = edge_set(g)
    return any(
        all(frozenset((p[i], p[i + 1])) in es for i in range(g.n - 1))
        for p in itertools.permutations(range(g.n))
    )


def naive_twin_classes(g: Graph) -> list[set[int]]:
    adj = adjacency(g)
    classes: list[set[int]] = []
    for u in range(g.n):
        for c in classes:
            v = next(iter(c))
            if adj[u] == adj[v] or adj[u] | {u} == adj[v] | {v}:
                c.add(u)
                break
        else:
            classes.append({u})
    return [c for c in classes if len(c) > 1]


def naive_graph6(g: Graph) -> str:
    """graph6 via networkx, an independent encoder."""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
