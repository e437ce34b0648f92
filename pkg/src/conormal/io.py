"""graph6 and plain edge-list encodings.

graph6 packs the upper triangle of the adjacency matrix column by column
(pairs ``(0,1), (0,2), (1,2), (0,3), ...``) into 6-bit groups, each written
as ``chr(63 + bits)``. Only the short order prefix (n <= 62) is produced,
matching what this package needs; longer graphs go through the edge-list
format instead.
"""

from __future__ import annotations

from pathlib import Path

from .errors import Graph6Error
from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 output is limited to n <= {GRAPH6_MAX_N}, got {n}")
    bits = [1 if g.adjacent(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        # long form: '~' followed by 18 bits (or '~~' + 36 bits)
        if len(data) >= 2 and data[1] == 63:
            if len(data) < 8:
                raise Graph6Error("truncated graph6 size field")
            n = _bits_to_int(data[2:8])
            body = data[8:]
        else:
            if len(data) < 4:
                raise Graph6Error("truncated graph6 size field")
            n = _bits_to_int(data[1:4])
            body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex")
    npairs = n * (n - 1) // 2
    if len(body) != (npairs + 5) // 6:
        raise Graph6Error(f"graph6 body has {len(body)} chars, expected {(npairs + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _bits_to_int(groups: list[int]) -> int:
    val = 0
    for d in groups:
        val = (val << 6) | d
    return val


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise Graph6Error("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except ValueError as exc:
        raise Graph6Error(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise Graph6Error("edge lines must hold exactly two indices")
    if len(edges) != m:
        raise Graph6Error(f"edge list header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def dumps(g: Graph) -> str:
    """graph6 when it fits, edge list otherwise."""
    return to_graph6(g) + "\n" if g.n <= GRAPH6_MAX_N else to_edge_list(g)


def loads(text: str) -> list[Graph]:
    """Parse one edge-list graph or any number of graph6 lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise Graph6Error("no graph in input")
    first = lines[0].split()
    if len(first) == 2 and all(t.isdigit() for t in first):
        return [from_edge_list(text)]
    return [from_graph6(ln) for ln in lines if not ln.startswith("#")]


def read_graphs(path: str | Path) -> list[Graph]:
    return loads(Path(path).read_text())
