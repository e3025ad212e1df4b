"""Simple undirected graphs, graph6 I/O, named families, and an exact Max-Cut solver.

Vertices are labeled 0..n-1. The edge list is kept sorted lexicographically
with u < v in every pair; the position of an edge in that list is its
canonical edge index, which every other module uses to address per-edge
quantities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAXCUT_VERTEX_BUDGET = 24  # 2^n enumeration
GRAPH6_MAX_N = 62  # short form only


class Graph6Error(ValueError):
    """Malformed graph6 record. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with canonical edge ordering."""

    n: int
    edges: tuple[tuple[int, int], ...]
    edge_index: dict[tuple[int, int], int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edge list not strictly lexicographically increasing")
            prev = (u, v)
        object.__setattr__(
            self, "edge_index", {e: i for i, e in enumerate(self.edges)}
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> np.ndarray:
        """Symmetric boolean adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = a[v, u] = True
        return a

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index


def graph_from_edges(n: int, edges) -> Graph:
    """Build a Graph from an arbitrary edge iterable, canonicalizing order."""
    canon = sorted({(u, v) if u < v else (v, u) for u, v in edges})
    return Graph(n=n, edges=tuple(canon))


@dataclass(frozen=True)
class CutValue:
    """Max-Cut result: the cut size and one witnessing assignment.

    `assignment` packs vertex sides into an unsigned integer, bit v = side
    of vertex v.
    """

    value: int
    assignment: int


def _upper_triangle_pairs(n: int):
    """Column-major upper-triangle pair order: (0,1),(0,2),(1,2),(0,3),..."""
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 record (n <= 62)."""
    data = line.rstrip("\n")
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 record", 0)
    raw = data.encode("ascii")
    head = raw[0]
    if head == 126:  # '~' introduces the long form
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not (63 <= head <= 125):
        raise Graph6Error(f"invalid header byte {head}", 0)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = raw[1:]
    if len(payload) < nbytes:
        raise Graph6Error(
            f"truncated payload: need {nbytes} bytes, got {len(payload)}",
            1 + len(payload),
        )
    if len(payload) > nbytes:
        raise Graph6Error("trailing garbage after graph6 payload", 1 + nbytes)
    bits = []
    for i, b in enumerate(payload):
        if not (63 <= b <= 126):
            raise Graph6Error(f"invalid payload byte {b}", 1 + i)
        val = b - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = sorted(
        (u, v) for (u, v), bit in zip(_upper_triangle_pairs(n), bits) if bit
    )
    return Graph(n=n, edges=tuple(edges))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as one short-form graph6 record (no newline)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(u, v) else 0 for u, v in _upper_triangle_pairs(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_file(path) -> list[Graph]:
    """Read a graph6 file: one record per line, optional format header line."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line == ">>graph6<<":
                continue
            graphs.append(parse_graph6(line))
    return graphs


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def make_family(kind: str, n: int) -> Graph:
    """Named graph families: star, cycle, path, complete."""
    if n < 2:
        raise ValueError(f"family graphs need n >= 2, got {n}")
    if kind == "star":
        edges = [(0, v) for v in range(1, n)]
    elif kind == "cycle":
        edges = [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)]
    elif kind == "path":
        edges = [(v, v + 1) for v in range(n - 1)]
    elif kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        raise ValueError(f"unknown family {kind!r}")
    return graph_from_edges(n, edges)


def cut_sizes(g: Graph) -> np.ndarray:
    """cut[x] = number of edges cut by assignment x, for all 2^n assignments."""
    x = np.arange(1 << g.n, dtype=np.int64)
    cut = np.zeros(1 << g.n, dtype=np.int64)
    for u, v in g.edges:
        cut += ((x >> u) ^ (x >> v)) & 1
    return cut


def exact_max_cut(g: Graph) -> CutValue:
    """Brute-force Max-Cut over all 2^n assignments.

    The witness is the lowest assignment (as an unsigned integer) among
    the maximizers, so results are deterministic.
    """
    if g.n > MAXCUT_VERTEX_BUDGET:
        raise ValueError(
            f"exact_max_cut enumerates 2^n assignments; n={g.n} exceeds "
            f"the budget of {MAXCUT_VERTEX_BUDGET}"
        )
    cut = cut_sizes(g)
    best = int(np.argmax(cut))  # argmax returns the first, i.e. lowest, index
    return CutValue(value=int(cut[best]), assignment=best)
