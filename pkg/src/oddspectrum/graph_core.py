"""Graph representation, standard generators, blow-ups, odd girth, and graph6 I/O.

All graphs are simple, undirected, and labeled with vertices 0..n-1. Graph
values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

import numpy as np

from .errors import Graph6ParseError, UnsupportedSizeError

# Odd girth of a graph without odd cycles (i.e. a bipartite graph).
INFINITE = math.inf

# 2^(n(n-1)/2) labeled graphs; n = 8 already means 2^28 of them.
MAX_ENUMERATION_VERTICES = 8

# Single-byte graph6 size header covers n <= 62.
MAX_GRAPH6_VERTICES = 62

GRAPH6_HEADER_PREFIX = ">>graph6<<"


class Graph:
    """Simple undirected graph: a vertex count and a set of edges.

    Edges are normalized to sorted (u, v) pairs with u < v; self-loops and
    out-of-range endpoints are rejected. Duplicate edges collapse.
    """

    __slots__ = ("n", "edges", "_neighbors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n = {n}")
            normalized.add((u, v) if u < v else (v, u))
        self.n = int(n)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(normalized))
        self._neighbors: tuple[tuple[int, ...], ...] | None = None

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency lists, built once on first use."""
        if self._neighbors is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            self._neighbors = tuple(tuple(sorted(a)) for a in adj)
        return self._neighbors

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors())

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix as floats."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def cycle_graph(k: int) -> Graph:
    """The cycle on k >= 3 vertices."""
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph with parts {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


def blow_up(g: Graph, m: int) -> Graph:
    """Replace every vertex by m independent copies, every edge by a full join.

    Copy c of vertex v gets label v*m + c, so blow_up(g, 1) returns a graph
    identical to g. The operation multiplies the spectrum by m (padding with
    zeros) and preserves the odd girth.
    """
    if m < 1:
        raise ValueError(f"blow-up factor must be at least 1, got {m}")
    edges = [
        (u * m + i, v * m + j)
        for u, v in g.edges
        for i in range(m)
        for j in range(m)
    ]
    return Graph(g.n * m, edges)


def odd_girth(g: Graph) -> float:
    """Length of the shortest odd cycle; INFINITE when the graph is bipartite.

    BFS on the bipartite double cover: the shortest odd closed walk through v
    has length dist((v, even), (v, odd)), and a shortest odd closed walk is
    always an odd cycle. Total cost O(n(n+m)).
    """
    adj = g.neighbors()
    n = g.n
    best = INFINITE
    for start in range(n):
        # State v*2 + parity in the double cover; BFS from (start, 0).
        dist = [-1] * (2 * n)
        dist[2 * start] = 0
        queue = deque([2 * start])
        while queue:
            state = queue.popleft()
            d = dist[state]
            if d + 1 >= best:
                continue
            v, parity = state >> 1, state & 1
            for w in adj[v]:
                nxt = (w << 1) | (parity ^ 1)
                if dist[nxt] < 0:
                    dist[nxt] = d + 1
                    queue.append(nxt)
        d_odd = dist[2 * start + 1]
        if d_odd >= 0 and d_odd < best:
            best = d_odd
    return best


def is_bipartite(g: Graph) -> bool:
    """Greedy BFS 2-coloring; independent of the odd_girth computation."""
    adj = g.neighbors()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ..."""
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (single-byte size header, n <= 62).

    The optional ``>>graph6<<`` prefix is accepted. Strict on everything
    else: bad header, short input, trailing bytes, and nonzero padding bits
    all raise Graph6ParseError with the offending byte offset.
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER_PREFIX):
        line = line[len(GRAPH6_HEADER_PREFIX):]
    if not line:
        raise Graph6ParseError("empty graph6 input", 0)
    try:
        raw = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6ParseError("non-ASCII byte in graph6 input", exc.start) from None

    header = raw[0]
    if header == 126:
        raise Graph6ParseError("multi-byte size header not supported", 0)
    if not 63 <= header <= 125:
        raise Graph6ParseError(f"invalid size header byte {header}", 0)
    n = header - 63

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    if len(raw) - 1 < n_bytes:
        raise Graph6ParseError(
            f"truncated input: need {n_bytes} data bytes for n = {n}", len(raw)
        )
    if len(raw) - 1 > n_bytes:
        raise Graph6ParseError("trailing garbage after edge data", 1 + n_bytes)

    bits: list[int] = []
    for offset, byte in enumerate(raw[1:], start=1):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"non-printable data byte {byte}", offset)
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[n_bits:]):
        raise Graph6ParseError("nonzero padding bits", n_bytes)

    edges = [pair for pair, bit in zip(_upper_triangle_pairs(n), bits) if bit]
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of a labeled graph with n <= 62."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise UnsupportedSizeError(
            f"graph6 single-byte header supports n <= {MAX_GRAPH6_VERTICES}, got {g.n}"
        )
    n = g.n
    present = g._edge_set()
    bits = [1 if (u, v) in present else 0 for u, v in _upper_triangle_pairs(n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices, in edge-bitmask order.

    Bit j of the mask controls the j-th pair in column-major upper-triangle
    order. No isomorphism reduction is performed.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_ENUMERATION_VERTICES:
        raise UnsupportedSizeError(
            f"enumeration limited to n <= {MAX_ENUMERATION_VERTICES}, got {n}"
        )
    pairs = list(_upper_triangle_pairs(n))
    for mask in range(1 << len(pairs)):
        edges = [pairs[j] for j in range(len(pairs)) if (mask >> j) & 1]
        yield Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6ParseError]]:
    """Parse an iterable of graph6 lines, yielding (line_number, result).

    Blank lines and a bare format header are skipped; malformed lines yield
    the parse error instead of a graph so callers can count and continue.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped == GRAPH6_HEADER_PREFIX:
            continue
        try:
            yield lineno, parse_graph6(stripped)
        except Graph6ParseError as exc:
            yield lineno, exc
