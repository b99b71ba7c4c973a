"""Shared test helpers: independent oracles kept deliberately separate from
the library code they check."""

import itertools
import math
import random

from oddspectrum import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def brute_force_odd_girth(g: Graph, limit: int | None = None) -> float:
    """Shortest odd cycle by direct enumeration of simple cycles."""
    adj = [set(nbrs) for nbrs in g.neighbors()]
    top = g.n if limit is None else min(limit, g.n)
    for length in range(3, top + 1, 2):
        for subset in itertools.combinations(range(g.n), length):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # count each cycle once per orientation
                cycle = (first,) + perm
                if all(
                    cycle[i + 1] in adj[cycle[i]] for i in range(length - 1)
                ) and cycle[0] in adj[cycle[-1]]:
                    return length
    return math.inf


def two_colorable(g: Graph) -> bool:
    """DFS 2-coloring, independent of the library's BFS implementation."""
    adj = g.neighbors()
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def reference_graph6(n: int, edges) -> str:
    """Bit-string graph6 encoder written directly from the format description."""
    assert n <= 62
    present = {(min(u, v), max(u, v)) for u, v in edges}
    bits = ""
    for v in range(1, n):
        for u in range(v):
            bits += "1" if (u, v) in present else "0"
    while len(bits) % 6:
        bits += "0"
    chars = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        chars.append(chr(63 + int(bits[i : i + 6], 2)))
    return "".join(chars)
