"""Slow, obviously-correct reference implementations used as test oracles.

Everything here works by direct enumeration (permutations, vertex subsets,
edge-set bitmasks) with no shared logic with the package's counting or
search kernels beyond the Graph container itself.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from turanext.graphs import Graph, graph_from_edges


def embeddings_brute(host: Graph, pattern: Graph) -> int:
    """Count injective maps preserving pattern edges, by trying them all."""
    if pattern.n > host.n:
        return 0
    pedges = pattern.edges()
    count = 0
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pedges):
            count += 1
    return count


def copies_brute(host: Graph, pattern: Graph) -> int:
    aut = embeddings_brute(pattern, pattern)
    emb = embeddings_brute(host, pattern)
    assert emb % aut == 0
    return emb // aut


def cliques_brute(g: Graph, m: int) -> int:
    return sum(
        1
        for verts in combinations(range(g.n), m)
        if all(g.has_edge(u, v) for u, v in combinations(verts, 2))
    )


def clique_number_brute(g: Graph) -> int:
    for m in range(g.n, 1, -1):
        if cliques_brute(g, m):
            return m
    return 1 if g.n else 0


def chromatic_brute(g: Graph) -> int:
    if g.n == 0:
        return 0

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def go(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(k):
                if all(not g.has_edge(u, v) or colors[u] != c for u in range(v)):
                    colors[v] = c
                    if go(v + 1):
                        return True
            colors[v] = -1
            return False

        return go(0)

    for k in range(1, g.n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable")


def max_edges_avoiding_brute(n: int, cores: list[Graph]) -> int:
    """Max edges over all labeled n-vertex graphs with no core subgraph (tiny n)."""
    slots = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
        if len(edges) <= best:
            continue
        g = graph_from_edges(n, edges)
        if not any(embeddings_brute(g, core) for core in cores):
            best = len(edges)
    return best


def all_graphs(n: int):
    """Yield every labeled graph on n vertices (use only for n <= 5)."""
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield graph_from_edges(
            n, [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
        )


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return graph_from_edges(n, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
