"""Exact subgraph-copy counting over the bitset graphs.

A *copy* of a pattern T in a host G is a subgraph of G isomorphic to T
(not necessarily induced).  We count labeled embeddings -- injective maps
preserving edges -- by backtracking over a degree-aware vertex order, then
divide by the pattern's automorphism count.  The division must be exact;
a nonzero remainder means the embedding count itself is wrong, so it is
promoted to an internal error rather than silently truncated.

All counts are Python ints and therefore exact at every size we accept.
"""

from __future__ import annotations

from .errors import InternalCheckError
from .graphs import Graph, _bits

PATTERN_CAP = 16


class Pattern:
    """A small pattern graph plus its lazily computed automorphism count."""

    __slots__ = ("graph", "_aut")

    def __init__(self, graph: Graph):
        if graph.n > PATTERN_CAP:
            raise ValueError(f"patterns are capped at {PATTERN_CAP} vertices")
        if graph.n == 0:
            raise ValueError("patterns must have at least one vertex")
        self.graph = graph
        self._aut: int | None = None

    @property
    def min_vertices(self) -> int:
        return self.graph.n

    @property
    def aut_count(self) -> int:
        if self._aut is None:
            self._aut = count_embeddings(self.graph, self.graph)
        return self._aut

    def __repr__(self) -> str:
        return f"Pattern({self.graph!r})"


def as_pattern(obj: Graph | Pattern) -> Pattern:
    return obj if isinstance(obj, Pattern) else Pattern(obj)


def _embedding_plan(t: Graph, first: int | None = None) -> list[int]:
    """Vertex order for backtracking: each new vertex sees many placed neighbors.

    Starts from ``first`` if given, else from a maximum-degree vertex; then
    greedily picks the vertex with the most already-placed neighbors (ties:
    higher degree, then lower index).  On connected patterns every vertex
    after the first has a placed neighbor, so candidate sets stay small.
    """
    n = t.n
    if first is None:
        first = max(range(n), key=lambda v: (t.degree(v), -v))
    order = [first]
    placed = 1 << first
    while len(order) < n:
        best = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if (placed >> v) & 1:
                continue
            key = ((t.adj[v] & placed).bit_count(), t.degree(v), -v)
            if key > best_key:
                best_key = key
                best = v
        order.append(best)
        placed |= 1 << best
    return order


def _count_from_plan(
    g: Graph, t: Graph, order: list[int], pinned: dict[int, int] | None = None
) -> int:
    """Count injective edge-preserving maps t -> g along ``order``.

    ``pinned`` forces pattern vertices to specific host vertices; pinned
    vertices must form a prefix of ``order``.
    """
    n = t.n
    pos = {v: i for i, v in enumerate(order)}
    back: list[list[int]] = []
    for i, v in enumerate(order):
        back.append([pos[u] for u in _bits(t.adj[v]) if pos[u] < i])

    gn = g.n
    gdeg = g.degrees()
    degmask = []
    for v in order:
        dv = t.degree(v)
        mask = 0
        for u in range(gn):
            if gdeg[u] >= dv:
                mask |= 1 << u
        degmask.append(mask)

    npin = len(pinned) if pinned else 0
    image = [0] * n
    used0 = 0
    if pinned:
        for i in range(npin):
            v = order[i]
            if v not in pinned:
                raise ValueError("pinned vertices must prefix the plan")
            host = pinned[v]
            if (used0 >> host) & 1:
                return 0
            if gdeg[host] < t.degree(v):
                return 0
            for j in back[i]:
                if not (g.adj[image[j]] >> host) & 1:
                    return 0
            image[i] = host
            used0 |= 1 << host

    gadj = g.adj

    def rec(i: int, used: int) -> int:
        cand = degmask[i] & ~used
        for j in back[i]:
            cand &= gadj[image[j]]
            if not cand:
                return 0
        if i == n - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
        return total

    if npin == n:
        return 1
    return rec(npin, used0)


def count_embeddings(g: Graph, t: Graph | Pattern) -> int:
    """Number of injective maps V(t) -> V(g) sending edges to edges."""
    t = as_pattern(t).graph
    if t.n > g.n:
        return 0
    return _count_from_plan(g, t, _embedding_plan(t))


def exists_embedding(g: Graph, t: Graph | Pattern) -> bool:
    t = as_pattern(t).graph
    if t.n > g.n:
        return False
    return _exists_from_plan(g, t, _embedding_plan(t))


def _exists_from_plan(
    g: Graph, t: Graph, order: list[int], pinned: dict[int, int] | None = None
) -> bool:
    n = t.n
    pos = {v: i for i, v in enumerate(order)}
    back: list[list[int]] = []
    for i, v in enumerate(order):
        back.append([pos[u] for u in _bits(t.adj[v]) if pos[u] < i])
    gdeg = g.degrees()
    degmask = []
    for v in order:
        dv = t.degree(v)
        mask = 0
        for u in range(g.n):
            if gdeg[u] >= dv:
                mask |= 1 << u
        degmask.append(mask)

    npin = len(pinned) if pinned else 0
    image = [0] * n
    used0 = 0
    if pinned:
        for i in range(npin):
            v = order[i]
            host = pinned[v]
            if (used0 >> host) & 1 or gdeg[host] < t.degree(v):
                return False
            for j in back[i]:
                if not (g.adj[image[j]] >> host) & 1:
                    return False
            image[i] = host
            used0 |= 1 << host
    gadj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        cand = degmask[i] & ~used
        for j in back[i]:
            cand &= gadj[image[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    return rec(npin, used0)


def count_copies(g: Graph, t: Graph | Pattern) -> int:
    """Number of subgraphs of g isomorphic to t (embeddings / automorphisms)."""
    pat = as_pattern(t)
    emb = count_embeddings(g, pat.graph)
    copies, rem = divmod(emb, pat.aut_count)
    if rem:
        raise InternalCheckError(
            f"embedding count {emb} not divisible by automorphism count {pat.aut_count}"
        )
    return copies


def automorphism_count(t: Graph) -> int:
    return as_pattern(t).aut_count


def embeddings_through_vertex(g: Graph, v: int, t: Graph | Pattern) -> int:
    """Embeddings of the pattern whose image contains host vertex v."""
    t = as_pattern(t).graph
    if t.n > g.n:
        return 0
    total = 0
    for root in range(t.n):
        order = _embedding_plan(t, first=root)
        total += _count_from_plan(g, t, order, pinned={root: v})
    return total


def exists_embedding_through_vertex(g: Graph, v: int, t: Graph | Pattern) -> bool:
    t = as_pattern(t).graph
    if t.n > g.n:
        return False
    for root in range(t.n):
        order = _embedding_plan(t, first=root)
        if _exists_from_plan(g, t, order, pinned={root: v}):
            return True
    return False


def _ordered_pattern_edges(t: Graph) -> list[tuple[int, int]]:
    out = []
    for x, y in t.edges():
        out.append((x, y))
        out.append((y, x))
    return out


def _plan_from_edge(t: Graph, x: int, y: int) -> list[int]:
    """Plan that places pattern vertices x then y first."""
    n = t.n
    order = [x, y]
    placed = (1 << x) | (1 << y)
    while len(order) < n:
        best = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if (placed >> v) & 1:
                continue
            key = ((t.adj[v] & placed).bit_count(), t.degree(v), -v)
            if key > best_key:
                best_key = key
                best = v
        order.append(best)
        placed |= 1 << best
    return order


def embeddings_through_edge(g: Graph, u: int, v: int, t: Graph | Pattern) -> int:
    """Embeddings whose image uses the host edge uv (in either orientation)."""
    t = as_pattern(t).graph
    if not g.has_edge(u, v):
        raise ValueError("uv is not an edge of the host")
    if t.n > g.n:
        return 0
    total = 0
    for x, y in _ordered_pattern_edges(t):
        order = _plan_from_edge(t, x, y)
        total += _count_from_plan(g, t, order, pinned={x: u, y: v})
    return total


def exists_embedding_through_edge(g: Graph, u: int, v: int, t: Graph | Pattern) -> bool:
    t = as_pattern(t).graph
    if t.n > g.n:
        return False
    for x, y in _ordered_pattern_edges(t):
        order = _plan_from_edge(t, x, y)
        if _exists_from_plan(g, t, order, pinned={x: u, y: v}):
            return True
    return False


# ---------------------------------------------------------------------------
# cliques (special-cased: the hot path of the whole package)


def count_cliques(g: Graph, m: int) -> int:
    """Number of m-vertex cliques in g (m = 1 counts vertices)."""
    if m < 1:
        raise ValueError("clique size must be >= 1")
    if m == 1:
        return g.n
    adj = g.adj
    full = (1 << g.n) - 1

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            if cand.bit_count() < need - 1:
                break
            total += rec(cand & adj[low.bit_length() - 1], need - 1)
        return total

    return rec(full, m)


def clique_masks(g: Graph, m: int) -> list[int]:
    """Vertex bitmasks of all m-cliques of g (ascending lowest member)."""
    if m < 1:
        raise ValueError("clique size must be >= 1")
    out: list[int] = []
    if m == 1:
        return [1 << v for v in range(g.n)]
    adj = g.adj

    def rec(cand: int, acc: int, need: int) -> None:
        if need == 0:
            out.append(acc)
            return
        while cand:
            low = cand & -cand
            cand ^= low
            if cand.bit_count() < need - 1:
                break
            v = low.bit_length() - 1
            rec(cand & adj[v], acc | low, need - 1)

    rec((1 << g.n) - 1, 0, m)
    return out


def clique_number(g: Graph) -> int:
    """Largest clique size (0 for the empty graph)."""
    if g.n == 0:
        return 0
    best = 1
    adj = g.adj

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            rec(cand & adj[low.bit_length() - 1], size + 1)

    rec((1 << g.n) - 1, 0)
    return best


# ---------------------------------------------------------------------------
# derived counts


def pattern_degree(g: Graph, v: int, t: Graph | Pattern) -> int:
    """Number of copies of t in g whose vertex set contains v."""
    pat = as_pattern(t)
    emb = embeddings_through_vertex(g, v, pat.graph)
    deg, rem = divmod(emb, pat.aut_count)
    if rem:
        raise InternalCheckError(
            f"through-vertex embedding count {emb} not divisible by {pat.aut_count}"
        )
    return deg


def min_pattern_degree(g: Graph, t: Graph | Pattern) -> int:
    """Minimum over vertices of the copy count through that vertex."""
    if g.n == 0:
        raise ValueError("minimum pattern degree needs at least one vertex")
    pat = as_pattern(t)
    return min(pattern_degree(g, v, pat) for v in range(g.n))


def contains_subgraph(g: Graph, t: Graph | Pattern) -> bool:
    return exists_embedding(g, t)


def contains_any(g: Graph, patterns: list[Graph | Pattern]) -> bool:
    return any(exists_embedding(g, t) for t in patterns)
