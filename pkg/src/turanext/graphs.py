"""Graphs on at most 64 vertices stored as adjacency bitsets.

The vertex set is always {0, ..., n-1} and row ``adj[v]`` has bit u set iff
uv is an edge, so neighborhood intersection is a single ``&``.  Graphs are
immutable values: every operation returns a new ``Graph``.

Alongside the representation this module provides the generators used
throughout (Turan graphs, complete multipartite graphs, blowups), exact
chromatic numbers and proper-partition enumeration at small sizes, a
self-contained canonical form for isomorphism testing, and graph6 I/O.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import SearchCapError

MAX_VERTICES = 64

#: Canonical forms are opaque byte strings; equal iff the graphs are isomorphic.
CanonicalForm = bytes


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected graph; ``adj[v]`` is the neighbor bitset of vertex v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(rows) != n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError("adjacency bits set at positions >= n")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in _bits(rows[v]):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self.adj = rows

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for d in _bits(row):
                out.append((v, v + 1 + d))
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


class VertexPartition:
    """Disjoint nonempty vertex classes covering {0, ..., n-1}."""

    __slots__ = ("n", "classes")

    def __init__(self, n: int, classes: Iterable[Iterable[int]]):
        cls = tuple(frozenset(c) for c in classes)
        seen = 0
        for c in cls:
            if not c:
                raise ValueError("empty class in partition")
            mask = 0
            for v in c:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} outside range(0, {n})")
                mask |= 1 << v
            if mask & seen:
                raise ValueError("classes are not disjoint")
            seen |= mask
        if seen != (1 << n) - 1:
            raise ValueError("classes do not cover the vertex set")
        self.n = n
        self.classes = cls

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.classes), reverse=True))

    def is_proper_for(self, graph: Graph) -> bool:
        """True iff every class is an independent set of ``graph``."""
        for c in self.classes:
            mask = 0
            for v in c:
                mask |= 1 << v
            if any(graph.adj[v] & mask for v in c):
                return False
        return True

    def __repr__(self) -> str:
        parts = ", ".join(str(sorted(c)) for c in self.classes)
        return f"VertexPartition({parts})"


# ---------------------------------------------------------------------------
# generators


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with exactly the given undirected edges."""
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(v, v + 1) for v in range(n - 1)])


def _blocks_graph(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph with parts laid out as contiguous blocks."""
    sizes = [s for s in sizes if s > 0]
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise ValueError(f"total vertex count {n} exceeds {MAX_VERTICES}")
    rows = []
    start = 0
    full = (1 << n) - 1
    for s in sizes:
        block = ((1 << s) - 1) << start
        rows.extend([full ^ block] * s)
        start += s
    return Graph(n, rows)


def complete_multipartite(parts: Iterable[int]) -> Graph:
    """Complete multipartite graph with the given part sizes (all >= 1)."""
    sizes = tuple(parts)
    if any(s < 1 for s in sizes):
        raise ValueError("every part must have size >= 1")
    return _blocks_graph(sizes)


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes differing by <= 1.

    Larger parts come first and occupy contiguous vertex blocks.
    """
    from .closedform import turan_part_sizes

    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
    return _blocks_graph(turan_part_sizes(n, r))


def anchored_turan_graph(r: int, a: int, n: int) -> Graph:
    """Complete r-partite graph: one part of size n-a plus a balanced rest.

    The first part {0, ..., n-a-1} holds the distinguished vertex 0; the
    remaining a vertices are split into r-1 parts as evenly as possible.
    """
    from .closedform import turan_part_sizes

    if r < 2:
        raise ValueError("need r >= 2")
    if not 0 <= a <= n - 1:
        raise ValueError("need 0 <= a <= n - 1")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
    return _blocks_graph([n - a, *turan_part_sizes(a, r - 1)])


def blowup(graph: Graph, s: int) -> Graph:
    """Replace every vertex by an independent set of size s, edges by complete joins."""
    if s < 1:
        raise ValueError("blowup factor must be >= 1")
    n = graph.n * s
    if n > MAX_VERTICES:
        raise ValueError(f"blowup has {n} vertices, exceeding {MAX_VERTICES}")
    rows = []
    for v in range(graph.n):
        row = 0
        for u in _bits(graph.adj[v]):
            row |= ((1 << s) - 1) << (u * s)
        rows.extend([row] * s)
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# surgery


def subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled in the order supplied."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    if len(index) != len(verts):
        raise ValueError("duplicate vertices")
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in _bits(graph.adj[v]):
            j = index.get(u)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(verts), rows)


def relabel(graph: Graph, perm: Iterable[int]) -> Graph:
    """Relabeled copy where old vertex v becomes ``perm[v]``."""
    p = list(perm)
    if sorted(p) != list(range(graph.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    rows = [0] * graph.n
    for v in range(graph.n):
        row = 0
        for u in _bits(graph.adj[v]):
            row |= 1 << p[u]
        rows[p[v]] = row
    return Graph(graph.n, rows)


def add_edge(graph: Graph, u: int, v: int) -> Graph:
    """Copy of ``graph`` with edge uv added (idempotent)."""
    if u == v:
        raise ValueError("loop edge")
    rows = list(graph.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(graph.n, rows)


def strip_isolated(graph: Graph) -> Graph:
    """Drop degree-0 vertices, keeping the relative order of the rest."""
    keep = [v for v in range(graph.n) if graph.adj[v]]
    return subgraph(graph, keep)


# ---------------------------------------------------------------------------
# coloring

_CHROMATIC_CAP = 20
_PARTITION_CAP = 16


def _greedy_coloring_bound(graph: Graph, order: list[int]) -> int:
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in _bits(graph.adj[v]) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return 1 + max(colors.values(), default=-1)


def _greedy_clique_bound(graph: Graph, order: list[int]) -> int:
    mask = 0
    size = 0
    for v in order:
        if mask & ~graph.adj[v]:
            continue
        mask |= 1 << v
        size += 1
    return size


def _colorable(graph: Graph, k: int, order: list[int]) -> bool:
    """Backtracking k-colorability along ``order`` with new-color symmetry breaking."""
    n = graph.n
    color_of = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = 0
        for u in _bits(graph.adj[v]):
            if color_of[u] >= 0:
                forbidden |= 1 << color_of[u]
        limit = min(used + 1, k)
        for c in range(limit):
            if (forbidden >> c) & 1:
                continue
            color_of[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            color_of[v] = -1
        return False

    return place(0, 0)


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number (branch and bound, cap at 20 vertices)."""
    if graph.n > _CHROMATIC_CAP:
        raise SearchCapError(
            f"chromatic number is exact only up to {_CHROMATIC_CAP} vertices"
        )
    if graph.n == 0:
        return 0
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    low = _greedy_clique_bound(graph, order)
    high = _greedy_coloring_bound(graph, order)
    for k in range(max(low, 1), high):
        if _colorable(graph, k, order):
            return k
    return high


def proper_partitions(graph: Graph, k: int) -> Iterator[VertexPartition]:
    """All unordered partitions of V into exactly k nonempty independent classes.

    Each unordered partition is produced exactly once (classes are grown in
    order of their smallest vertex).  If k < chi(graph) the stream is empty.
    """
    if graph.n > _PARTITION_CAP:
        raise SearchCapError(
            f"partition enumeration is exact only up to {_PARTITION_CAP} vertices"
        )
    n = graph.n
    if k <= 0 or k > n:
        return
    adj = graph.adj
    masks: list[int] = []

    def grow(v: int) -> Iterator[VertexPartition]:
        if len(masks) + (n - v) < k:
            return
        if v == n:
            if len(masks) == k:
                yield VertexPartition(n, [list(_bits(m)) for m in masks])
            return
        bit = 1 << v
        for i, m in enumerate(masks):
            if not (adj[v] & m):
                masks[i] = m | bit
                yield from grow(v + 1)
                masks[i] = m
        if len(masks) < k:
            masks.append(bit)
            yield from grow(v + 1)
            masks.pop()

    yield from grow(0)


# ---------------------------------------------------------------------------
# canonical forms

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement; cells split by neighbor counts, ordered invariantly."""
    while True:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in _bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups, reverse=True):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _is_homogeneous(adj: tuple[int, ...], cells: list[int]) -> bool:
    """True when adjacency depends only on cell membership (all-or-nothing)."""
    sizes = [c.bit_count() for c in cells]
    for i, ci in enumerate(cells):
        inner = sum((adj[v] & ci).bit_count() for v in _bits(ci))
        if inner not in (0, sizes[i] * (sizes[i] - 1)):
            return False
        for j in range(i + 1, len(cells)):
            cj = cells[j]
            cross = sum((adj[v] & cj).bit_count() for v in _bits(ci))
            if cross not in (0, sizes[i] * sizes[j]):
                return False
    return True


def _leaf_bytes(adj: tuple[int, ...], labeling: list[int]) -> bytes:
    """Upper-triangle bits of the relabeled adjacency matrix, packed MSB-first."""
    n = len(labeling)
    buf = bytearray((n * (n - 1) // 2 + 7) // 8)
    pos = 0
    for j in range(1, n):
        row_j = adj[labeling[j]]
        for i in range(j):
            if (row_j >> labeling[i]) & 1:
                buf[pos >> 3] |= 0x80 >> (pos & 7)
            pos += 1
    return bytes(buf)


def _canonical_search(adj: tuple[int, ...], n: int) -> tuple[bytes, list[int]]:
    best: list[tuple[bytes, list[int]] | None] = [None]

    def emit(labeling: list[int]) -> None:
        cand = _leaf_bytes(adj, labeling)
        if best[0] is None or cand < best[0][0]:
            best[0] = (cand, labeling)

    def descend(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                target = idx
                break
        if target < 0:
            emit([c.bit_length() - 1 for c in cells])
            return
        if _is_homogeneous(adj, cells):
            labeling: list[int] = []
            for cell in cells:
                labeling.extend(_bits(cell))
            emit(labeling)
            return
        cell = cells[target]
        for v in _bits(cell):
            branched = (
                cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1 :]
            )
            descend(branched)

    descend([(1 << n) - 1])
    assert best[0] is not None
    return best[0]


def canonical_form(graph: Graph) -> CanonicalForm:
    """Byte string equal for two graphs iff they are isomorphic."""
    if graph.n == 0:
        return b"\x00"
    form, _ = _canonical_search(graph.adj, graph.n)
    return bytes([graph.n]) + form


def canonical_graph(graph: Graph) -> Graph:
    """Canonically relabeled copy (equal for all members of an isomorphism class)."""
    if graph.n == 0:
        return graph
    _, labeling = _canonical_search(graph.adj, graph.n)
    perm = [0] * graph.n
    for position, v in enumerate(labeling):
        perm[v] = position
    return relabel(graph, perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test: cheap invariants first, canonical forms to finish."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# graph6 I/O (the published text format for undirected graphs)


def graph6_encode(graph: Graph) -> str:
    n = graph.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(
            chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0)
        )
    bits: list[int] = []
    for j in range(1, n):
        row_j = graph.adj[j]
        for i in range(j):
            bits.append((row_j >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return head + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("graph6 characters must be in the range chr(63)..chr(126)")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 vertex counts above 258047 are unsupported")
        if len(vals) < 4:
            raise ValueError("malformed graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 string encodes {n} vertices, above {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("truncated graph6 bit field")
    if len(body) > need:
        raise ValueError("trailing data after graph6 bit field")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (body[pos // 6] >> (5 - pos % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


def read_edge_list(text: str) -> Graph:
    """Parse the convenience edge-list format: first line n, then ``u v`` lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)
