"""Small undirected graphs on at most 64 vertices with bitset adjacency.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is
in the set). Edges are kept in lexicographic order ``(u, v)`` with ``u < v``
and every orientation bitmap in the package indexes into that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_VERTICES = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the vertex range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in vertices_of(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            for v in vertices_of(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={emit_graph6(self)!r})"


# -- constructors ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive vertex blocks as parts."""
    if any(p <= 0 for p in part_sizes):
        raise ValueError("part sizes must be positive")
    n = sum(part_sizes)
    if n > MAX_VERTICES:
        raise ValueError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    full = (1 << n) - 1
    adj = []
    start = 0
    for p in part_sizes:
        block = ((1 << p) - 1) << start
        adj.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(adj))


def complete_graph(r: int) -> Graph:
    return complete_multipartite([1] * r)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def k4_minus() -> Graph:
    """K4 minus the edge {1, 3}: A = {0, 1}, B = {2, 3} gives three cross edges."""
    return Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(nb << shift for nb in h.adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex range")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Spanning subgraph keeping only the listed edges (vertex labels unchanged)."""
    return Graph.from_edges(g.n, [g.edges[i] for i in edge_ids])


# -- queries --------------------------------------------------------------


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by mask ``s``; returns it with ``vmap[new] = old``."""
    if s & ~g.vertex_set:
        raise ValueError("vertex set exceeds the graph's vertex range")
    vmap = tuple(vertices_of(s))
    pos = {old: new for new, old in enumerate(vmap)}
    adj = []
    for old in vmap:
        adj.append(vertex_mask(pos[u] for u in vertices_of(g.adj[old] & s)))
    return Graph(len(vmap), tuple(adj)), vmap


def triangles_of(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a, b in g.edges:
        for c in vertices_of((g.adj[a] & g.adj[b]) >> (b + 1)):
            out.append((a, b, b + 1 + c))
    return out


def clique_number(g: Graph) -> int:
    adj = g.adj
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & adj[v])
            cand ^= low

    expand(0, g.vertex_set)
    return best


def has_clique(g: Graph, k: int) -> bool:
    return clique_number(g) >= k


def is_clique(g: Graph, s: int) -> bool:
    return all((g.adj[v] & s) == s & ~(1 << v) for v in vertices_of(s))


def edges_between(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """Indices of edges with one endpoint in ``a`` and the other in ``b``."""
    if a & b:
        raise ValueError("vertex sets overlap")
    out = []
    for i, (u, v) in enumerate(g.edges):
        if (a >> u & 1 and b >> v & 1) or (b >> u & 1 and a >> v & 1):
            out.append(i)
    return tuple(out)


def edges_within(g: Graph, s: int) -> tuple[int, ...]:
    return tuple(i for i, (u, v) in enumerate(g.edges) if s >> u & 1 and s >> v & 1)


def common_neighbors(g: Graph, x: int, y: int, within: int) -> int:
    if x == y:
        raise ValueError("common_neighbors needs two distinct vertices")
    return popcount(g.adj[x] & g.adj[y] & within)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in vertices_of(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_triangle_free(g: Graph) -> bool:
    return not any((g.adj[u] & g.adj[v]) for u, v in g.edges)


# -- graph6 ---------------------------------------------------------------

_GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6TrailingDataError(Graph6Error):
    pass


class Graph6BodyError(Graph6Error):
    pass


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    if text.endswith(b"\r\n"):
        text = text[:-2]
    elif text.endswith(b"\n"):
        text = text[:-1]
    pos = len(_GRAPH6_HEADER) if text.startswith(_GRAPH6_HEADER.encode()) else 0
    if pos >= len(text):
        raise Graph6HeaderError("missing size byte", pos)

    first = text[pos]
    if not 63 <= first <= 126:
        raise Graph6HeaderError(f"invalid size byte {first!r}", pos)
    if first < 126:
        n = first - 63
        pos += 1
    else:
        if pos + 1 < len(text) and text[pos + 1] == 126:
            raise Graph6HeaderError("8-byte size header exceeds the vertex cap", pos)
        if pos + 4 > len(text):
            raise Graph6TruncatedError("extended size header cut short", len(text))
        n = 0
        for k in range(1, 4):
            c = text[pos + k]
            if not 63 <= c <= 126:
                raise Graph6HeaderError(f"invalid size byte {c!r}", pos + k)
            n = (n << 6) | (c - 63)
        if n < 63:
            raise Graph6HeaderError(f"extended header used for n={n}", pos)
        pos += 4
    if n > MAX_VERTICES:
        raise Graph6HeaderError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap", pos - 1)

    need = _body_length(n)
    body = text[pos:pos + need]
    if len(body) < need:
        raise Graph6TruncatedError(f"expected {need} body bytes, got {len(body)}", len(text))
    for k, c in enumerate(body):
        if not 63 <= c <= 126:
            raise Graph6BodyError(f"invalid body byte {c!r}", pos + k)
    if len(text) > pos + need:
        raise Graph6TrailingDataError("unexpected data after graph body", pos + need)

    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    total = n * (n - 1) // 2
    pad = need * 6 - total
    if bits & ((1 << pad) - 1):
        raise Graph6BodyError("nonzero padding bits", pos + need - 1)
    bits >>= pad

    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
    need = _body_length(n)
    bits <<= need * 6 - n * (n - 1) // 2
    body = "".join(chr(((bits >> (6 * (need - 1 - k))) & 63) + 63) for k in range(need))
    return head + body
