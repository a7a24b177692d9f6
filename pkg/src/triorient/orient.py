"""Counting orientations in which every triangle is transitive.

Direction convention: bit ``i`` of a direction mask refers to ``g.edges[i] = (u, v)``
with ``u < v``; 0 means ``u -> v`` and 1 means ``v -> u``.

For a triangle ``a < b < c`` with edge bits ``ab``, ``bc``, ``ac`` the two cyclic
patterns are ``(0, 0, 1)`` (a->b->c->a) and ``(1, 1, 0)``; every other pattern is
transitive. The counter propagates this rule (two set edges forming a directed
path force the closing edge) and multiplies in a factor 2 for every edge that no
longer sits in a triangle with another unset edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .graph import Graph, popcount, triangles_of

ORACLE_EDGE_LIMIT = 30


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    dir: int

    def __post_init__(self) -> None:
        if self.dir >> self.graph.m:
            raise ValueError("direction mask has bits beyond the edge count")

    @classmethod
    def from_arcs(cls, graph: Graph, arcs) -> Orientation:
        d = 0
        seen = 0
        for tail, head in arcs:
            e = graph.edge_id(tail, head)
            seen |= 1 << e
            if tail > head:
                d |= 1 << e
        if seen != (1 << graph.m) - 1:
            raise ValueError("arcs do not orient every edge exactly once")
        return cls(graph, d)

    def arc(self, e: int) -> tuple[int, int]:
        u, v = self.graph.edges[e]
        return (v, u) if self.dir >> e & 1 else (u, v)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(e) for e in range(self.graph.m)]

    def bits(self) -> str:
        """Edge-state vector as a string, edge 0 first."""
        return "".join(str(self.dir >> e & 1) for e in range(self.graph.m))


@dataclass(frozen=True)
class PartialOrientation:
    graph: Graph
    set_mask: int = 0
    dir_mask: int = 0

    def __post_init__(self) -> None:
        if self.dir_mask & ~self.set_mask:
            raise ValueError("direction bits given for unset edges")
        if self.set_mask >> self.graph.m:
            raise ValueError("set mask has bits beyond the edge count")

    def state(self, e: int) -> int | None:
        if not self.set_mask >> e & 1:
            return None
        return self.dir_mask >> e & 1

    def assign(self, tail: int, head: int) -> PartialOrientation:
        """Copy with the edge {tail, head} oriented tail -> head."""
        e = self.graph.edge_id(tail, head)
        bit = 1 if tail > head else 0
        if self.set_mask >> e & 1 and (self.dir_mask >> e & 1) != bit:
            raise ValueError(f"edge {self.graph.edges[e]} already oriented the other way")
        return PartialOrientation(self.graph, self.set_mask | 1 << e, self.dir_mask | bit << e)

    def extend_with(self, o: Orientation) -> PartialOrientation:
        """Copy with every arc of ``o`` fixed; ``o.graph`` must share vertex labels."""
        p = self
        for tail, head in o.arcs():
            p = p.assign(tail, head)
        return p

    @property
    def is_complete(self) -> bool:
        return self.set_mask == (1 << self.graph.m) - 1

    def to_orientation(self) -> Orientation:
        if not self.is_complete:
            raise ValueError("partial orientation still has unset edges")
        return Orientation(self.graph, self.dir_mask)


@dataclass(frozen=True)
class _TriangleIndex:
    tris: tuple[tuple[int, int, int], ...]
    tri_masks: tuple[int, ...]
    incident: tuple[tuple[tuple[int, int, int], ...], ...]
    tri_edge_mask: int
    order: tuple[int, ...]


@lru_cache(maxsize=4096)
def _index(g: Graph) -> _TriangleIndex:
    eid = g.edge_index
    tris = []
    for a, b, c in triangles_of(g):
        tris.append((eid[a, b], eid[b, c], eid[a, c]))
    incident: list[list[tuple[int, int, int]]] = [[] for _ in range(g.m)]
    tri_edge_mask = 0
    masks = []
    for t in tris:
        mask = 0
        for e in t:
            incident[e].append(t)
            mask |= 1 << e
        masks.append(mask)
        tri_edge_mask |= mask
    return _TriangleIndex(
        tuple(tris),
        tuple(masks),
        tuple(tuple(x) for x in incident),
        tri_edge_mask,
        _greedy_order(g.m, tris, incident, tri_edge_mask),
    )


def _greedy_order(m, tris, incident, tri_edge_mask) -> tuple[int, ...]:
    # repeatedly take the edge closing the most triangles with placed edges
    placed = 0
    order = []
    remaining = [e for e in range(m) if tri_edge_mask >> e & 1]
    while remaining:
        def score(e: int) -> tuple[int, int, int, int]:
            closes = touches = 0
            for t in incident[e]:
                k = sum(placed >> f & 1 for f in t if f != e)
                closes += k == 2
                touches += k == 1
            return (-closes, -touches, -len(incident[e]), e)

        best = min(remaining, key=score)
        remaining.remove(best)
        order.append(best)
        placed |= 1 << best
    return tuple(order)


def _propagate(idx: _TriangleIndex, set_mask: int, dir_mask: int, stack: list[int]):
    incident = idx.incident
    while stack:
        e = stack.pop()
        for ab, bc, ac in incident[e]:
            s_ab = set_mask >> ab & 1
            s_bc = set_mask >> bc & 1
            s_ac = set_mask >> ac & 1
            k = s_ab + s_bc + s_ac
            if k < 2:
                continue
            d_ab = dir_mask >> ab & 1
            d_bc = dir_mask >> bc & 1
            d_ac = dir_mask >> ac & 1
            if k == 3:
                if d_ab == d_bc and d_ac != d_ab:
                    return None
            elif not s_ac:
                if d_ab == d_bc:
                    set_mask |= 1 << ac
                    dir_mask |= d_ab << ac
                    stack.append(ac)
            elif not s_bc:
                if d_ab != d_ac:
                    set_mask |= 1 << bc
                    dir_mask |= d_ac << bc
                    stack.append(bc)
            elif d_bc != d_ac:
                set_mask |= 1 << ab
                dir_mask |= d_ac << ab
                stack.append(ab)
    return set_mask, dir_mask


def _initial(idx: _TriangleIndex, p: PartialOrientation):
    return _propagate(idx, p.set_mask, p.dir_mask, [e for e in range(p.graph.m) if p.set_mask >> e & 1])


def propagate(p: PartialOrientation) -> PartialOrientation | None:
    """Close ``p`` under the triangle rule; ``None`` signals a contradiction."""
    res = _initial(_index(p.graph), p)
    if res is None:
        return None
    return PartialOrientation(p.graph, *res)


def is_cyclic_triangle_free(o: Orientation) -> bool:
    d = o.dir
    for ab, bc, ac in _index(o.graph).tris:
        x, y, z = d >> ab & 1, d >> bc & 1, d >> ac & 1
        if x == y and z != x:
            return False
    return True


def _count(idx: _TriangleIndex, set_mask: int, dir_mask: int) -> int:
    tri_masks = idx.tri_masks
    order = idx.order
    tri_edge_mask = idx.tri_edge_mask

    def rec(set_mask: int, dir_mask: int) -> int:
        unset = tri_edge_mask & ~set_mask
        active = 0
        for tm in tri_masks:
            x = tm & unset
            if x & (x - 1):
                active |= x
        if not active:
            return 1 << popcount(unset)
        for e in order:
            if active >> e & 1:
                break
        bit = 1 << e
        total = 0
        res = _propagate(idx, set_mask | bit, dir_mask, [e])
        if res is not None:
            total += rec(*res)
        res = _propagate(idx, set_mask | bit, dir_mask | bit, [e])
        if res is not None:
            total += rec(*res)
        return total

    return rec(set_mask, dir_mask)


def count_completions(p: PartialOrientation) -> int:
    """Number of cyclic-triangle-free orientations extending ``p``."""
    g = p.graph
    idx = _index(g)
    res = _initial(idx, p)
    if res is None:
        return 0
    set_mask, dir_mask = res
    free_edges = popcount(~idx.tri_edge_mask & ~set_mask & ((1 << g.m) - 1))
    return _count(idx, set_mask, dir_mask) << free_edges


def count_orientations(g: Graph) -> int:
    return count_completions(PartialOrientation(g))


def oracle_count(g: Graph) -> int:
    """Brute-force count over all 2^m direction masks (independent of the search)."""
    m = g.m
    if m > ORACLE_EDGE_LIMIT:
        raise OracleLimitError(
            f"oracle_count enumerates 2^m orientations and is limited to "
            f"m <= {ORACLE_EDGE_LIMIT} edges; this graph has {m}"
        )
    eid = g.edge_index
    patterns = []
    for a, b, c in triangles_of(g):
        patterns.append((eid[a, b], eid[b, c], eid[a, c]))
    total = 0
    chunk = 1 << 20
    for start in range(0, 1 << m, chunk):
        d = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        ok = np.ones(d.shape, dtype=bool)
        for ab, bc, ac in patterns:
            x = (d >> ab) & 1
            y = (d >> bc) & 1
            z = (d >> ac) & 1
            forward_cycle = (x == 0) & (y == 0) & (z == 1)
            backward_cycle = (x == 1) & (y == 1) & (z == 0)
            ok &= ~(forward_cycle | backward_cycle)
        total += int(np.count_nonzero(ok))
    return total


def iter_orientations(g: Graph, partial: PartialOrientation | None = None) -> Iterator[Orientation]:
    """Yield every cyclic-triangle-free orientation in lexicographic order of the
    edge-state vector (edge 0 most significant, 0 before 1)."""
    idx = _index(g)
    start = _initial(idx, partial or PartialOrientation(g))
    if start is None:
        return
    m = g.m

    def rec(e: int, set_mask: int, dir_mask: int) -> Iterator[Orientation]:
        while e < m and set_mask >> e & 1:
            e += 1
        if e == m:
            yield Orientation(g, dir_mask)
            return
        bit = 1 << e
        for d in (0, bit):
            res = _propagate(idx, set_mask | bit, dir_mask | d, [e])
            if res is not None:
                yield from rec(e + 1, *res)

    yield from rec(0, *start)


def enumerate_orientations(g: Graph, visitor: Callable[[Orientation], object] | None = None,
                           partial: PartialOrientation | None = None) -> int:
    visits = 0
    for o in iter_orientations(g, partial):
        if visitor is not None:
            visitor(o)
        visits += 1
    return visits
