"""Extension counts between two disjoint vertex sets.

For disjoint ``A`` and ``B`` let ``T`` be the spanning graph of the edges inside
``A`` or inside ``B``. ``ext(A, B)`` is the largest number of orientations of the
cross edges that can be added to a fixed cyclic-triangle-free orientation of
``T`` without creating a cyclic triangle.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable

from .census import generate_all
from .formulas import corollary_bound, edge_kr_bound
from .graph import (
    Graph,
    clique_number,
    common_neighbors,
    edge_subgraph,
    edges_between,
    edges_within,
    emit_graph6,
    is_clique,
    popcount,
    vertices_of,
)
from .orient import (
    Orientation,
    PartialOrientation,
    count_completions,
    is_cyclic_triangle_free,
    iter_orientations,
)

EXT_EDGE_LIMIT = 30


@dataclass(frozen=True)
class ExtConfig:
    g: Graph
    a: int
    b: int

    def __post_init__(self) -> None:
        if not self.a or not self.b:
            raise ValueError("both vertex sets must be nonempty")
        if self.a & self.b:
            raise ValueError("vertex sets overlap")
        if (self.a | self.b) & ~self.g.vertex_set:
            raise ValueError("vertex sets exceed the graph's vertex range")

    @property
    def cross_edges(self) -> tuple[int, ...]:
        return edges_between(self.g, self.a, self.b)

    @property
    def inner_edges(self) -> tuple[int, ...]:
        return tuple(sorted(edges_within(self.g, self.a) + edges_within(self.g, self.b)))

    def t_graph(self) -> Graph:
        """G[A] together with G[B], on the full vertex range of ``g``."""
        return edge_subgraph(self.g, self.inner_edges)

    def work_graph(self) -> Graph:
        """G[A ∪ B] on the full vertex range of ``g``."""
        return edge_subgraph(self.g, sorted(self.inner_edges + self.cross_edges))

    def swapped(self) -> ExtConfig:
        return ExtConfig(self.g, self.b, self.a)


@dataclass(frozen=True)
class ExtResult:
    value: int
    witness: Orientation


class _Extender:
    """Counts compatible cross orientations for many orientations of ``T``."""

    def __init__(self, cfg: ExtConfig) -> None:
        self.t = cfg.t_graph()
        self.w = cfg.work_graph()
        wid = self.w.edge_index
        self.edge_map = [wid[e] for e in self.t.edges]

    def count(self, t_orient: Orientation) -> int:
        set_mask = dir_mask = 0
        for i, e in enumerate(self.edge_map):
            set_mask |= 1 << e
            dir_mask |= (t_orient.dir >> i & 1) << e
        return count_completions(PartialOrientation(self.w, set_mask, dir_mask))


def compatible_count(cfg: ExtConfig, t_orient: Orientation) -> int:
    """Orientations of the cross edges compatible with ``t_orient``."""
    if t_orient.graph != cfg.t_graph():
        raise ValueError("t_orient must orient exactly the edges of G[A] and G[B]")
    if not is_cyclic_triangle_free(t_orient):
        raise ValueError("t_orient contains a cyclic triangle")
    return _Extender(cfg).count(t_orient)


def ext(cfg: ExtConfig) -> ExtResult:
    """Maximum of ``compatible_count`` over cyclic-triangle-free orientations of T.

    Ties go to the lexicographically smallest orientation of T.
    """
    size = len(cfg.inner_edges) + len(cfg.cross_edges)
    if size > EXT_EDGE_LIMIT:
        raise ValueError(f"ext exhausts {size} edges; the limit is {EXT_EDGE_LIMIT}")
    ex = _Extender(cfg)
    best = -1
    witness = None
    for t_orient in iter_orientations(ex.t):
        c = ex.count(t_orient)
        if c > best:
            best, witness = c, t_orient
    return ExtResult(best, witness)


def transitive_ordering(o: Orientation, clique: int | None = None) -> list[int]:
    """The vertex order of a transitive tournament, sources first.

    ``clique`` selects the vertices (default: all of ``o.graph``); they must
    span a complete graph and every arc among them must go forward.
    """
    g = o.graph
    s = g.vertex_set if clique is None else clique
    if not is_clique(g, s):
        raise ValueError("vertex set is not a clique of the oriented graph")
    out_deg = {v: 0 for v in vertices_of(s)}
    for e, (u, v) in enumerate(g.edges):
        if s >> u & 1 and s >> v & 1:
            tail, _ = o.arc(e)
            out_deg[tail] += 1
    order = sorted(out_deg, key=lambda v: -out_deg[v])
    pos = {v: i for i, v in enumerate(order)}
    for e, (u, v) in enumerate(g.edges):
        if s >> u & 1 and s >> v & 1:
            tail, head = o.arc(e)
            if pos[tail] > pos[head]:
                raise ValueError("orientation contains a directed triangle")
    return order


# -- certification --------------------------------------------------------


@dataclass
class ConfigRecord:
    claim_id: str
    host_graph6: str
    A_mask: int
    B_mask: int
    attained: int
    bound: int
    verdict: str
    orientation: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


@dataclass
class Certificate:
    claim_id: str
    statement: str
    configurations: int
    max_attained: int
    bound_max: int
    passed: bool
    failures: list[ConfigRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAILED"
        return (f"{self.claim_id}: {self.configurations} configurations, "
                f"max attained {self.max_attained}, bound {self.bound_max}: {status}")

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "configurations": self.configurations,
            "max_attained": self.max_attained,
            "bound_max": self.bound_max,
            "verdict": "PASS" if self.passed else "FAILED",
            "failures": [asdict(f) for f in self.failures],
            "notes": self.notes,
        }


Sink = Callable[[ConfigRecord], None]


def _emit(records: list[ConfigRecord], sink: Sink | None) -> None:
    if sink is not None:
        for r in records:
            sink(r)


def _certify(claim_id, statement, records, sink, notes=()) -> Certificate:
    _emit(records, sink)
    failures = [r for r in records if r.verdict != "PASS"]
    return Certificate(
        claim_id,
        statement,
        len(records),
        max((r.attained for r in records), default=0),
        max((r.bound for r in records), default=0),
        not failures and bool(records),
        failures,
        list(notes),
    )


def _record(claim_id, host, a, b, res: ExtResult, bound, equality=False) -> ConfigRecord:
    ok = res.value == bound if equality else res.value <= bound
    return ConfigRecord(claim_id, emit_graph6(host), a, b, res.value, bound,
                        "PASS" if ok else "FAILED", res.witness.bits())


def _k_cliques(g: Graph, k: int) -> list[int]:
    return [m for m in (sum(1 << v for v in c) for c in combinations(range(g.n), k))
            if is_clique(g, m)]


def certify_vertex_clique(max_r: int = 6, sink: Sink | None = None) -> Certificate:
    records = []
    for r in range(1, max_r + 1):
        for h in generate_all(r + 1):
            for v in range(h.n):
                w = h.vertex_set & ~(1 << v)
                if not is_clique(h, w):
                    continue
                d = popcount(h.adj[v] & w)
                res = ext(ExtConfig(h, 1 << v, w))
                records.append(_record("vertex-clique", h, 1 << v, w, res, d + 1, equality=True))
    return _certify("vertex-clique", "ext(v, W) = d(v, W) + 1 for a clique W", records, sink)


def certify_edge_clique(rs=(3, 4, 5), sink: Sink | None = None) -> Certificate:
    records = []
    for r in rs:
        for h in generate_all(r + 2):
            for a in _k_cliques(h, r):
                b = h.vertex_set & ~a
                u, v = vertices_of(b)
                if not h.has_edge(u, v):
                    continue
                duv = common_neighbors(h, u, v, a)
                if duv == 0:
                    continue
                bound = edge_kr_bound(popcount(h.adj[u] & a), popcount(h.adj[v] & a), duv)
                records.append(_record("edge-clique", h, a, b, ext(ExtConfig(h, a, b)), bound))
    return _certify("edge-clique", "ext(A, {u,v}) <= (d(u)+1)(d(v)+1) - C(d(u,v)+1, 2)",
                    records, sink)


def certify_edge_clique_corollary(rs=(2, 3, 4, 5), sink: Sink | None = None) -> Certificate:
    records = []
    for r in rs:
        bound = corollary_bound(r)
        for h in generate_all(r + 2):
            if clique_number(h) > r:
                continue
            for a in _k_cliques(h, r):
                b = h.vertex_set & ~a
                u, v = vertices_of(b)
                if not h.has_edge(u, v):
                    continue
                records.append(_record("edge-clique-corollary", h, a, b,
                                       ext(ExtConfig(h, a, b)), bound))
    return _certify("edge-clique-corollary",
                    "ext(A, {x,y}) <= r^2 - C(r-1, 2) in a K_{r+1}-free graph", records, sink)


def _two_clique_partitions(h: Graph, k: int) -> list[tuple[int, int]]:
    out = []
    for a in _k_cliques(h, k):
        b = h.vertex_set & ~a
        if a & 1 and is_clique(h, b):
            out.append((a, b))
    return out


def certify_two_edges(sink: Sink | None = None) -> Certificate:
    records = []
    for h in generate_all(4):
        if clique_number(h) >= 4:
            continue
        for a, b in _two_clique_partitions(h, 2):
            records.append(_record("two-edges", h, a, b, ext(ExtConfig(h, a, b)), 5))
    return _certify("two-edges", "ext(A, B) <= 5 for disjoint edges in a K4-free graph",
                    records, sink)


def certify_vertex_k4_minus(sink: Sink | None = None) -> Certificate:
    records = []
    for h in generate_all(5):
        if clique_number(h) >= 4:
            continue
        for u in range(5):
            b = h.vertex_set & ~(1 << u)
            if len(edges_within(h, b)) != 5:
                continue
            records.append(_record("vertex-k4-minus", h, 1 << u, b,
                                   ext(ExtConfig(h, 1 << u, b)), 5))
    return _certify("vertex-k4-minus", "ext(u, B) <= 5 when B induces K4 minus an edge",
                    records, sink)


def p5_square() -> Graph:
    """Path a-b-c-d-e (vertices 0..4) plus the chords ac, bd, ce."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3), (2, 4)])


def certify_p5_square(sink: Sink | None = None) -> Certificate:
    g = p5_square()
    a, b, c, d, e = range(5)
    chords = [g.edge_id(a, c), g.edge_id(b, d), g.edge_id(c, e)]
    records = []
    for bits in range(8):
        p = PartialOrientation(g)
        arcs = []
        for k, (x, y) in enumerate([(a, c), (b, d), (c, e)]):
            arc = (y, x) if bits >> k & 1 else (x, y)
            p = p.assign(*arc)
            arcs.append(arc)
        flagged = (c, a) in arcs and (b, d) in arcs
        bound = 7 if flagged else 8
        count = count_completions(p)
        state = "".join(str(p.dir_mask >> i & 1) for i in chords)
        records.append(ConfigRecord("p5-square", emit_graph6(g), 0, 0, count, bound,
                                    "PASS" if count <= bound else "FAILED", state))
    return _certify("p5-square",
                    "at most 8 compatible path orientations, 7 when ac points to a and bd to d",
                    records, sink,
                    notes=["all 2^3 = 8 orientations of the chord set are checked"])


def certify_two_triangles(sink: Sink | None = None) -> Certificate:
    records = []
    for h in generate_all(6):
        if clique_number(h) >= 4:
            continue
        for a, b in _two_clique_partitions(h, 3):
            records.append(_record("two-triangles", h, a, b, ext(ExtConfig(h, a, b)), 15))
    return _certify("two-triangles",
                    "ext(A, B) <= 15 for disjoint triangles in a K4-free graph", records, sink)


def certify_section2(sink: Sink | None = None) -> list[Certificate]:
    """Run all seven extension certificates in a fixed order."""
    return [
        certify_vertex_clique(sink=sink),
        certify_edge_clique(sink=sink),
        certify_edge_clique_corollary(sink=sink),
        certify_two_edges(sink=sink),
        certify_vertex_k4_minus(sink=sink),
        certify_p5_square(sink=sink),
        certify_two_triangles(sink=sink),
    ]
