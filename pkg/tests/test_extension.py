from __future__ import annotations

import itertools

import pytest
from conftest import graphs
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from triorient.extension import (
    ExtConfig,
    certify_edge_clique,
    certify_p5_square,
    certify_two_edges,
    certify_two_triangles,
    certify_vertex_clique,
    certify_vertex_k4_minus,
    compatible_count,
    ext,
    p5_square,
    transitive_ordering,
)
from triorient.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    edges_between,
    empty_graph,
    induced_subgraph,
    k4_minus,
    vertex_mask,
)
from triorient.orient import (
    Orientation,
    count_orientations,
    is_cyclic_triangle_free,
    iter_orientations,
    oracle_count,
)


def brute_ext(g: Graph, a: int, b: int) -> int:
    """Group every orientation of G[A u B] by its restriction to the inner edges."""
    h, _ = induced_subgraph(g, a | b)
    side = {k for k, v in enumerate(_members(a | b)) if a >> v & 1}
    inner = [i for i, (u, v) in enumerate(h.edges) if (u in side) == (v in side)]
    groups: dict[int, int] = {}
    for d in range(1 << h.m):
        if is_cyclic_triangle_free(Orientation(h, d)):
            key = sum((d >> i & 1) << k for k, i in enumerate(inner))
            groups[key] = groups.get(key, 0) + 1
    return max(groups.values())


def _members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def test_k4_minus_two_edges():
    g = k4_minus()  # A = {0, 1}, B = {2, 3}
    cfg = ExtConfig(g, vertex_mask([0, 1]), vertex_mask([2, 3]))
    res = ext(cfg)
    assert res.value == 5
    t = cfg.t_graph()
    assert compatible_count(cfg, Orientation.from_arcs(t, [(0, 1), (3, 2)])) == 5
    assert compatible_count(cfg, Orientation.from_arcs(t, [(0, 1), (2, 3)])) == 4


def test_no_cross_edges_gives_one():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert ext(ExtConfig(g, vertex_mask([0, 1]), vertex_mask([2, 3]))).value == 1


def test_vertex_against_clique():
    g = Graph.from_edges(6, [e for e in complete_graph(6).edges if e != (0, 5)])
    assert ext(ExtConfig(g, 1, vertex_mask(range(1, 6)))).value == 5


def test_bipartite_cross_edges_are_free():
    g = complete_bipartite(3, 3)
    assert ext(ExtConfig(g, vertex_mask([0, 1, 2]), vertex_mask([3, 4, 5]))).value == 2 ** 9


def test_config_validation():
    g = complete_graph(4)
    for a, b in [(0, 1), (0b11, 0b10), (0b1, 0b10000)]:
        with pytest.raises(ValueError):
            ExtConfig(g, a, b)


def test_compatible_count_rejects_bad_input():
    g = complete_graph(4)
    cfg = ExtConfig(g, vertex_mask([0, 1, 2]), vertex_mask([3]))
    with pytest.raises(ValueError):
        compatible_count(cfg, Orientation(complete_graph(4), 0))
    cyclic = Orientation.from_arcs(cfg.t_graph(), [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        compatible_count(cfg, cyclic)


def test_size_guard():
    g = complete_graph(9)
    with pytest.raises(ValueError, match="limit"):
        ext(ExtConfig(g, vertex_mask(range(4)), vertex_mask(range(4, 9))))


@st.composite
def configs(draw, max_n: int = 6):
    g = draw(graphs(min_n=2, max_n=max_n))
    side = draw(st.lists(st.sampled_from([0, 1, 2]), min_size=g.n, max_size=g.n))
    a = vertex_mask(v for v in range(g.n) if side[v] == 1)
    b = vertex_mask(v for v in range(g.n) if side[v] == 2)
    assume(a and b)
    return g, a, b


@settings(max_examples=120)
@given(configs())
def test_ext_matches_brute_force(cfg):
    g, a, b = cfg
    assert ext(ExtConfig(g, a, b)).value == brute_ext(g, a, b)


@settings(max_examples=120)
@given(configs(max_n=7))
def test_ext_bounds_and_swap(cfg):
    g, a, b = cfg
    value = ext(ExtConfig(g, a, b)).value
    assert 1 <= value <= 2 ** len(edges_between(g, a, b))
    assert ext(ExtConfig(g, b, a)).value == value


@settings(max_examples=80)
@given(configs(max_n=6), st.integers(1, 3), st.data())
def test_ext_is_local(cfg, extra, data):
    g, a, b = cfg
    n = g.n + extra
    pairs = [p for p in itertools.combinations(range(n), 2) if p[1] >= g.n]
    added = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    bigger = Graph.from_edges(n, list(g.edges) + added)
    assert ext(ExtConfig(bigger, a, b)).value == ext(ExtConfig(g, a, b)).value


def test_witness_is_optimal_and_smallest():
    g = k4_minus()
    cfg = ExtConfig(g, vertex_mask([0, 1]), vertex_mask([2, 3]))
    res = ext(cfg)
    assert compatible_count(cfg, res.witness) == res.value
    assert is_cyclic_triangle_free(res.witness)
    first = next(o for o in iter_orientations(cfg.t_graph())
                 if compatible_count(cfg, o) == res.value)
    assert first == res.witness


def test_transitive_ordering():
    g = complete_graph(4)
    o = Orientation.from_arcs(g, [(2, 0), (2, 1), (2, 3), (0, 1), (3, 0), (3, 1)])
    assert transitive_ordering(o) == [2, 3, 0, 1]
    bad = Orientation.from_arcs(complete_graph(3), [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        transitive_ordering(bad)
    with pytest.raises(ValueError):
        transitive_ordering(Orientation(empty_graph(3), 0))


def test_p5_square_orientation_counts():
    g = p5_square()
    assert count_orientations(g) == oracle_count(g) == 54
    seen = []
    cert = certify_p5_square(sink=seen.append)
    assert cert.passed and cert.configurations == 8 and cert.max_attained == 8
    # the per-chord counts partition every orientation of the graph
    assert sum(r.attained for r in seen) == 54


@pytest.mark.parametrize("certify,expected", [
    (certify_two_edges, 5),
    (certify_vertex_k4_minus, 5),
    (lambda: certify_vertex_clique(max_r=4), 5),
    (lambda: certify_edge_clique(rs=(3,)), 10),  # K5: 5!/(2! 3!)
])
def test_small_certificates(certify, expected):
    cert = certify()
    assert cert.passed and not cert.failures
    assert cert.max_attained == expected


def test_two_triangles_certificate_records():
    seen = []
    cert = certify_two_triangles(sink=seen.append)
    assert cert.passed and cert.max_attained == 15
    assert len(seen) == cert.configurations
    assert all(r.verdict == "PASS" for r in seen)
