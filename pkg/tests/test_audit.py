from __future__ import annotations

import ast
import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

import triorient.audit as audit
import triorient.exact as exact
from triorient.audit import (
    exponent_dominance,
    format_exact,
    grandever5_in_domain,
    grandever5_value,
    lemma_claim_readings,
    parse_exact,
    run_audit,
    verify_lemma_claim,
)
from triorient.census import canonical_form
from triorient.exact import Poly, first_positive_tail, holds, log2_bound_holds, log2_upper, positive_from
from triorient.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    empty_graph,
)
from triorient.orient import oracle_count


@pytest.fixture(scope="module")
def report():
    return run_audit(200)


# -- exact layer -------------------------------------------------------------


@pytest.mark.parametrize("bad", [1.0, 0.5, True, "1", None])
def test_holds_rejects_non_exact_operands(bad):
    with pytest.raises(TypeError):
        holds(bad, "<", 2)
    with pytest.raises(TypeError):
        holds(2, "<", bad)


def test_holds_relations():
    assert holds(1, "<", 2) and holds(2, "<=", 2) and holds(Fraction(4, 2), "=", 2)
    assert holds(3, ">", Fraction(5, 2)) and holds(3, ">=", 3)
    assert not holds(2, "<", 2)
    with pytest.raises(ValueError):
        holds(1, "<<", 2)


@given(st.integers(1, 10 ** 6), st.integers(1, 120))
def test_log2_upper_is_tight(x, denom):
    b = log2_upper(x, denom)
    p = b.numerator * (denom // b.denominator)
    assert 2 ** p >= x ** denom
    assert 2 ** (p - 1) < x ** denom
    assert log2_bound_holds(x, b)
    assert not log2_bound_holds(x, b - Fraction(1, denom)) or x == 1


def test_stated_log_bounds():
    assert log2_bound_holds(15, Fraction(395, 100))
    assert log2_bound_holds(6, Fraction(26, 10))
    assert log2_bound_holds(3, Fraction(16, 10))
    assert not log2_bound_holds(3, Fraction(158, 100))
    with pytest.raises(ValueError):
        log2_upper(0)


@given(st.lists(st.integers(-50, 50), max_size=4), st.lists(st.integers(-50, 50), max_size=4),
       st.integers(-30, 30))
def test_poly_arithmetic(a, b, x):
    pa, pb = Poly(a or [0]), Poly(b or [0])
    ev = lambda cs: sum(c * x ** k for k, c in enumerate(cs))  # noqa: E731
    assert (pa * pb)(x) == ev(a) * ev(b)
    assert (pa + pb)(x) == ev(a) + ev(b)
    assert (pa - pb)(x) == ev(a) - ev(b)
    assert pa.derivative()(x) == sum(k * c * x ** (k - 1) for k, c in enumerate(a) if k)


def test_positive_tail():
    t = Poly.t()
    assert positive_from(t - 5, 6) and not positive_from(t - 5, 5)
    assert positive_from(t * t - 10 * t + 26, 0)  # minimum 1 at t = 5
    assert not positive_from(t * t - 10 * t + 24, 0)
    assert not positive_from(-t + 100, 0)
    assert first_positive_tail(t - 5, 0, 100) == 6
    assert first_positive_tail(-t, 0, 100) is None


@given(st.integers(-(1 << 300), 1 << 300), st.integers(1, 1 << 200))
def test_exact_format_round_trip(a, b):
    assert parse_exact(format_exact(a)) == a
    assert parse_exact(format_exact(Fraction(a, b))) == Fraction(a, b)


def test_exact_format_is_compact():
    assert format_exact(2 ** 500) == "2^500"
    assert format_exact(3 * 2 ** 400) == "3*2^400"
    assert format_exact(Fraction(-7, 2)) == "-7/2"
    with pytest.raises(ValueError):
        parse_exact("1e5")


# -- no floating point in verdicts ---------------------------------------------

SOURCES = [Path(audit.__file__), Path(exact.__file__)]


@pytest.mark.parametrize("path", SOURCES, ids=lambda p: p.name)
def test_no_float_constructs_in_verdict_code(path):
    tree = ast.parse(path.read_text())
    for node in ast.walk(tree):
        if isinstance(node, ast.Constant):
            assert not isinstance(node.value, (float, complex)), f"float literal line {node.lineno}"
        if isinstance(node, ast.Name):
            assert node.id not in ("float", "log", "log2", "sqrt"), f"{node.id} line {node.lineno}"
        if isinstance(node, ast.Attribute):
            assert node.attr not in ("log", "log2", "log10", "sqrt"), f"{node.attr} line {node.lineno}"
    imported = {a.name for n in ast.walk(tree) if isinstance(n, ast.ImportFrom) for a in n.names}
    assert not imported & {"log", "log2", "sqrt"}


def test_every_verdict_goes_through_the_exact_layer(monkeypatch):
    calls = []

    def spy(lhs, relation, rhs):
        for x in (lhs, rhs):
            assert type(x) in (int, Fraction), type(x)
        calls.append(relation)
        return exact.holds(lhs, relation, rhs)

    monkeypatch.setattr(audit, "holds", spy)
    rep = run_audit(30)
    calls.clear()
    verdicts = [r.verdict for r in rep.records]
    assert len(calls) == len(verdicts)
    calls.clear()
    rep = run_audit(30)
    assert calls  # certificates compare through the layer too


# -- instances -----------------------------------------------------------------


def _find(records, id_, **params):
    hits = [r for r in records if r.id == id_ and all(r.p.get(k) == v for k, v in params.items())]
    assert len(hits) == 1, (id_, params, len(hits))
    return hits[0]


def test_ver8_at_nine(report):
    r = _find(report.records, "ver8", n=9)
    assert (r.lhs, r.rhs, r.verdict) == (729000, 1048576, "PASS")


def test_grandever5_examples(report):
    r = _find(report.records, "grandever5", x=3, z=0)
    assert r.lhs == Fraction(14, 10) and r.verdict == "PASS"
    assert grandever5_value(1, 1) == Fraction(-18, 10)


def test_grandever5_domain_gating(report):
    assert not grandever5_in_domain(1, 1)
    assert not grandever5_in_domain(2, 1) and not grandever5_in_domain(0, 5)
    assert grandever5_in_domain(1, 2) and grandever5_in_domain(3, 0)
    gated = {(r.p["x"], r.p["z"]) for r in report.records if r.id == "grandever5"}
    assert (1, 1) not in gated and (0, 0) not in gated
    assert len(gated) == 198 * 201 + 2 * 199


def test_constant_checks(report):
    by_id = {}
    for r in report.records:
        by_id.setdefault(r.id, []).append(r)
    assert [r.lhs for r in by_id["ver10"]] == [996300, 271614]
    assert by_id["ver10/computed"][0].lhs == 271618
    assert by_id["ver12"][0].lhs == 82 ** 2 * 15 * 64 * 4
    assert [r.lhs for r in by_id["ver5"]] == [6 * 15 * 52 * 5040, 6 * 36 * 15 * 52 * 5040]


def test_stated_failures_are_exactly_the_known_defects(report):
    failed = {(r.id, tuple(sorted(r.p.items()))) for r in report.stated_failures}
    expected = {("grandever2", (("n", 9), ("r", 5)))}
    expected |= {("grandever8", (("y", y), ("z", 0))) for y in range(2, 99)}
    expected |= {("ver4", (("n", n), ("x", 0))) for n in (9, 10, 11)}
    assert failed == expected
    assert not report.passed


def test_failure_margins(report):
    r = _find(report.records, "grandever2", r=5, n=9)
    assert (r.lhs, r.rhs) == (1200000, 2 ** 20)
    for y in (2, 10, 50):
        r = _find(report.records, "grandever8", y=y, z=0)
        assert r.lhs == r.rhs  # equality, so the strict form fails
    assert _find(report.records, "ver4", n=9, x=0).lhs == 2 ** 20
    assert _find(report.records, "ver4", n=11, x=0).lhs == 6 * 2 ** 28


def test_supplementary_repairs_hold(report):
    sup = [r for r in report.records if r.scope == "supplementary"]
    bad = {r.id for r in sup if not r.holds}
    assert bad == {"grandever4/relaxed"}
    relaxed = {(r.p["n"], r.p["y"]) for r in sup if r.id == "grandever4/relaxed" and not r.holds}
    assert relaxed == {(n, 2) for n in range(11, 201, 2)}


def test_domain_views(report):
    lines = {(g.id, g.scope): g for g in report.summary()}
    assert lines[("grandever1", "n>=16")].verdict == "PASS"
    assert lines[("grandever1", "n>=9")].verdict == "PASS"
    assert lines[("grandever1", "n>=9")].instances == 192
    assert lines[("grandever2", "n>=r+8")].verdict == "PASS"
    assert lines[("grandever2", "n>=9")].failed == [{"r": 5, "n": 9}]


def test_report_is_deterministic():
    a = "\n".join(run_audit(40).json_lines())
    b = "\n".join(run_audit(40).json_lines())
    assert a == b
    first = json.loads(a.splitlines()[0])
    assert set(first) == {"id", "params", "lhs", "rhs", "relation", "verdict", "scope"}


def test_json_sides_round_trip(report):
    for r in report.records[::97]:
        obj = r.to_json()
        assert parse_exact(obj["lhs"]) == r.lhs and parse_exact(obj["rhs"]) == r.rhs


def test_small_max_n_rejected():
    with pytest.raises(ValueError):
        audit.audit_all(10)


# -- tail certificates -------------------------------------------------------------


def test_grandever1_certificate():
    c = exponent_dominance("grandever1")
    assert c.passed and c.crossover == 9
    assert c.log_bounds == {9: Fraction(317, 100)}
    assert c.parts[0].gap.c == (Fraction(-689, 100), Fraction(83, 100))


def test_grandever2_certificate():
    c = exponent_dominance("grandever2")
    assert c.passed
    assert [p.label for p in c.parts] == ["r=5", "r=6", "r=7"]
    for p in c.parts:
        assert p.gap.degree == 1 and p.gap.c[1] > 0


def test_grandever4_certificate_and_factor_note():
    c = exponent_dominance("grandever4")
    assert c.passed
    assert "false" in c.notes[0]
    assert 81 * 13 ** 8 > 8 * 16 ** 8


def test_other_certificates():
    assert exponent_dominance("grandever5").passed
    assert exponent_dominance("grandever6").passed
    c8 = exponent_dominance("grandever8")
    assert not c8.passed
    assert [p.passed for p in c8.parts] == [False, True]
    with pytest.raises(ValueError):
        exponent_dominance("grandever7")


def test_only_the_equality_case_lacks_a_tail_certificate(report):
    failing = {c.case for c in report.certificates if not c.passed}
    assert failing == {"grandever8"}


# -- seven-vertex lemma ----------------------------------------------------------


@pytest.fixture(scope="module")
def lemma():
    return verify_lemma_claim()


def test_lemma_claim(lemma):
    assert lemma.passed and lemma.classes == 1044
    counts = dict(lemma.qualifying)
    k = canonical_form(complete_multipartite([1, 3, 3])).graph6()
    assert counts[k] == 2754
    assert lemma.max_count < 4096
    assert not lemma.universal_violations
    assert set(lemma.universal) <= set(lemma.qualifying)


def test_lemma_counts_match_oracle(lemma):
    from triorient.graph import parse_graph6

    for g6, c in lemma.qualifying[::15]:
        assert oracle_count(parse_graph6(g6)) == c


@pytest.mark.parametrize("g,expected", [
    (complete_bipartite(4, 3), (False, False)),
    (disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), empty_graph(1)),
     (False, False)),
    (complete_multipartite([1, 3, 3]), (True, True)),
    (disjoint_union(complete_graph(4), empty_graph(3)), (False, False)),
])
def test_lemma_readings(g, expected):
    assert lemma_claim_readings(g) == expected


def test_existential_but_not_universal_example():
    # triangle 0-1-2 sees the matching 3-5, 4-6; triangle 0-3-4 leaves
    # {1, 2, 5, 6}, which carries only the edge 1-2
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (3, 5), (4, 6)])
    assert lemma_claim_readings(g) == (True, False)
