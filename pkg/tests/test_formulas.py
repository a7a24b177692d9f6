from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triorient.formulas import (
    bipartite_max,
    corollary_bound,
    corollary_case_max,
    edge_kr_bound,
    factorial,
    k1ll_count,
    k1ll_term,
)
from triorient.graph import complete_multipartite
from triorient.orient import count_orientations, oracle_count


@pytest.mark.parametrize("ell,expected", [(1, 6), (2, 82), (3, 2754)])
def test_k1ll_small_values_match_oracle(ell, expected):
    g = complete_multipartite([1, ell, ell])
    assert k1ll_count(ell) == expected == oracle_count(g) == count_orientations(g)


def test_k1ll_four_matches_engine():
    assert k1ll_count(4) == count_orientations(complete_multipartite([1, 4, 4])) == 271618


def test_k1ll_four_matches_oracle():
    # 24 edges: 16M orientations, a few seconds in numpy
    assert oracle_count(complete_multipartite([1, 4, 4])) == k1ll_count(4)


def test_k1ll_terms_and_symmetry():
    for ell in range(1, 6):
        terms = [[k1ll_term(ell, i, j) for j in range(ell + 1)] for i in range(ell + 1)]
        assert sum(map(sum, terms)) == k1ll_count(ell)
        assert all(terms[i][j] == terms[j][i] for i in range(ell + 1) for j in range(ell + 1))
    assert k1ll_term(3, 0, 0) == 1 and k1ll_term(3, 3, 3) == 1


@pytest.mark.parametrize("ell", [0, -1, 21])
def test_k1ll_guard(ell):
    with pytest.raises(ValueError):
        k1ll_count(ell)


def test_bipartite_max():
    assert [bipartite_max(n) for n in (0, 1, 2, 3, 8, 9)] == [1, 1, 2, 4, 65536, 2 ** 20]
    with pytest.raises(ValueError):
        bipartite_max(-1)


@given(st.integers(2, 30))
def test_corollary_bound_closed_form(r):
    assert corollary_bound(r) == r * r - (r - 1) * (r - 2) // 2


def test_corollary_bound_equals_case_split():
    for r in range(2, 9):
        assert corollary_case_max(r) == corollary_bound(r)
    with pytest.raises(ValueError):
        corollary_bound(1)


@given(st.integers(0, 12), st.integers(0, 12), st.data())
def test_edge_kr_bound(du, dv, data):
    duv = data.draw(st.integers(0, min(du, dv)))
    assert edge_kr_bound(du, dv, duv) == (du + 1) * (dv + 1) - comb(duv + 1, 2)


def test_edge_kr_bound_validation():
    with pytest.raises(ValueError):
        edge_kr_bound(2, 3, 3)
    with pytest.raises(ValueError):
        edge_kr_bound(-1, 3, 0)
    assert edge_kr_bound(2, 2, 2) == 6  # K4: x, y plus two common neighbours


def test_factorial_guard():
    assert factorial(0) == 1 and factorial(7) == 5040
    with pytest.raises(ValueError):
        factorial(31)
    with pytest.raises(ValueError):
        factorial(-1)
