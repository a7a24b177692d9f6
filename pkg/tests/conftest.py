from __future__ import annotations

import itertools
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from triorient.graph import Graph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, max_edges: int | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True,
                           max_size=max_edges if max_edges is not None else len(pairs))) \
        if pairs else []
    return Graph.from_edges(n, chosen)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
