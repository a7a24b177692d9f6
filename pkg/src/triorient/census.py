"""Isomorph-free generation of small graphs and the search for count maximizers."""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Callable, Iterable, Iterator, NamedTuple

from .formulas import bipartite_max
from .graph import Graph, complete_bipartite, complete_graph, emit_graph6, parse_graph6
from .orient import count_orientations

CANONICAL_LIMIT = 10
GENERATE_LIMIT = 8

_FIELD = 11  # bits per packed column; columns never exceed CANONICAL_LIMIT - 1 bits
_FIELD_MASK = (1 << _FIELD) - 1


class CanonicalForm(NamedTuple):
    """Upper-triangle adjacency bitstring, column order x(0,1), x(0,2), x(1,2), ...

    ``bits`` holds the string with x(0,1) as the most significant bit, so tuple
    order is lexicographic order of the bitstring for equal ``n``.
    """

    n: int
    bits: int

    def graph(self) -> Graph:
        n = self.n
        adj = [0] * n
        k = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k -= 1
        return Graph(n, tuple(adj))

    def graph6(self) -> str:
        return emit_graph6(self.graph())

    def bitstring(self) -> str:
        length = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{length}b") if length else ""


def _bits_under(g: Graph, perm: tuple[int, ...]) -> int:
    """Bitstring of the relabelled graph whose vertex ``k`` is ``perm[k]``."""
    bits = 0
    adj = g.adj
    for j in range(1, g.n):
        aj = adj[perm[j]]
        for i in range(j):
            bits = (bits << 1) | (aj >> perm[i] & 1)
    return bits


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """A vertex sequence ``perm`` whose relabelling gives the minimum bitstring.

    Builds the sequence position by position. Placing a vertex at position ``k``
    fixes column ``k`` of the bitstring, so only vertices producing the smallest
    column survive. Partial sequences that leave the same remaining vertices with
    the same adjacency to every placed position have identical futures and are
    merged.
    """
    n = g.n
    if n > CANONICAL_LIMIT:
        raise ValueError(f"canonical_form is limited to n <= {CANONICAL_LIMIT}")
    spread = []
    for w in range(n):
        s = 0
        for x in range(n):
            if g.adj[w] >> x & 1:
                s |= 1 << (_FIELD * x)
        spread.append(s)
    field_masks = [_FIELD_MASK << (_FIELD * x) for x in range(n)]

    states: dict[tuple[int, int], tuple[int, ...]] = {((1 << n) - 1, 0): ()}
    for _ in range(n):
        best = -1
        nxt: dict[tuple[int, int], tuple[int, ...]] = {}
        for (rem, cols), perm in states.items():
            r = rem
            while r:
                low = r & -r
                r ^= low
                w = low.bit_length() - 1
                col = (cols >> (_FIELD * w)) & _FIELD_MASK
                if best >= 0 and col > best:
                    continue
                if col != best:
                    best = col
                    nxt = {}
                nrem = rem ^ low
                keep = 0
                rr = nrem
                while rr:
                    lo = rr & -rr
                    rr ^= lo
                    keep |= field_masks[lo.bit_length() - 1]
                key = (nrem, ((cols << 1) | spread[w]) & keep)
                if key not in nxt:
                    nxt[key] = perm + (w,)
        states = nxt
    return next(iter(states.values())) if n else ()


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, _bits_under(g, canonical_labeling(g)))


def automorphism_count(g: Graph) -> int:
    """Number of vertex permutations fixing the canonical form (brute force)."""
    if g.n > 8:
        raise ValueError("automorphism_count is brute force and limited to n <= 8")
    target = canonical_form(g).bits
    return sum(1 for p in itertools.permutations(range(g.n)) if _bits_under(g, p) == target)


def _augment(parent: Graph, nbhd: int) -> Graph:
    n = parent.n
    adj = [a | ((nbhd >> v & 1) << n) for v, a in enumerate(parent.adj)]
    adj.append(nbhd)
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (CanonicalForm(1, 0),)
    seen: set[CanonicalForm] = set()
    for form in _classes(n - 1):
        parent = form.graph()
        for nbhd in range(1 << (n - 1)):
            seen.add(canonical_form(_augment(parent, nbhd)))
    return tuple(sorted(seen))


def class_forms(n: int) -> tuple[CanonicalForm, ...]:
    if not 1 <= n <= GENERATE_LIMIT:
        raise ValueError(f"generate_all supports 1 <= n <= {GENERATE_LIMIT}")
    return _classes(n)


def generate_all(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class, in
    canonical-form order."""
    for form in class_forms(n):
        yield form.graph()


def filtered_classes(n: int, predicate: Callable[[Graph], bool]) -> Iterator[Graph]:
    return (g for g in generate_all(n) if predicate(g))


def labeled_dedupe_forms(n: int) -> set[CanonicalForm]:
    """Canonical forms of all 2^C(n,2) labelled graphs; independent of augmentation."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        forms.add(canonical_form(g))
    return forms


def write_graph6_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> int:
    lines = [emit_graph6(g) for g in graphs]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="ascii")
    return len(lines)


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    text = Path(path).read_text(encoding="ascii")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# -- maximizers -----------------------------------------------------------


@dataclass
class MaximizerReport:
    n: int
    max_count: int
    maximizers: list[CanonicalForm]
    classes: int
    counted: int
    skipped: int
    pruned: bool
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self, with_timings: bool = False) -> dict:
        out = {
            "n": self.n,
            "max_count": self.max_count,
            "maximizers": [f.graph6() for f in self.maximizers],
            "classes": self.classes,
            "counted": self.counted,
            "skipped": self.skipped,
            "pruned": self.pruned,
        }
        if with_timings:
            out["timings"] = dict(sorted(self.timings.items()))
        return out


def _timed_count(g: Graph) -> tuple[int, float]:
    t0 = time.perf_counter()
    c = count_orientations(g)
    return c, time.perf_counter() - t0


def find_maximizers(n: int, prune: bool = False, workers: int = 1) -> MaximizerReport:
    """Count every class on ``n`` vertices and return the maximum and its attainers.

    With ``prune`` a class with ``2^m`` below the best count seen so far is
    skipped, which is sound since no graph exceeds ``2^m`` orientations. The
    running best is seeded with the balanced complete bipartite graph and the
    complete graph.
    """
    forms = class_forms(n)
    timings: dict[str, float] = {}
    best = 0
    if prune:
        seeds = [complete_graph(n)]
        if n >= 2:
            seeds.append(complete_bipartite(n // 2, n - n // 2))
        best = max(count_orientations(s) for s in seeds)

    todo = []
    skipped = 0
    for form in forms:
        g = form.graph()
        if prune and (1 << g.m) < best:
            skipped += 1
            continue
        todo.append((form, g))

    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_timed_count, [g for _, g in todo], chunksize=64))
    else:
        results = [_timed_count(g) for _, g in todo]

    counts: dict[CanonicalForm, int] = {}
    for (form, _), (c, dt) in zip(todo, results):
        counts[form] = c
        timings[form.graph6()] = dt
    max_count = max(counts.values(), default=0)
    maximizers = sorted(f for f, c in counts.items() if c == max_count)
    return MaximizerReport(n, max_count, maximizers, len(forms), len(todo), skipped, prune, timings)


@dataclass
class TheoremVerdict:
    n: int
    passed: bool
    max_count: int
    expected: int
    unique_bipartite: bool | None
    report: MaximizerReport
    lines: list[str]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "max_count": self.max_count,
            "expected": self.expected,
            "unique_bipartite": self.unique_bipartite,
            "report": self.report.to_json(),
        }


def verify_theorem(n: int, prune: bool = False, workers: int = 1) -> TheoremVerdict:
    report = find_maximizers(n, prune=prune, workers=workers)
    expected = max(bipartite_max(n), factorial(n))
    lines = []
    passed = report.max_count == expected
    unique = None
    if n <= 7:
        passed = passed and report.max_count == factorial(n)
        lines.append(f"n={n}: max={report.max_count}={n}!: {'PASS' if passed else 'FAIL'}")
    else:
        k = canonical_form(complete_bipartite(n // 2, n - n // 2))
        unique = report.maximizers == [k]
        passed = passed and unique
        label = f"K_{{{n // 2},{n - n // 2}}}"
        what = f"unique maximizer {label}" if unique else \
            f"maximizers {[f.graph6() for f in report.maximizers]}"
        lines.append(f"n={n}: max={report.max_count}, {what}: {'PASS' if passed else 'FAIL'}")
    return TheoremVerdict(n, passed, report.max_count, expected, unique, report, lines)
