"""
Counting orientations without cyclic triangles
==============================================

A short walk through the counting engine: cliques, bipartite graphs,
the closed form for K_{1,l,l}, and the brute-force oracle it is checked against.
"""
from __future__ import annotations

import math

from triorient.formulas import k1ll_count
from triorient.graph import complete_bipartite, complete_graph, complete_multipartite, emit_graph6
from triorient.orient import count_orientations, oracle_count

# every good orientation of K_r is transitive, so there are r! of them
for r in range(1, 9):
    print(f"K_{r}: {count_orientations(complete_graph(r))} (r! = {math.factorial(r)})")

# triangle-free graphs have no constraint at all
g = complete_bipartite(4, 4)
print(f"K_4,4 ({emit_graph6(g)}): {count_orientations(g)} = 2^{g.m}")

# the complete tripartite family, by formula, by the engine and by brute force
for ell in range(1, 5):
    h = complete_multipartite([1, ell, ell])
    line = f"K_1,{ell},{ell}: formula {k1ll_count(ell)}, engine {count_orientations(h)}"
    if h.m <= 30:
        line += f", oracle {oracle_count(h)}"
    print(line)
