"""
The eight-vertex sweep
======================

Generates all 12346 graphs on eight vertices up to isomorphism and finds
the ones with the most good orientations.  Takes a minute or two.
Pass ``--definitive`` to count every class instead of pruning.
"""
from __future__ import annotations

import sys
import time

from triorient.census import canonical_form, verify_theorem
from triorient.graph import complete_bipartite

prune = "--definitive" not in sys.argv
t0 = time.perf_counter()
v = verify_theorem(8, prune=prune)
print(f"{v.report.classes} classes, {v.report.counted} counted in {time.perf_counter() - t0:.0f}s")
print(f"maximum {v.max_count}, maximizers {[f.graph6() for f in v.report.maximizers]}")

# the winner is the balanced complete bipartite graph, 8!/2^16 < 1
print("K_4,4 canonical form:", canonical_form(complete_bipartite(4, 4)).graph6())
print(*v.lines, sep="\n")
