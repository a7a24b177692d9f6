"""Closed forms used by the extremal argument, all in exact integer arithmetic."""
from __future__ import annotations

from math import comb

ELL_LIMIT = 20
FACTORIAL_LIMIT = 30


def k1ll_count(ell: int) -> int:
    """Orientations of K_{1,ell,ell} with every triangle transitive.

    Sum over i, j of C(ell,i) C(ell,j) 2^((ell-i) j + (ell-j) i): the apex sends
    arcs to i vertices of one side and receives arcs from j vertices of the
    other; the cross edges between matching classes are then forced.
    """
    if not 1 <= ell <= ELL_LIMIT:
        raise ValueError(f"ell must lie in 1..{ELL_LIMIT}")
    return sum(
        k1ll_term(ell, i, j) for i in range(ell + 1) for j in range(ell + 1)
    )


def k1ll_term(ell: int, i: int, j: int) -> int:
    return comb(ell, i) * comb(ell, j) * 2 ** ((ell - i) * j + (ell - j) * i)


def bipartite_max(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 2 ** (n * n // 4)


def corollary_bound(r: int) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    return r * r - comb(r - 1, 2)


def edge_kr_bound(du: int, dv: int, duv: int) -> int:
    # common neighbours cannot exceed either neighbourhood
    if min(du, dv, duv) < 0 or duv > min(du, dv):
        raise ValueError(f"invalid degrees du={du}, dv={dv}, duv={duv}")
    return (du + 1) * (dv + 1) - comb(duv + 1, 2)


def factorial(n: int) -> int:
    if not 0 <= n <= FACTORIAL_LIMIT:
        raise ValueError(f"factorial guarded to 0..{FACTORIAL_LIMIT}")
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def corollary_case_max(r: int) -> int:
    """Largest bound the corollary's case split can produce for an edge {x, y}
    attached to an r-clique in a K_{r+1}-free graph.

    Enumerates every (dx, dy, dxy) with dx, dy <= r - 1 and dxy >= dx + dy - r.
    Case dx + dy <= r uses the product (dx+1)(dy+1); otherwise the edge bound.
    """
    best = 0
    for dx in range(r):
        for dy in range(r):
            lo = max(0, dx + dy - r)
            for dxy in range(lo, min(dx, dy) + 1):
                if dx + dy <= r:
                    val = (dx + 1) * (dy + 1)
                else:
                    val = edge_kr_bound(dx, dy, dxy)
                best = max(best, val)
    return best
