"""Exact audit of the numeric inequalities behind the extremal argument.

Every instance carries exact ``int``/``Fraction`` sides and is judged through
:mod:`triorient.exact`. Each instance has a scope:

``stated``
    the inequality as displayed, over its displayed parameter domain;
``extra``
    the same inequality over a neighbouring domain worth reporting;
``supplementary``
    a repaired or finer-grained form of one link, under its own id.

Only ``stated`` instances and the tail certificates decide the verdict.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Callable, Iterator

from .census import class_forms
from .exact import Poly, first_positive_tail, holds, log2_upper, positive_from
from .formulas import k1ll_count
from .graph import Graph, has_clique, triangles_of
from .orient import count_orientations

DEFAULT_MAX_N = 200
LOG_DENOM = 100


def t(n: int) -> int:
    """Turán number of the triangle, floor(n^2 / 4)."""
    return n * n // 4


@dataclass(frozen=True)
class InequalityInstance:
    id: str
    params: tuple[tuple[str, int], ...]
    lhs: int | Fraction
    rhs: int | Fraction
    relation: str = "<"
    scope: str = "stated"

    @property
    def holds(self) -> bool:
        return holds(self.lhs, self.relation, self.rhs)

    @property
    def verdict(self) -> str:
        return "PASS" if self.holds else "FAILED"

    @property
    def p(self) -> dict[str, int]:
        return dict(self.params)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": self.p,
            "lhs": format_exact(self.lhs),
            "rhs": format_exact(self.rhs),
            "relation": self.relation,
            "verdict": self.verdict,
            "scope": self.scope,
        }


def _inst(id_: str, lhs, rhs, relation="<", scope="stated", **params) -> InequalityInstance:
    return InequalityInstance(id_, tuple(params.items()), lhs, rhs, relation, scope)


# -- compact exact serialisation ---------------------------------------------

_SMALL = 1 << 64
_NUM = re.compile(r"^(-?)(\d+)(?:\*2\^(\d+)|)$|^(-?)2\^(\d+)$")


def _format_int(x: int) -> str:
    if -_SMALL < x < _SMALL:
        return str(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    k = (x & -x).bit_length() - 1
    odd = x >> k
    if odd == 1:
        return f"{sign}2^{k}"
    return f"{sign}{odd}*2^{k}" if k else f"{sign}{odd}"


def format_exact(x: int | Fraction) -> str:
    """Exact text form; large integers are written as ``odd*2^k``."""
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{_format_int(x.numerator)}/{_format_int(x.denominator)}"
    return _format_int(int(x))


def _parse_int(s: str) -> int:
    m = _NUM.match(s)
    if not m:
        raise ValueError(f"not an exact number: {s!r}")
    if m.group(5) is not None:
        return (-1 if m.group(4) else 1) << int(m.group(5))
    value = int(m.group(2)) << int(m.group(3) or 0)
    return -value if m.group(1) else value


def parse_exact(s: str) -> int | Fraction:
    if "/" in s:
        num, den = s.split("/")
        return Fraction(_parse_int(num), _parse_int(den))
    return _parse_int(s)


# -- the main theorem ----------------------------------------------------------


def grandever1(max_n: int) -> Iterator[InequalityInstance]:
    # the case applies the induction hypothesis to n - 8 >= 8; n in 9..15 is extra
    for n in range(9, max_n + 1):
        lhs = 2 ** 16 * 9 ** (n - 8) * 2 ** t(n - 8)
        yield _inst("grandever1", lhs, 2 ** t(n), scope="stated" if n >= 16 else "extra", n=n)


def grandever2(max_n: int) -> Iterator[InequalityInstance]:
    for r in (5, 6, 7):
        for n in range(9, max_n + 1):
            lhs = factorial(r) * r ** (n - r) * 2 ** t(n - r)
            yield _inst("grandever2", lhs, 2 ** t(n), r=r, n=n)


def grandever3(max_n: int) -> Iterator[InequalityInstance]:
    # a vertex of degree d < (n-1)/2 on top of the bound for n - 1 vertices
    for n in range(11, max_n + 1):
        for d in range((n - 2) // 2 + 1):
            yield _inst("grandever3", 2 ** (t(n - 1) + d), 2 ** t(n), "<=", n=n, d=d)


def grandever4(max_n: int) -> Iterator[InequalityInstance]:
    for n in range(11, max_n + 1):
        for y in range(2, (n - 4) // 2 + 1):
            lhs = 24 * 13 ** y * 4 ** (n - 4 - 2 * y) * 2 ** t(n - 4)
            yield _inst("grandever4", lhs, 2 ** t(n), n=n, y=y)


def grandever4_relaxed(max_n: int) -> Iterator[InequalityInstance]:
    """The intermediate bound 3 (13/16)^y 2^3 2^(2(n-4)) 2^((n-4)^2/4), compared
    after raising both sides to the fourth power."""
    for n in range(11, max_n + 1):
        for y in range(2, (n - 4) // 2 + 1):
            lhs4 = 81 * Fraction(13, 16) ** (4 * y) * 2 ** (12 + 8 * (n - 4) + (n - 4) ** 2)
            yield _inst("grandever4/relaxed", lhs4, 2 ** (4 * t(n)), "<", "supplementary",
                        n=n, y=y)


def grandever5_value(x: int, z: int) -> Fraction:
    return Fraction(11 * x * x - 25 * x - 4 * x * z + 10 * z * z - 10, 10)


def grandever5_in_domain(x: int, z: int) -> bool:
    return (x >= 3 and z >= 0) or (x in (1, 2) and z >= 2)


def grandever5(limit: int) -> Iterator[InequalityInstance]:
    for x in range(limit + 1):
        for z in range(limit + 1):
            if grandever5_in_domain(x, z):
                yield _inst("grandever5", grandever5_value(x, z), 0, ">", x=x, z=z)


# the three log2 bounds used to reach the quadratic
GRANDEVER5_LOGS = {3: Fraction(16, 10), 6: Fraction(26, 10), 15: Fraction(395, 100)}


def _grandever5_log_bound(x: int, y: int, z: int) -> Fraction:
    """Upper bound on log2 of 6^x 15^C(x,2) 8^(xy) 2^(y^2) 3^(xz) 2^(yz)."""
    logs = GRANDEVER5_LOGS
    return (x * logs[6] + comb(x, 2) * logs[15] + 3 * x * y + y * y
            + x * z * logs[3] + y * z)


def grandever5_product(x: int, y: int, z: int) -> int:
    return (6 ** x * 15 ** comb(x, 2) * 8 ** (x * y) * 2 ** (y * y)
            * 3 ** (x * z) * 2 ** (y * z))


def grandever5_supplementary(max_n: int) -> Iterator[InequalityInstance]:
    for base, bound in sorted(GRANDEVER5_LOGS.items()):
        yield _inst("grandever5/log-bound", base ** bound.denominator, 2 ** bound.numerator,
                    "<=", "supplementary", base=base)
    # the quadratic equals 4((n^2-1)/4 - log bound); degree 2 per variable, so a
    # 3x3x3 grid pins the polynomial identity
    for x in range(3):
        for y in range(3):
            for z in range(3):
                n = 3 * x + 2 * y + z
                slack = Fraction(n * n - 1, 4) - _grandever5_log_bound(x, y, z)
                yield _inst("grandever5/reduction", 4 * slack, grandever5_value(x, z), "=",
                            "supplementary", x=x, y=y, z=z)
    # the product itself against 2^t(n) on a small box
    for x in range(9):
        for y in range(9):
            for z in range(9):
                n = 3 * x + 2 * y + z
                if grandever5_in_domain(x, z) and 9 <= n <= max_n:
                    yield _inst("grandever5/direct", grandever5_product(x, y, z), 2 ** t(n),
                                "<", "supplementary", x=x, y=y, z=z)


def _grandever6_product(y: int, z: int) -> int:
    return 2 ** (16 + 4 * z) * 2 ** ((8 + z) * (y - 1)) * 4 ** comb(y - 1, 2) * 2 ** (y - 1)


def grandever6(max_n: int) -> Iterator[InequalityInstance]:
    for y in range(1, max_n):
        for z in (0, 1):
            n = 6 + 2 * y + z
            if n > max_n:
                continue
            yield _inst("grandever6", _grandever6_product(y, z), 2 ** t(n), "=", y=y, z=z)
            # the displayed exponent ((6+2y+z)^2 - z)/4 is the floor
            exponent = Fraction(n * n - z, 4)
            yield _inst("grandever6/floor", exponent, t(n), "=", "supplementary", y=y, z=z)


def grandever8(max_n: int) -> Iterator[InequalityInstance]:
    for y in range(2, max_n):
        for z in (0, 1):
            n = 3 + 2 * y + z
            if n > max_n:
                continue
            lhs = 2 ** 12 * 128 ** (y - 2) * 2 ** ((2 * y - 4) ** 2 // 4) * (3 * 2 ** y) ** z
            yield _inst("grandever8", lhs, 2 ** t(n), y=y, z=z)
            # first link, raised to the fourth power
            yield _inst("grandever8/first-link", lhs ** 4, 2 ** (n * n - 1), "<=",
                        "supplementary", y=y, z=z)
            # non-strict chain; strictness then comes from o(H) < 2^12
            yield _inst("grandever8/non-strict", lhs, 2 ** t(n), "<=", "supplementary", y=y, z=z)


def grandever9(max_n: int) -> Iterator[InequalityInstance]:
    # a triangle-free graph other than the balanced bipartite one misses an edge
    for n in range(9, max_n + 1):
        yield _inst("grandever9", 2 ** (t(n) - 1), 2 ** t(n), n=n)


# -- the small cases 9 <= n <= 15 -----------------------------------------------


def ver0() -> Iterator[InequalityInstance]:
    for n in range(9, 16):
        yield _inst("ver0", factorial(n - 8) * 9 ** (n - 8) * 2 ** 16, 2 ** t(n), n=n)


def ver1() -> Iterator[InequalityInstance]:
    for r in (6, 7):
        for n in range(9, 8 + r):
            lhs = factorial(n - r) * r ** (n - r) * factorial(r)
            yield _inst("ver1", lhs, 2 ** t(n), r=r, n=n)


def ver2() -> Iterator[InequalityInstance]:
    for n in range(9, 13):
        for x in range(2, (n - 5) // 2 + 1):
            lhs = factorial(n - 5) * 19 ** x * 5 ** (n - 5 - 2 * x) * factorial(5)
            yield _inst("ver2", lhs, 2 ** t(n), n=n, x=x)


def ver3() -> Iterator[InequalityInstance]:
    for n in range(9, 13):
        for x in (0, 1):
            lhs = factorial(5) * 19 ** x * 5 ** (n - 5 - 2 * x) * 2 ** (n - 6)
            yield _inst("ver3", lhs, 2 ** t(n), n=n, x=x)


def ver4() -> Iterator[InequalityInstance]:
    # x counts matching edges among the n - 8 leftover vertices, so 2x <= n - 8
    for n in range(9, 12):
        for x in (0, 1):
            if 2 * x > n - 8:
                continue
            lhs = factorial(n - 8) * 13 ** (2 * x) * 4 ** (2 * (n - 8 - 2 * x)) * 2 ** 16
            yield _inst("ver4", lhs, 2 ** t(n), n=n, x=x)
            if x == 0:
                # no edges left over: the leftover part has one orientation, not (n-8)!
                lhs = 4 ** (2 * (n - 8)) * 2 ** 16
                yield _inst("ver4/edgeless", lhs, 2 ** t(n), "<=", "supplementary", n=n, x=x)


def ver5() -> Iterator[InequalityInstance]:
    yield _inst("ver5", 6 * 15 * 52 * factorial(7), 2 ** 25, n=10)
    yield _inst("ver5", 6 * 36 * 15 * 52 * factorial(7), 2 ** 30, n=11)


def ver6() -> Iterator[InequalityInstance]:
    for n in range(9, 12):
        for x in range((n - 7) // 2 + 1):
            rest = n - 7 - 2 * x
            lhs = (2 ** x * 4 ** comb(x, 2) * 13 ** x * 8 ** x * 3 ** rest * 4 ** rest
                   * 2 ** (x * rest) * factorial(7))
            yield _inst("ver6", lhs, 2 ** t(n), n=n, x=x)


def ver7() -> Iterator[InequalityInstance]:
    for n in range(9, 12):
        for x in range((n - 4) // 2 + 1):
            rest = n - 4 - 2 * x
            lhs = 2 ** x * 4 ** comb(x, 2) * 13 ** x * 4 ** rest * 2 ** (x * rest) * factorial(4)
            yield _inst("ver7", lhs, 2 ** t(n), n=n, x=x)


def ver8() -> Iterator[InequalityInstance]:
    for n in (9, 10):
        y = n - 9
        yield _inst("ver8", 6 ** 3 * 15 ** 3 * 3 ** (3 * y), 2 ** t(n), n=n, y=y)


def ver9_13(k1ll4: int | None = None) -> Iterator[InequalityInstance]:
    yield _inst("ver9", 3 * 2 ** 2, 2 ** 4, n=9)
    yield _inst("ver10", 82 * 18 * 15 * 3 * 3 * 5, 2 ** 20, n=9, part=1)
    yield _inst("ver10", 271614, 2 ** 20, n=9, part=2)
    if k1ll4 is not None:
        yield _inst("ver10/computed", k1ll4, 2 ** 20, "<", "supplementary", n=9, part=2)
    yield _inst("ver11", 3 * 2 ** 3, 2 ** 5, n=10)
    yield _inst("ver12", 82 ** 2 * 15 * 8 ** 2 * 4, 2 ** 25, n=10)
    for n in range(9, 16):
        yield _inst("ver13", 2 ** (t(n) - 1), 2 ** t(n), n=n)


# -- the whole audit --------------------------------------------------------------


def audit_all(max_n: int = DEFAULT_MAX_N, supplementary: bool = True) -> list[InequalityInstance]:
    """Every instance in a fixed order. ``max_n`` bounds n for the unbounded
    inequalities and x, z for the quadratic."""
    if max_n < 16:
        raise ValueError("max_n must be at least 16")
    parts: list[Iterator[InequalityInstance]] = [
        grandever1(max_n), grandever2(max_n), grandever3(max_n), grandever4(max_n),
        grandever5(max_n), grandever6(max_n), grandever8(max_n), grandever9(max_n),
        ver0(), ver1(), ver2(), ver3(), ver4(), ver5(), ver6(), ver7(), ver8(),
        ver9_13(k1ll_count(4)),
    ]
    if supplementary:
        parts += [grandever4_relaxed(max_n), grandever5_supplementary(max_n)]
    out = []
    for part in parts:
        out.extend(r for r in part if supplementary or r.scope != "supplementary")
    return out


# domain views reported separately for inequalities whose domain is in doubt
DOMAIN_VIEWS: dict[str, list[tuple[str, Callable[[dict], bool]]]] = {
    "grandever1": [("n>=16", lambda p: p["n"] >= 16), ("n>=9", lambda p: p["n"] >= 9)],
    "grandever2": [("n>=9", lambda p: True), ("n>=r+8", lambda p: p["n"] >= p["r"] + 8)],
}


@dataclass
class GroupSummary:
    id: str
    scope: str
    instances: int
    failed: list[dict]

    @property
    def verdict(self) -> str:
        return "FAILED" if self.failed else "PASS"

    def line(self) -> str:
        where = ""
        if self.failed:
            shown = ", ".join(_fmt_params(p) for p in self.failed[:4])
            more = f" (+{len(self.failed) - 4} more)" if len(self.failed) > 4 else ""
            where = f"; fails at {shown}{more}"
        return f"{self.id} [{self.scope}]: {self.instances} instances, {self.verdict}{where}"


def _fmt_params(p: dict) -> str:
    return "(" + ", ".join(f"{k}={v}" for k, v in p.items()) + ")"


def summarize(records: list[InequalityInstance]) -> list[GroupSummary]:
    groups: dict[tuple[str, str], GroupSummary] = {}
    for r in records:
        key = (r.id, r.scope)
        g = groups.setdefault(key, GroupSummary(r.id, r.scope, 0, []))
        g.instances += 1
        if not r.holds:
            g.failed.append(r.p)
    for id_, views in DOMAIN_VIEWS.items():
        mine = [r for r in records if r.id == id_ and r.scope != "supplementary"]
        for name, pred in views:
            sel = [r for r in mine if pred(r.p)]
            if sel:
                groups[(id_, name)] = GroupSummary(
                    id_, name, len(sel), [r.p for r in sel if not r.holds])
    return list(groups.values())


# -- exponent dominance beyond the audited range ------------------------------------


@dataclass
class CertificatePart:
    label: str
    passed: bool
    crossover: int | None
    detail: str
    gap: Poly | None = None

    def to_json(self) -> dict:
        out = {"label": self.label, "passed": self.passed, "crossover": self.crossover,
               "detail": self.detail}
        if self.gap is not None:
            out["gap_coefficients"] = self.gap.coefficients()
        return out


@dataclass
class DominanceCertificate:
    case: str
    checked_from: int
    log_bounds: dict[int, Fraction]
    parts: list[CertificatePart]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.parts)

    @property
    def crossover(self) -> int | None:
        xs = [p.crossover for p in self.parts]
        return None if None in xs else max(xs)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "verdict": "PASS" if self.passed else "FAILED",
            "checked_from": self.checked_from,
            "crossover": self.crossover,
            "log2_upper_bounds": {str(k): str(v) for k, v in sorted(self.log_bounds.items())},
            "parts": [p.to_json() for p in self.parts],
            "notes": self.notes,
        }

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAILED"
        return f"{self.case} tail certificate: {verdict} (crossover n={self.crossover})"


def _checked_log(x: int) -> Fraction:
    bound = log2_upper(x, LOG_DENOM)
    # log2_upper is exact, but re-check the certificate the way a reader would
    assert holds(x ** bound.denominator, "<=", 2 ** bound.numerator)
    return bound


def _linear_tail(label: str, gap: Poly, start: int, domain_start: int) -> CertificatePart:
    # gap(n) <= log2(rhs) - log2(lhs); positive and nondecreasing from start on
    ok = positive_from(gap, start) and gap.derivative()(start) >= 0
    cross = first_positive_tail(gap, domain_start, start) if ok else None
    return CertificatePart(label, ok, cross, "gap(n) > 0 and nondecreasing for n >= "
                           f"{start}", gap)


def _cert_grandever1(start: int) -> DominanceCertificate:
    n = Poly.t()
    l9 = _checked_log(9)
    # t(n) >= (n^2-1)/4 and t(n-8) <= (n-8)^2/4
    gap = Fraction(1, 4) * (n * n - 1) - Fraction(1, 4) * (n - 8) * (n - 8) - 16 - (n - 8) * l9
    return DominanceCertificate("grandever1", start, {9: l9},
                                [_linear_tail("n >= 9", gap, start, 9)])


def _cert_grandever2(start: int) -> DominanceCertificate:
    n = Poly.t()
    logs: dict[int, Fraction] = {}
    parts = []
    for r in (5, 6, 7):
        lr, lf = _checked_log(r), _checked_log(factorial(r))
        logs[r], logs[factorial(r)] = lr, lf
        gap = Fraction(1, 4) * (n * n - 1) - Fraction(1, 4) * (n - r) * (n - r) - (n - r) * lr - lf
        parts.append(_linear_tail(f"r={r}", gap, start, 9))
    return DominanceCertificate("grandever2", start, logs, parts)


def _cert_grandever4(start: int) -> DominanceCertificate:
    k = Poly.t()
    parts = []
    # t(n) - t(n-4) = 2n - 4 for both parities (n = 2k, n = 2k+1)
    even = k * k - (k - 2) * (k - 2) == 2 * (2 * k) - 4
    odd = (k * k + k) - ((k - 2) * (k - 2) + (k - 2)) == 2 * (2 * k + 1) - 4
    parts.append(CertificatePart("t(n) - t(n-4) = 2n - 4", even and odd, 11,
                                 "polynomial identity in k for n = 2k and n = 2k+1"))
    # so lhs / rhs = 24 13^y 4^(-2y) / 2^4 = (3/2) (13/16)^y, free of n
    ratio2 = Fraction(24 * 13 ** 2, 2 ** (4 * 2 + 4))
    ok = holds(ratio2, "<", 1) and holds(Fraction(13, 16), "<", 1)
    parts.append(CertificatePart("ratio (3/2)(13/16)^y < 1 for y >= 2", ok, 11,
                                 f"ratio at y=2 is {ratio2}; each step multiplies by 13/16"))
    lhs4, rhs4 = 81 * 13 ** 8, 8 * 16 ** 8
    factor = holds(lhs4, "<=", rhs4)
    note = (f"the factor 3*(13/16)^2 <= 2^(3/4), checked as 81*13^8 <= 8*16^8, is "
            f"{'true' if factor else 'false'} ({lhs4} vs {rhs4})")
    return DominanceCertificate("grandever4", start, {}, parts, [note])


def _cert_grandever5(start: int) -> DominanceCertificate:
    x = Poly.t()
    parts = []
    # 10 z^2 - 4 x z >= -0.4 x^2, so ten times the quadratic is at least q(x)
    q = Fraction(106, 10) * x * x - 25 * x - 10
    parts.append(CertificatePart("x >= 3, any z", positive_from(q, 3), 3,
                                 "10*value >= 10.6x^2 - 25x - 10 > 0 for x >= 3", q))
    for xv in (1, 2):
        p = 10 * x * x - 4 * xv * x + (11 * xv * xv - 25 * xv - 10)
        ok = positive_from(p, 2) and p.derivative()(2) >= 0
        parts.append(CertificatePart(f"x = {xv}, z >= 2", ok, 2,
                                     "10*value as a polynomial in z, positive from z = 2", p))
    return DominanceCertificate("grandever5", 0, dict(GRANDEVER5_LOGS), parts)


def _cert_grandever6(start: int) -> DominanceCertificate:
    y = Poly.t()
    parts = []
    for z in (0, 1):
        exponent = 16 + 4 * z + (8 + z) * (y - 1) + (y - 1) * (y - 2) + (y - 1)
        # z^2 = z turns ((6+2y+z)^2 - z)/4 into a polynomial in y
        target = Fraction(1, 4) * ((6 + 2 * y + z) * (6 + 2 * y + z) - z)
        parts.append(CertificatePart(f"z={z}", exponent == target, 1,
                                     "exponent identity as polynomials in y", exponent - target))
    return DominanceCertificate("grandever6", start, {}, parts)


def _cert_grandever8(start: int) -> DominanceCertificate:
    y = Poly.t()
    parts = []
    for z in (0, 1):
        # log2 lhs = 12 + 7(y-2) + (y-2)^2 + z(log2 3 + y); for z = 1 the 3 stays apart
        lhs_exp = 12 + 7 * (y - 2) + (y - 2) * (y - 2) + z * y
        rhs_exp = Fraction(1, 4) * ((3 + 2 * y + z) * (3 + 2 * y + z) - (1 - z))
        diff = rhs_exp - lhs_exp
        ratio = Fraction(3 ** z, 2 ** int(diff(2)))
        constant = diff.degree == 0
        ok = constant and holds(ratio, "<", 1)
        parts.append(CertificatePart(
            f"z={z}", ok, 7 + z if ok else None,
            f"lhs / rhs = {ratio} for every y" if constant else "gap not constant", diff))
    return DominanceCertificate("grandever8", start, {}, parts)


_CERTIFIERS = {
    "grandever1": _cert_grandever1,
    "grandever2": _cert_grandever2,
    "grandever4": _cert_grandever4,
    "grandever5": _cert_grandever5,
    "grandever6": _cert_grandever6,
    "grandever8": _cert_grandever8,
}

TAIL_CASES = tuple(_CERTIFIERS)


def exponent_dominance(case: str, max_n: int = DEFAULT_MAX_N) -> DominanceCertificate:
    """Certificate that ``case`` holds for every n beyond ``max_n``."""
    try:
        return _CERTIFIERS[case](max_n + 1)
    except KeyError:
        raise ValueError(f"no tail certificate for {case!r}; choose from {TAIL_CASES}") from None


# -- the seven-vertex lemma ---------------------------------------------------------


@dataclass
class LemmaClaimReport:
    classes: int
    qualifying: list[tuple[str, int]]
    universal: list[tuple[str, int]]
    bound: int = 4096

    @property
    def violations(self) -> list[tuple[str, int]]:
        return [q for q in self.qualifying if not holds(q[1], "<", self.bound)]

    @property
    def universal_violations(self) -> list[tuple[str, int]]:
        return [q for q in self.universal if not holds(q[1], "<", self.bound)]

    @property
    def max_count(self) -> int:
        return max((c for _, c in self.qualifying), default=0)

    @property
    def passed(self) -> bool:
        return bool(self.qualifying) and not self.violations

    def to_json(self) -> dict:
        return {
            "classes": self.classes,
            "qualifying": len(self.qualifying),
            "max_count": self.max_count,
            "bound": self.bound,
            "violations": [g for g, _ in self.violations],
            "universal_qualifying": len(self.universal),
            "universal_violations": [g for g, _ in self.universal_violations],
            "verdict": "PASS" if self.passed else "FAILED",
            "counts": {g: c for g, c in self.qualifying},
        }

    def line(self) -> str:
        return (f"lemma-claim: {len(self.qualifying)} of {self.classes} classes qualify, "
                f"max count {self.max_count} < {self.bound}: "
                f"{'PASS' if self.passed else 'FAILED'}")


def _has_two_disjoint_edges(g: Graph, vertices: int) -> bool:
    inner = [(u, v) for u, v in g.edges if vertices >> u & 1 and vertices >> v & 1]
    return any(not ({a, b} & {c, d}) for (a, b), (c, d) in combinations(inner, 2))


def lemma_claim_readings(g: Graph) -> tuple[bool, bool]:
    """(existential, universal) qualification of a graph for the lemma."""
    if has_clique(g, 4):
        return False, False
    tris = list(triangles_of(g))
    if not tris:
        return False, False
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in tris]
    if any(m1 & m2 == 0 for m1, m2 in combinations(masks, 2)):
        return False, False
    full = (1 << g.n) - 1
    good = [_has_two_disjoint_edges(g, full & ~m) for m in masks]
    return any(good), all(good)


def verify_lemma_claim(n: int = 7) -> LemmaClaimReport:
    forms = class_forms(n)
    qualifying, universal = [], []
    for form in forms:
        g = form.graph()
        exists, every = lemma_claim_readings(g)
        if not exists:
            continue
        entry = (form.graph6(), count_orientations(g))
        qualifying.append(entry)
        if every:
            universal.append(entry)
    return LemmaClaimReport(len(forms), qualifying, universal)


# -- report -------------------------------------------------------------------------


@dataclass
class AuditReport:
    max_n: int
    records: list[InequalityInstance]
    certificates: list[DominanceCertificate]

    @property
    def stated_failures(self) -> list[InequalityInstance]:
        return [r for r in self.records if r.scope == "stated" and not r.holds]

    @property
    def passed(self) -> bool:
        return not self.stated_failures and all(c.passed for c in self.certificates)

    def summary(self) -> list[GroupSummary]:
        return summarize(self.records)

    def json_lines(self) -> Iterator[str]:
        for r in self.records:
            yield json.dumps(r.to_json())
        for c in self.certificates:
            yield json.dumps({"certificate": c.to_json()})

    def text_lines(self) -> Iterator[str]:
        for g in self.summary():
            yield g.line()
        for c in self.certificates:
            yield c.line()
            yield from (f"  note: {note}" for note in c.notes)
        yield f"audit: {'PASS' if self.passed else 'FAILED'}"


def run_audit(max_n: int = DEFAULT_MAX_N, supplementary: bool = True) -> AuditReport:
    records = audit_all(max_n, supplementary)
    certificates = [exponent_dominance(case, max_n) for case in TAIL_CASES]
    return AuditReport(max_n, records, certificates)
