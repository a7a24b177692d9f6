"""Command-line front end.

Exit status: 0 when every claim checked holds, 1 when a claim fails, 2 for
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterable, Iterator, TextIO

from . import audit, census, extension
from .formulas import ELL_LIMIT, k1ll_count
from .graph import Graph, Graph6Error, parse_graph6, vertex_mask
from .orient import OracleLimitError, count_orientations, oracle_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Output:
    def __init__(self, as_json: bool, stream: TextIO) -> None:
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, obj: dict | None = None) -> None:
        if self.as_json:
            if obj is not None:
                print(json.dumps(obj), file=self.stream)
        else:
            print(text, file=self.stream)


def _read_graphs(args) -> Iterator[tuple[int, Graph]]:
    if args.file:
        try:
            with open(args.file, encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        except UnicodeDecodeError:
            raise UsageError(f"{args.file} is not ASCII graph6 text") from None
    else:
        lines = sys.stdin.read().splitlines()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line.strip())
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}") from None


def _parse_vertices(text: str, n: int, name: str) -> int:
    try:
        vs = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"{name} must be comma-separated vertex indices, got {text!r}") from None
    if not vs:
        raise UsageError(f"{name} is empty")
    bad = [v for v in vs if not 0 <= v < n]
    if bad:
        raise UsageError(f"{name} has vertices outside 0..{n - 1}: {bad}")
    return vertex_mask(vs)


def _workers(value: int | None) -> int:
    if value is None:
        env = os.environ.get("ORIENT_WORKERS", "1")
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"ORIENT_WORKERS must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError("worker count must be at least 1")
    return value


# -- subcommands --------------------------------------------------------------


def cmd_count(args, out: Output) -> int:
    status = EXIT_OK
    for lineno, g in _read_graphs(args):
        c = count_orientations(g)
        obj = {"line": lineno, "n": g.n, "m": g.m, "count": c}
        text = str(c)
        if args.oracle:
            try:
                o = oracle_count(g)
            except OracleLimitError as exc:
                raise UsageError(f"line {lineno}: {exc}") from None
            obj["oracle"] = o
            obj["agree"] = o == c
            if o != c:
                status = EXIT_FAIL
                text = f"{c} MISMATCH oracle={o}"
        out.emit(text, obj)
    return status


def cmd_ext(args, out: Output) -> int:
    if args.graph6:
        try:
            g = parse_graph6(args.graph6)
        except Graph6Error as exc:
            raise UsageError(str(exc)) from None
    else:
        graphs = list(_read_graphs(args))
        if len(graphs) != 1:
            raise UsageError("ext needs exactly one graph")
        g = graphs[0][1]
    a = _parse_vertices(args.a, g.n, "--a")
    b = _parse_vertices(args.b, g.n, "--b")
    try:
        cfg = extension.ExtConfig(g, a, b)
        res = extension.ext(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bits = res.witness.bits()
    obj = {"value": res.value, "witness": bits, "cross_edges": len(cfg.cross_edges)}
    out.emit(f"ext={res.value} witness={bits or '-'}", obj)
    return EXIT_OK


def cmd_formula(args, out: Output) -> int:
    if not 1 <= args.ell <= ELL_LIMIT:
        raise UsageError(f"--ell must lie in 1..{ELL_LIMIT}")
    value = k1ll_count(args.ell)
    out.emit(str(value), {"ell": args.ell, "count": value})
    return EXIT_OK


def cmd_enumerate(args, out: Output) -> int:
    if not 1 <= args.n <= census.GENERATE_LIMIT:
        raise UsageError(f"--n must lie in 1..{census.GENERATE_LIMIT}")
    forms = census.class_forms(args.n)
    for form in forms:
        g6 = form.graph6()
        out.emit(g6, {"graph6": g6, "canonical": form.bitstring()})
    print(f"{len(forms)} classes on {args.n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_extremal(args, out: Output) -> int:
    if not 1 <= args.n <= census.GENERATE_LIMIT:
        raise UsageError(f"--n must lie in 1..{census.GENERATE_LIMIT}")
    rep = census.find_maximizers(args.n, prune=not args.definitive, workers=_workers(args.workers))
    names = " ".join(f.graph6() for f in rep.maximizers)
    out.emit(f"n={rep.n}: max={rep.max_count} attained by {names} "
             f"({rep.counted} of {rep.classes} classes counted)", rep.to_json())
    return EXIT_OK


def _verify_n(n: int, args, out: Output) -> bool:
    v = census.verify_theorem(n, prune=not args.definitive, workers=_workers(args.workers))
    for line in v.lines:
        out.emit(line, v.to_json())
    return v.passed


def _certify_ext(out: Output, records: bool = False) -> bool:
    sink = (lambda r: out.emit("", json.loads(r.to_json()))) if records and out.as_json else None
    ok = True
    for cert in extension.certify_section2(sink):
        out.emit(cert.summary(), {"certificate": cert.to_json()})
        ok &= cert.passed
    return ok


def _lemma(out: Output) -> bool:
    rep = audit.verify_lemma_claim()
    out.emit(rep.line(), {"lemma_claim": rep.to_json()})
    if not out.as_json:
        extra = (f"  universal reading: {len(rep.universal)} qualify, "
                 f"{len(rep.universal_violations)} violations")
        out.emit(extra)
    return rep.passed


def _audit(out: Output, max_n: int, summary_only: bool) -> bool:
    rep = audit.run_audit(max_n)
    if out.as_json and not summary_only:
        for line in rep.json_lines():
            print(line, file=out.stream)
    elif out.as_json:
        for g in rep.summary():
            out.emit("", {"id": g.id, "scope": g.scope, "instances": g.instances,
                          "verdict": g.verdict, "failed": g.failed})
        for c in rep.certificates:
            out.emit("", {"certificate": c.to_json()})
    else:
        for line in rep.text_lines():
            out.emit(line)
    return rep.passed


def cmd_verify(args, out: Output) -> int:
    target = args.target
    if target == "all":
        results: list[tuple[str, bool, float]] = []

        def step(name, fn):
            t0 = time.perf_counter()
            results.append((name, fn(), time.perf_counter() - t0))

        for n in range(1, census.GENERATE_LIMIT + 1):
            step(f"theorem n={n}", lambda n=n: _verify_n(n, args, out))
        step("extension certificates", lambda: _certify_ext(out))
        step("lemma claim", lambda: _lemma(out))
        step("inequality audit", lambda: _audit(out, args.max_n, summary_only=True))
        if not out.as_json:
            out.emit("")
            out.emit(f"{'check':<24} {'verdict':<8} seconds")
            for name, ok, dt in results:
                out.emit(f"{name:<24} {'PASS' if ok else 'FAIL':<8} {dt:.1f}")
        ok = all(r[1] for r in results)
        out.emit(f"verify all: {'PASS' if ok else 'FAIL'}",
                 {"summary": {name: ("PASS" if r else "FAIL") for name, r, _ in results},
                  "verdict": "PASS" if ok else "FAIL"})
        return EXIT_OK if ok else EXIT_FAIL
    try:
        n = int(target)
    except ValueError:
        raise UsageError(f"verify takes a vertex count or 'all', got {target!r}") from None
    if not 1 <= n <= census.GENERATE_LIMIT:
        raise UsageError(f"exhaustive verification covers 1..{census.GENERATE_LIMIT}")
    return EXIT_OK if _verify_n(n, args, out) else EXIT_FAIL


def cmd_audit(args, out: Output) -> int:
    if args.max_n < 16:
        raise UsageError("--max-n must be at least 16")
    return EXIT_OK if _audit(out, args.max_n, args.summary) else EXIT_FAIL


def cmd_certify_ext(args, out: Output) -> int:
    return EXIT_OK if _certify_ext(out, records=args.records) else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON lines")

    graphs = argparse.ArgumentParser(add_help=False)
    graphs.add_argument("--file", help="graph6 file (default: stdin)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $ORIENT_WORKERS or 1)")
    search.add_argument("--definitive", action="store_true",
                        help="count every class instead of pruning by 2^m")

    p = argparse.ArgumentParser(
        prog="triorient",
        description="Exhaustive checks for orientations without cyclic triangles.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("count", parents=[common, graphs], help="count orientations of graph6 input")
    s.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("ext", parents=[common, graphs], help="ext value of two vertex sets")
    s.add_argument("graph6", nargs="?", help="graph6 string (default: read --file or stdin)")
    s.add_argument("--a", required=True, help="first vertex set, e.g. 0,1")
    s.add_argument("--b", required=True, help="second vertex set, e.g. 2,3")
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser("formula", parents=[common], help="closed-form count for K_{1,l,l}")
    s.add_argument("--ell", type=int, required=True)
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("enumerate", parents=[common], help="one graph per isomorphism class")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("extremal", parents=[common, search], help="maximizers on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("verify", parents=[common, search], help="verify n, or everything")
    s.add_argument("target", help="vertex count 1..8 or 'all'")
    s.add_argument("--max-n", type=int, default=audit.DEFAULT_MAX_N,
                   help="audit range used by 'all'")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", parents=[common], help="exact inequality audit")
    s.add_argument("--max-n", type=int, default=audit.DEFAULT_MAX_N)
    s.add_argument("--summary", action="store_true", help="with --json, one line per group")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("certify-ext", parents=[common], help="extension-bound certificates")
    s.add_argument("--records", action="store_true",
                   help="with --json, also emit every configuration")
    s.set_defaults(func=cmd_certify_ext)
    return p


def main(argv: Iterable[str] | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.json, stdout or sys.stdout)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"triorient {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
