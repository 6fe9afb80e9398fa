"""brauerlab command line: enumerate, mult, star, xbasis, kernel, verify.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import factorial
from typing import Callable, Sequence

from . import diagrams as dg
from . import tensor as tn
from . import xbasis as xb
from .config import KernelConfig, VerifyConfig
from .combinatorics import Partition, hook_dimension, standard_tableaux, two_partitions
from .symgroup import Permutation, all_permutations


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# verification suites


def _report(check: str, ok: bool, detail: dict | None = None, **params) -> dict:
    return {"check": check, **params, "pass": bool(ok), "detail": detail or {}}


def suite_relations(max_n: int, max_m: int, slow: bool) -> list[dict]:
    out = []
    for n in range(1, max_n + 1):
        count = len(dg.enumerate_all(n))
        out.append(_report("diagram_count", count == dg.double_factorial(2 * n - 1),
                           {"count": count, "expected": dg.double_factorial(2 * n - 1)}, n=n))
        bad = [name for name, lhs, rhs in dg.presentation_relations(n) if lhs != rhs]
        out.append(_report("relations", not bad, {"failures": bad}, n=n))
        total = sum(len(dg.D_nu(n, f)) ** 2 * factorial(n - 2 * f) for f in range(n // 2 + 1))
        roundtrip = all(dg.from_normal_form(dg.to_normal_form(d)) == d for d in dg.enumerate_all(n))
        out.append(_report("normal_form", roundtrip and total == dg.double_factorial(2 * n - 1),
                           {"count_identity": total, "roundtrip": roundtrip}, n=n))
    return out


def suite_staraction(max_n: int, max_m: int, slow: bool) -> list[dict]:
    out = []
    for n in range(1, max_n + 1):
        ident = dg.identity_diagram(n)
        orb = dg.orbit(ident)
        stab = len(orb) and factorial(2 * n) // len(orb)
        axioms = dg.star_axioms_check(n)
        out.append(_report("star_axioms", axioms, {"checked": "identity and composition over s_1..s_{2n-1}"}
                           if axioms else {"witness": f"axiom violated for some diagram at n={n}"}, n=n))
        out.append(_report("transitivity", len(orb) == dg.double_factorial(2 * n - 1),
                           {"orbit": len(orb)}, n=n))
        out.append(_report("stabilizer_order", stab == 2 ** n * factorial(n),
                           {"order": stab, "expected": 2 ** n * factorial(n)}, n=n))
        if n <= 3:
            bad = [f"{i}/{j}" for i, j in dg.pair_constraints(n) if not dg.lemma23_check(n, i, j)]
            out.append(_report("lemma23", not bad, {"violations": bad[:5]}, n=n))
        for lam in two_partitions(n):
            r = xb.cor26_check(lam)
            r["n"] = n
            out.append(r)
    return out


def suite_xbasis(max_n: int, max_m: int, slow: bool) -> list[dict]:
    out = []
    for n in range(1, max_n + 1):
        total = sum(len(standard_tableaux(lam)) for lam in two_partitions(n))
        out.append(_report("lemma22", total == dg.double_factorial(2 * n - 1), {"sum": total}, n=n))
        counts = [str(lam) for lam in two_partitions(n)
                  if len(xb.x_lambda(lam)) != xb.expected_term_count(lam)]
        out.append(_report("x_lambda_terms", not counts, {"violations": counts}, n=n))
        out.append(xb.verify_basis(n))
        for lam in two_partitions(n):
            out.append(xb.lemma27_check(lam))
            out.append(xb.nonvanishing_check(lam))
            jm = [a for a in range(1, 2 * n + 1) if not xb.jm_eigen_check(lam, a)["pass"]]
            out.append(_report("jm_eigen", not jm, {"failing_indices": jm}, **{"lambda": str(lam)}))
            if 2 * n <= 6:
                out.append(xb.prop210_check(lam))
    out.append(xb.remark213_check())
    return out


def suite_filtration(max_n: int, max_m: int, slow: bool) -> list[dict]:
    out = []
    top = max_n if slow else min(max_n, 3)
    for n in range(1, top + 1):
        out.append(xb.dimension_check(n))
        for lam in two_partitions(n):
            out.append(xb.closure_check(lam))
        out.append(xb.character_check(n))
    return out


def suite_kernel(max_n: int, max_m: int, slow: bool) -> list[dict]:
    out = []
    for n in range(2, max_n + 1):
        for m in range(1, max_m + 1):
            if (n, m) == (4, 2) and not slow:
                continue
            if n > 4 and not slow:
                continue
            out.append(tn.verify_kernel_theorem(n, m))
            if n <= 3:
                out.append(tn.route_agreement(n, m))
                out.append(tn.bd_annihilation_report(n, m))
        if n <= 3:
            out.append(tn.permutation_invariance_check(n))
    return out


SUITES: dict[str, Callable[[int, int, bool], list[dict]]] = {
    "relations": suite_relations,
    "staraction": suite_staraction,
    "xbasis": suite_xbasis,
    "filtration": suite_filtration,
    "kernel": suite_kernel,
}


def run_suite(name: str, max_n: int = 3, max_m: int = 2, slow: bool = False, timing: bool = False) -> list[dict]:
    return run_config(VerifyConfig(name, max_n, max_m, slow, timing))


def run_config(cfg: VerifyConfig) -> list[dict]:
    out = []
    for s in cfg.suites():
        start = time.perf_counter()
        reports = SUITES[s](cfg.max_n, cfg.max_m, cfg.slow)
        for r in reports:
            r["suite"] = s
        if cfg.timing:
            elapsed = time.perf_counter() - start
            for r in reports:
                r["suite_wall_time"] = round(elapsed, 3)
        out.extend(reports)
    return out


# ---------------------------------------------------------------------------
# commands


def _parse_diagram(text: str, n: int, labels: str) -> dg.BrauerDiagram:
    try:
        return dg.BrauerDiagram.parse(text, n=n, labels=labels)
    except ValueError as exc:
        raise UsageError(f"bad diagram {text!r}: {exc}") from None


def _fmt_diagram(d: dg.BrauerDiagram, labels: str) -> str:
    return d.rows_str() if labels == "rows" else str(d)


def _check_n(n: int, upper: int = 8):
    if not 1 <= n <= upper:
        raise UsageError(f"n must lie in 1..{upper}, got {n}")


def cmd_enumerate(args) -> tuple[object, str, int]:
    _check_n(args.n, 6)
    ds = dg.enumerate_all(args.n)
    data = {"n": args.n, "count": len(ds), "diagrams": [d.to_json() for d in ds]}
    text = "\n".join(_fmt_diagram(d, args.labels) for d in ds)
    return data, text, 0


def cmd_mult(args):
    _check_n(args.n)
    a = dg.BrauerElement.of(_parse_diagram(args.lhs, args.n, args.labels))
    b = dg.BrauerElement.of(_parse_diagram(args.rhs, args.n, args.labels))
    prod_ = a * b
    if args.delta is not None:
        specialised = prod_.specialize(args.delta)
        data = specialised.to_json()
        text = " + ".join(f"{c}*{_fmt_diagram(d, args.labels)}" if c != 1 else _fmt_diagram(d, args.labels)
                          for d, c in specialised)
        return data, text, 0
    data = prod_.to_json()
    text = " + ".join(_fmt_diagram(d, args.labels) if str(c) == "1" else f"({c})*{_fmt_diagram(d, args.labels)}"
                      for d, c in prod_)
    return data, text, 0


def cmd_star(args):
    _check_n(args.n)
    d = _parse_diagram(args.diagram, args.n, args.labels)
    try:
        w = Permutation.parse(args.perm, 2 * args.n)
    except ValueError as exc:
        raise UsageError(f"bad permutation {args.perm!r}: {exc}") from None
    res = dg.star(d, w)
    return {"n": args.n, "diagram": res.to_json(), "text": str(res)}, _fmt_diagram(res, args.labels), 0


def cmd_xbasis(args):
    _check_n(args.n, 5)
    if args.lam is not None:
        try:
            lam = xb.even_partition(Partition.parse(args.lam))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if lam.size != 2 * args.n:
            raise UsageError(f"lambda {lam} is not a partition of {2 * args.n}")
        elems = [xb.x_lambda_t(lam, t) for t in standard_tableaux(lam)]
    else:
        elems = list(xb.full_basis(args.n))
    data = {"n": args.n, "elements": [{"lambda": str(e.lam), "tableau": str(e.tableau),
                                       "element": e.value.to_json()} for e in elems]}
    lines = []
    for e in elems:
        body = " + ".join(_fmt_diagram(d, args.labels) if c == 1 else f"{c}*{_fmt_diagram(d, args.labels)}"
                          for d, c in e.value)
        lines.append(f"{e.label} = {body}")
    return data, "\n".join(lines), 0


def cmd_kernel(args):
    _check_n(args.n, 6)
    try:
        cfg = KernelConfig(args.n, args.m, args.check_theorem)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        kernel = tn.kernel_phi(cfg.n, cfg.m, cfg.max_columns)
        report = tn.verify_kernel_theorem(cfg.n, cfg.m, cfg.max_columns) if cfg.check_theorem else None
    except tn.ResourceLimitError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(tn.kernel_to_csv(kernel))
    data = {"n": args.n, "m": args.m, "dimension": len(kernel), "formula": tn.kernel_formula(args.n, args.m),
            "basis": tn.kernel_to_json(kernel)}
    lines = [f"dim Ker phi (n={args.n}, m={args.m}) = {len(kernel)}"]
    for v in kernel:
        lines.append("  " + " + ".join(_fmt_diagram(d, args.labels) if c == 1 else f"{c}*{_fmt_diagram(d, args.labels)}"
                                       for d, c in v).replace("+ -", "- "))
    code = 0
    if report is not None:
        data["report"] = report
        lines.append(_report_line(report))
        code = 0 if report["pass"] else 1
    return data, "\n".join(lines), code


def _report_line(r: dict) -> str:
    params = " ".join(f"{k}={r[k]}" for k in r if k not in ("check", "pass", "detail", "suite", "suite_wall_time"))
    status = "PASS" if r["pass"] else "FAIL"
    extra = "" if r["pass"] else " " + json.dumps(r["detail"], sort_keys=True)
    return f"{status} {r['check']} {params}".rstrip() + extra


def cmd_verify(args):
    try:
        cfg = VerifyConfig(args.suite, args.max_n, args.max_m, args.slow, args.timing)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = run_config(cfg)
    ok = all(r["pass"] for r in reports)
    data = {"suite": cfg.suite, "max_n": cfg.max_n, "max_m": cfg.max_m, "slow": cfg.slow,
            "pass": ok, "failed": sum(not r["pass"] for r in reports), "reports": reports}
    text = "\n".join(_report_line(r) for r in reports)
    text += f"\n{'PASS' if ok else 'FAIL'} {len(reports) - data['failed']}/{len(reports)} checks"
    return data, text, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--labels", choices=("interleaved", "rows"), default="interleaved")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--timing", action="store_true", help="add wall times to verification reports")

    parser = _Parser(prog="brauerlab", description="Exact computations in the Brauer algebra.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("enumerate", parents=[common], help="list all Brauer n-diagrams")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mult", parents=[common], help="multiply two diagrams in B_n(x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, help="specialise x to this integer")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("star", parents=[common], help="apply a permutation of 1..2n to a diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("diagram")
    p.add_argument("perm", help='one-line "2 1 3 4" or cycles "(1 2)"')
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("xbasis", parents=[common], help="list X_{lambda,t} basis elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", help="even partition of 2n, e.g. 4,2")
    p.set_defaults(func=cmd_xbasis)

    p = sub.add_parser("kernel", parents=[common], help="kernel of the tensor-space action")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--check-theorem", action="store_true")
    p.add_argument("--csv", metavar="FILE", help="also write the kernel basis as CSV coordinates")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--slow", action="store_true", help="include n=4 filtration and the (4,2) kernel")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(payload: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if any(a == "--format=json" for a in argv) or \
        any(a == "--format" and b == "json" for a, b in zip(argv, argv[1:])) else "text"
    try:
        args = build_parser().parse_args(argv)
        data, text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        msg = str(exc).splitlines()[0]
        if fmt == "json":
            sys.stdout.write(json.dumps({"error": msg, "exit_code": 2}, sort_keys=True) + "\n")
        else:
            sys.stderr.write(f"brauerlab: error: {msg}\n")
        return 2
    if args.format == "json":
        _emit(json.dumps(data, sort_keys=True, indent=1) + "\n", args.out)
    else:
        _emit(text + "\n", args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
