"""Command-line interface: tp, degree, table, moduli, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from . import moduli as M
from . import thom as T
from .partition import Partition, hilbert_degree, partitions
from .poly import SymForm

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
METHOD_ORDER = ("reduce", "naive", "sum")
WARN_D = 14


class UsageError(ValueError):
    pass


class MethodDisagreement(ArithmeticError):
    pass


# -- partitions ----------------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Accept "3,2,1,1" or "1^2 2 3" (commas and whitespace both separate parts)."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise UsageError("empty partition")
    parts: List[int] = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise UsageError(f"malformed part {tok!r}")
        p = int(m.group(1))
        e = 1 if m.group(2) is None else int(m.group(2))
        if p < 1:
            raise UsageError(f"parts must be positive, got {p}")
        if e < 1:
            raise UsageError(f"exponent must be positive in {tok!r}")
        parts.extend([p] * e)
    return Partition(tuple(parts))


# -- records -------------------------------------------------------------------

def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class TpRecord:
    d: int
    parts: Tuple[int, ...]
    codim: int
    tp: SymForm
    degree: int
    methods: Tuple[str, ...]

    def to_obj(self) -> dict:
        return {
            "d": self.d,
            "lambda": list(self.parts),
            "codim": self.codim,
            "tp": [[_coeff_str(c), a, b] for c, a, b in self.tp.terms()],
            "degree": self.degree,
            "methods": list(self.methods),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj: dict) -> "TpRecord":
        codim = int(obj["codim"])
        tp = SymForm.zero()
        for c, a, b in obj["tp"]:
            if a + 2 * b != codim:
                raise ValueError(f"term c1^{a} c2^{b} does not have degree {codim}")
            tp = tp + SymForm.monomial(a, b, Fraction(c))
        return cls(int(obj["d"]), tuple(obj["lambda"]), codim, tp,
                   int(obj["degree"]), tuple(obj["methods"]))

    @classmethod
    def from_json(cls, text: str) -> "TpRecord":
        return cls.from_obj(json.loads(text))

    def text(self) -> str:
        lam = "(" + ",".join(map(str, self.parts)) + ")"
        return (f"d={self.d} lambda={lam} codim={self.codim} "
                f"tp={self.tp} degree={self.degree} methods={','.join(self.methods)}")


def run_tp(lam: Partition, method: str = "all") -> TpRecord:
    names = METHOD_ORDER if method == "all" else (method,)
    results = {m: T.thom_polynomial(lam, m) for m in names}
    first = results[names[0]]
    bad = [m for m in names if results[m].value != first.value]
    if bad:
        diff = "; ".join(f"{m}: {results[m].value}" for m in names)
        raise MethodDisagreement(f"methods disagree for {lam}: {diff}")
    return TpRecord(lam.d, lam.parts, lam.codim, first.value,
                    int(T.projective_degree(first)), tuple(names))


def run_table(d: int, method: str = "all") -> List[TpRecord]:
    if d < 1:
        raise UsageError("need d >= 1")
    return [run_tp(lam, method) for lam in partitions(d)]


# -- moduli ----------------------------------------------------------------------

def run_moduli(d: int, space: str, bound: Optional[int] = None) -> M.RingPresentation:
    return M.presentation(d, space, bound)


def _series_str(s: M.PoincareSeries) -> str:
    return ",".join(map(str, s.coeffs))


def format_presentation(p: M.RingPresentation) -> str:
    lines = [f"space: {p.space}", f"d: {p.d}", f"grading: {p.grading}"]
    lines.append("generators: " + ", ".join(f"{g} (degree {k})" for g, k in p.generators))
    lines.append("relations:")
    for label, rel in zip(p.relation_labels, p.relations):
        lines.append(f"  {label} = 0" if label == str(rel) else f"  {label} = {rel}")
    for label in p.relation_labels[len(p.relations):]:
        lines.append(f"  {label} = 0")
    if p.betti is not None:
        lines.append("betti: " + ",".join(map(str, p.betti)))
        lines.append("betti degrees: " + ",".join(str(i) for i, b in enumerate(p.betti) if b))
    else:
        lines.append("series: " + _series_str(p.series))
    if p.expected is not None and p.expected.closed_form:
        lines.append(f"closed form: {p.expected.closed_form}")
    lines.append("verified: " + ("yes" if p.verified else "NO"))
    for n in p.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines)


def presentation_obj(p: M.RingPresentation) -> dict:
    return {
        "space": p.space,
        "d": p.d,
        "grading": p.grading,
        "generators": [[g, k] for g, k in p.generators],
        "relations": [[label, str(rel)] for label, rel in zip(p.relation_labels, p.relations)],
        "series": list(p.series.coeffs),
        "closed_form": p.expected.closed_form if p.expected is not None else None,
        "verified": bool(p.verified),
    }


# -- verification suite -------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    max_d: int
    suite: str
    checks: List[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.checks)

    @property
    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> dict:
        return {"suite": self.suite, "max_d": self.max_d, "run": len(self.checks),
                "passed": self.passed, "failed": [c.name for c in self.failed],
                "seconds": round(self.seconds, 3)}


Task = Tuple[str, Callable[[], List[Check]]]

SPOT_VALUES = {
    (2,): "2*c1",
    (2, 1): "6*c1",
    (3,): "6*c1^2 + 3*c2",
    (2, 2): "12*c1^2 + 16*c2",
    (3, 1, 1, 1): "120*c1^2 - 48*c2",
    (1, 1, 1): "1",
}


def _tp_partition_checks(lam: Partition) -> List[Check]:
    vals = {m: T.thom_polynomial(lam, m) for m in METHOD_ORDER}
    ref = vals["reduce"]
    agree = all(v.value == ref.value for v in vals.values())
    out = [Check(f"tp agree {lam}", agree,
                 "" if agree else "; ".join(f"{m}: {v}" for m, v in vals.items()))]
    try:
        deg = T.projective_degree(ref)
        out.append(Check(f"tp degree {lam}", deg == hilbert_degree(lam),
                         f"{deg} vs {hilbert_degree(lam)}"))
    except ArithmeticError as exc:
        out.append(Check(f"tp degree {lam}", False, str(exc)))
    if lam.parts in SPOT_VALUES:
        want = SPOT_VALUES[lam.parts]
        out.append(Check(f"tp spot {lam}", str(ref) == want, f"{ref} vs {want}"))
    return out


def _closed_form_checks(d: int) -> List[Check]:
    out = []
    ref = lambda parts: T.tp_reduce(Partition(parts)).value  # noqa: E731
    for i in range(1, d + 1):
        if d % i == 0:
            e = d // i
            out.append(Check(f"power block {i}^{e}",
                             T.tp_power_block(i, e).value == ref((i,) * e)))
    for j in range(2, d):
        e1 = d - j
        out.append(Check(f"kirwan 1^{e1} {j}",
                         T.tp_kirwan(e1, j).value == ref((1,) * e1 + (j,))))
    for lam in partitions(d):
        blocks = lam.blocks()
        if len(blocks) == 2:
            (i, ei), (j, ej) = blocks
            out.append(Check(f"two block {lam}",
                             T.tp_two_block(i, ei, j, ej).value == ref(lam.parts)))
    if d % 2 == 0 and d >= 6:
        h = d // 2
        for j in range(2, h):
            out.append(Check(f"e3 d={d} j={j}",
                             T.tp_e3(h, j).value == ref((1,) * (h - j) + (j, h))))
        out.append(Check(f"e3 j=2 form d={d}",
                         T.tp_e3_j2(h).value == ref((1,) * (h - 2) + (2, h))))
        rep = T.check_relations_even(h)
        out.append(Check(f"relations d={d}", rep.ok, "; ".join(rep.failures)))
    return out


def _moduli_checks(d: int) -> List[Check]:
    out = []
    bound = 2 * d
    kser = M.quotient_series(M.kirwan_ideal(d), bound)
    out.append(Check(f"kirwan series d={d}", kser.same_coeffs(M.kirwan_series(d, bound)),
                     _series_str(kser)))
    gf = M.gen_function_check(d, 12, bound)
    out.append(Check(f"generating function coefficients d={d}", gf.coefficients_ok,
                     f"first failing j: {gf.first_failing_j}"))
    ideal_key = ("(dG_j, h<j<=h+3) = (c1 Pi, c1 dPi)" if d % 2 == 0
                 else "(dG_j, h<j<=h+3) = (Tp l1, Tp l2)")
    out.append(Check(f"generating function ideal d={d}", gf.ideal_checks[ideal_key], ideal_key))
    if d >= 5:
        g = M.gcd_certificates(d)
        out.append(Check(f"gcd certificates d={d}", g.ok,
                         f"gcd(Pi,Pi*)={g.gcd_pi_swap} gcd(Pi,dPi)={g.gcd_pi_dpi}"))
    if d % 2 == 0 and d >= 4:
        pser = M.quotient_series(M.pi_ideal(d), bound)
        out.append(Check(f"(Pi, dPi) series d={d}",
                         pser.same_coeffs(M.stable_series_even(d).truncate(bound)),
                         _series_str(pser)))
        aser = M.augmented_series(M.kirwan_ideal(d), bound)
        out.append(Check(f"ss-quotient series d={d}",
                         aser.same_coeffs(M.ss_quotient_series_even(d, bound)),
                         _series_str(aser)))
    if d % 2 == 0 and d >= 6:
        h = d // 2
        out.append(Check(f"(Tp l1, Tp l2) = (c1 Pi, c1 dPi) d={d}",
                         M.ideal_equal_up_to(M.kirwan_ideal(d), M.c1_pi_ideal(d), bound)))
        out.append(Check(f"(Tp l0, Tp l0') = (Pi, dPi) d={d}",
                         M.ideal_equal_up_to(M.stable_ideal(d), M.pi_ideal(d), bound)))
        out.append(Check(f"lambda2 identity d={d}", M.lambda2_identity_holds(d)))
        I = M.kirwan_ideal(d)
        for j in range(2, h):
            lam = Partition((1,) * (h - j) + (j, h))
            mem = M.membership(T.tp_reduce(lam).value, I)
            out.append(Check(f"non-membership {lam}", not mem.member,
                             f"ranks {mem.ideal_rank}/{mem.augmented_rank}"))
        link = M.presentation_link(d)
        out.append(Check(f"link d={d}", bool(link.verified),
                         ",".join(map(str, link.betti))))
    return out


def verify_tasks(max_d: int, suite: str) -> List[Task]:
    tasks: List[Task] = []
    if suite in ("tp", "all"):
        for d in range(1, max_d + 1):
            for lam in partitions(d):
                tasks.append((f"tp {lam}", lambda lam=lam: _tp_partition_checks(lam)))
            tasks.append((f"closed forms d={d}", lambda d=d: _closed_form_checks(d)))
    if suite in ("moduli", "all"):
        for d in range(3, max_d + 1):
            tasks.append((f"moduli d={d}", lambda d=d: _moduli_checks(d)))
    return tasks


def _run_task(task: Task) -> List[Check]:
    name, fn = task
    try:
        return fn()
    except Exception as exc:  # collected, not fail-fast
        return [Check(name, False, f"{type(exc).__name__}: {exc}")]


def run_verify(max_d: int = 10, suite: str = "all", jobs: int = 1) -> VerifyReport:
    if max_d < 1:
        raise UsageError("need max_d >= 1")
    if suite not in ("tp", "moduli", "all"):
        raise UsageError(f"unknown suite {suite!r}")
    start = time.perf_counter()
    tasks = verify_tasks(max_d, suite)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(_run_task, tasks))
    else:
        groups = [_run_task(t) for t in tasks]
    report = VerifyReport(max_d, suite, [c for g in groups for c in g])
    report.seconds = time.perf_counter() - start
    return report


# -- argument handling ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rootloci",
        description="Thom polynomials of coincident root loci and related cohomology rings.")
    sub = p.add_subparsers(dest="command", required=True)

    tp = sub.add_parser("tp", help="Thom polynomial of one partition")
    tp.add_argument("--lambda", dest="lam", required=True,
                    help='partition, e.g. "3,1,1,1" or "1^3 3"')
    tp.add_argument("--method", choices=("all",) + METHOD_ORDER, default="all")
    tp.add_argument("--format", choices=("text", "json"), default="text")

    deg = sub.add_parser("degree", help="degree of the projectivized locus")
    deg.add_argument("--lambda", dest="lam", required=True)

    tab = sub.add_parser("table", help="Thom polynomials of all partitions of d")
    tab.add_argument("--d", type=int, required=True)
    tab.add_argument("--format", choices=("text", "json"), default="text")

    mod = sub.add_parser("moduli", help="cohomology ring presentations")
    mod.add_argument("--d", type=int, required=True)
    mod.add_argument("--space", required=True, choices=sorted(M.SPACE_ALIASES))
    mod.add_argument("--bound", type=int, default=None)
    mod.add_argument("--format", choices=("text", "json"), default="text")

    ver = sub.add_parser("verify", help="run the cross-check suite")
    ver.add_argument("--max-d", type=int, default=10)
    ver.add_argument("--suite", choices=("tp", "moduli", "all"), default="all")
    ver.add_argument("--jobs", type=int, default=1)
    return p


def _dispatch(args, out) -> int:
    if args.command == "tp":
        rec = run_tp(parse_partition(args.lam), args.method)
        print(rec.to_json() if args.format == "json" else rec.text(), file=out)
        return EXIT_OK
    if args.command == "degree":
        lam = parse_partition(args.lam)
        deg = T.projective_degree(T.tp_reduce(lam))
        print(deg, file=out)
        return EXIT_OK if deg == hilbert_degree(lam) else EXIT_FAIL
    if args.command == "table":
        if args.d > WARN_D:
            print(f"warning: d={args.d} is beyond the tested range", file=sys.stderr)
        recs = run_table(args.d)
        if args.format == "json":
            print("[" + ",".join(r.to_json() for r in recs) + "]", file=out)
        else:
            for r in recs:
                print(r.text(), file=out)
        return EXIT_OK
    if args.command == "moduli":
        if args.bound is not None and args.bound < 0:
            raise UsageError("bound must be nonnegative")
        pres = run_moduli(args.d, args.space, args.bound)
        if args.format == "json":
            print(json.dumps(presentation_obj(pres), separators=(",", ":")), file=out)
        else:
            print(format_presentation(pres), file=out)
        return EXIT_OK if pres.verified else EXIT_FAIL
    if args.command == "verify":
        if args.jobs < 1:
            raise UsageError("jobs must be positive")
        if args.max_d > WARN_D:
            print(f"warning: max_d={args.max_d}; the naive method has prod(e_i+1) terms "
                  "per partition and the run may be slow", file=sys.stderr)
        report = run_verify(args.max_d, args.suite, args.jobs)
        for c in report.failed:
            print(f"FAIL {c.name}: {c.detail}", file=out)
        print(json.dumps(report.summary(), separators=(",", ":")), file=out)
        return EXIT_OK if report.ok else EXIT_FAIL
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args, out)
    except (UsageError, M.UnsupportedPresentation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
