"""Command-line verification campaigns with JSON reports.

Reports go to stdout (or ``--out``); progress goes to stderr.  Exit codes:
0 every assertion passed, 1 some assertion failed, 2 usage error or refused
characteristic, 3 a resource guard refused the request.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import __version__
from .algebra import AlgebraElement, E_element, b_element, presentation_relations, standard_pairing
from .diagram import (
    MAX_ENUMERATION_N,
    concat,
    double_factorial_odd,
    enumerate_diagrams,
    from_normal_form,
    normal_form,
    sign,
)
from .ideals import (
    corollary_family,
    dominance_ideal_dim,
    family_report,
    ideal_equals,
    kernel_generators,
    kernel_ideal,
    membership,
    murphy_above,
    shapewise_family,
    sym_ideal,
)
from .rings import GF, QQ, IntPoly, Mod, Ring, is_prime
from .seminormal import property_suite
from .symgroup import (
    MAX_TABLE_N,
    MAX_TABLEAU_SIZE,
    GuardError as TableauGuardError,
    catalan_identity_values,
    hook_dim,
    kernel_index_count,
    parse_partition,
    std_tableaux,
)
from .tensor import CHAR_TWO_MESSAGE, CharacteristicTwoError, GuardError as TensorGuardError, element_vector, kernel

SCHEMA = 1
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
MAX_IDENTITY_M = 5000
MAX_BRAUER_IDEAL_N = 5
MAX_SEMINORMAL_N = 6

log = logging.getLogger("brauerann")


class ResourceGuard(Exception):
    """The requested size exceeds a documented limit."""


class UsageError(Exception):
    pass


def _plain(x):
    """Convert computed values into JSON-ready data in a deterministic way."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, Mod):
        return x.value
    if isinstance(x, IntPoly):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


@dataclass
class Report:
    command: str
    params: dict
    assertions: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    digests: list = field(default_factory=list)

    def check(self, name: str, expected, computed) -> bool:
        ok = expected == computed
        self.assertions.append({"name": name, "expected": _plain(expected),
                                "computed": _plain(computed), "pass": bool(ok)})
        log.info("%s %s", "pass" if ok else "FAIL", name)
        return ok

    @property
    def status(self) -> str:
        return "pass" if all(a["pass"] for a in self.assertions) else "fail"

    def digest(self) -> str:
        h = hashlib.sha256()
        for d in self.digests:
            h.update(d.encode())
        h.update(json.dumps(self.assertions, sort_keys=True).encode())
        return h.hexdigest()

    def to_dict(self, timing_ms: int | None = None) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "version": __version__,
            "params": _plain(self.params),
            "assertions": self.assertions,
            "results": _plain(self.results),
            "status": self.status,
            "digest": self.digest(),
        }
        if timing_ms is not None:
            out["timing_ms"] = timing_ms
        return out


def _diagram_digest(ds) -> str:
    return hashlib.sha256("\n".join(d.to_text() for d in ds).encode()).hexdigest()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ResourceGuard(message)


def _field_label(f: Ring) -> str:
    return f.tag


# --- subcommands --------------------------------------------------------------

def cmd_dims(args) -> Report:
    n = args.n
    _require(n <= MAX_ENUMERATION_N, f"dims: n = {n} exceeds the enumeration guard {MAX_ENUMERATION_N}")
    if n < 1:
        raise UsageError("dims needs n >= 1")
    rep = Report("dims", {"n": n})
    counts = {}
    for k in range(1, n + 1):
        ds = enumerate_diagrams(k)
        counts[k] = len(ds)
        rep.check(f"|Bd_{k}| = (2*{k}-1)!!", double_factorial_odd(k), len(ds))
        rep.check(f"distinct diagrams in B_{k}", len(ds), len(set(ds)))
        bad = sum(1 for D in ds if from_normal_form(normal_form(D)) != D)
        rep.check(f"normal form round trip failures in B_{k}", 0, bad)
        rep.digests.append(_diagram_digest(ds))
    rep.results = {"counts": counts, "algebra_rank": counts[n]}
    return rep


def cmd_relations(args) -> Report:
    n = args.n
    _require(n <= MAX_ENUMERATION_N, f"relations: n = {n} exceeds the guard {MAX_ENUMERATION_N}")
    if n < 1:
        raise UsageError("relations needs n >= 1")
    rep = Report("relations", {"n": n, "ring": "ZZ[x]"})
    for k in range(2, n + 1):
        for name, lhs, rhs in presentation_relations(k):
            rep.check(f"B_{k}: {name}", rhs.to_text(), lhs.to_text())
    rep.results = {"relations_checked": len(rep.assertions)}
    return rep


def cmd_specht(args) -> Report:
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _require(sum(lam) <= MAX_TABLEAU_SIZE, f"specht: |lambda| = {sum(lam)} exceeds {MAX_TABLEAU_SIZE}")
    rep = Report("specht", {"lambda": list(lam)})
    tabs = std_tableaux(lam)
    rep.check("hook length formula = #Std(lambda)", hook_dim(lam), len(tabs))
    rep.results = {"count": len(tabs)}
    if len(tabs) <= 50:
        rep.results["tableaux"] = ["\n".join(" ".join(map(str, r)) for r in t.rows) for t in tabs]
    rep.digests.append(hashlib.sha256(repr([t.rows for t in tabs]).encode()).hexdigest())
    return rep


def cmd_identity(args) -> Report:
    m = args.m
    if m < 1:
        raise UsageError("identity needs m >= 1")
    _require(m <= MAX_IDENTITY_M, f"identity: m = {m} exceeds {MAX_IDENTITY_M}")
    iv = catalan_identity_values(m)
    rep = Report("identity", {"m": m})
    rep.check("sum of squared two-row dimensions = #Std(m+1, m+1)", iv.rhs, iv.lhs)
    rep.check("#Std(m+1, m+1) = Catalan number C_{m+1}", iv.closed_form, iv.rhs)
    rep.check("closed-form two-row dimensions give the same sum", iv.lhs, iv.formula_lhs)
    rep.results = {"squares": list(iv.squares), "lhs": iv.lhs, "rhs": iv.rhs}
    return rep


def _kernel_args(args) -> tuple[int, int]:
    m, n = args.m, args.n
    if not n > m >= 1:
        raise UsageError(f"need n > m >= 1, got m={m}, n={n}")
    return m, n


def cmd_kernel(args) -> Report:
    m, n = _kernel_args(args)
    f = args.field
    rep = Report("kernel", {"m": m, "n": n, "field": _field_label(f), "large": args.large})
    K = kernel(m, n, f, large=args.large)
    rep.check("dim Ker phi = kernel_index_count(m, n)", kernel_index_count(m, n), K.rank)
    gens = kernel_generators(m, n, f, "all")
    for i, E in enumerate(gens):
        rep.check(f"E_{i} lies in Ker phi", True, K.contains(element_vector(E, f, m)))
    rep.results = {"kernel_dim": K.rank, "algebra_dim": K.dim}
    rep.digests.append(K.digest())
    return rep


def _brauer_guard(n: int, large: bool) -> None:
    _require(n <= MAX_BRAUER_IDEAL_N or (large and n <= MAX_ENUMERATION_N),
             f"n = {n} exceeds the ideal-closure guard {MAX_BRAUER_IDEAL_N}; pass --large")


def cmd_verify_main(args) -> Report:
    m, n = _kernel_args(args)
    _brauer_guard(n, args.large)
    f = args.field
    rep = Report("verify-main", {"m": m, "n": n, "field": _field_label(f), "large": args.large})
    K = kernel(m, n, f, large=args.large)
    top = (m + 1) // 2
    I = kernel_ideal(m, n, f, "top")
    J = kernel_ideal(m, n, f, "all")
    rep.check(f"dim <E_{top}> = dim Ker phi", K.rank, I.dim)
    rep.check(f"<E_{top}> = Ker phi", True, ideal_equals(I.span, K))
    rep.check(f"<E_0, ..., E_{top}> = Ker phi", True, ideal_equals(J.span, K))
    rep.check("closure is stable under the generators", True, bool(I.closed and J.closed))
    rep.results = {"kernel_dim": K.rank, "ideal_dim": I.dim, "multi_ideal_dim": J.dim,
                   "expected_dim": kernel_index_count(m, n), "closure": I.stats()}
    rep.digests += [K.digest(), I.span.digest()]
    return rep


def cmd_ideal_sym(args) -> Report:
    n, a = args.n, args.a
    if n < 1 or not 0 <= 2 * a <= n:
        raise UsageError(f"need n >= 1 and 0 <= a <= n/2, got n={n}, a={a}")
    _require(n <= MAX_TABLE_N, f"ideal-sym: n = {n} exceeds the guard {MAX_TABLE_N}")
    f = args.field
    rep = Report("ideal-sym", {"n": n, "a": a, "field": _field_label(f)})
    I = sym_ideal(n, a, f)
    rep.check("dim <X_(n-a,a)> = sum over dominating shapes of #Std^2", dominance_ideal_dim(n, a), I.dim)
    contained = all(I.contains(x) for x in murphy_above(n, a, f))
    rep.results = {"ideal_dim": I.dim, "murphy_rank": dominance_ideal_dim(n, a, f),
                   "contains_dominating_murphy": contained, "closure": I.stats()}
    rep.digests.append(I.span.digest())
    return rep


def cmd_seminormal(args) -> Report:
    n = args.n
    if n < 1:
        raise UsageError("seminormal needs n >= 1")
    _require(n <= MAX_SEMINORMAL_N, f"seminormal: n = {n} exceeds {MAX_SEMINORMAL_N}")
    rep = Report("seminormal", {"n": n, "field": "QQ"})
    for c in property_suite(n):
        rep.check(c.name, c.expected, c.computed)
    return rep


def cmd_basis_cor(args) -> Report:
    m = args.m
    if m < 1:
        raise UsageError("basis-cor needs m >= 1")
    _require(m <= 3 or (args.large and m + 1 <= MAX_BRAUER_IDEAL_N),
             f"basis-cor: m = {m} exceeds the guard 3 (4 with --large)")
    f = args.field
    rep = Report("basis-cor", {"m": m, "n": m + 1, "field": _field_label(f)})
    lit = family_report(corollary_family(m, f), m, f)
    rep.check("family lies in Ker phi", True, lit.in_kernel)
    rep.check("family size = dim Ker phi", lit.kernel_dim, lit.size)
    rep.check("family is linearly independent", lit.size, lit.rank)
    rep.check("family spans Ker phi", True, lit.spans_kernel)
    variant = family_report(shapewise_family(m, f), m, f)
    rep.results = {"family": lit.as_dict(), "shapewise_variant": variant.as_dict()}
    return rep


# --- campaign -----------------------------------------------------------------

GRID = ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4))


def _grid_fields() -> list[Ring]:
    return [QQ, GF(3), GF(5), GF(7)]


def sign_certification(max_n: int = 4) -> dict:
    """E_{a,b} against b(S_{a,b}, S'_{a,b}, beta_{a+b}) for a+b <= n <= max_n."""
    equal, opposite, total = 0, 0, 0
    for n in range(1, max_n + 1):
        for a in range(n + 1):
            for b in range(n + 1 - a):
                if a + b == 0:
                    continue
                E = E_element(a, b, n, QQ, 1)
                B = b_element(standard_pairing(a, b, n), n, QQ, 1)
                total += 1
                equal += E == B
                opposite += E == -B
    return {"cases": total, "equal": equal, "equal_up_to_sign": equal + opposite}


def sign_witness(n: int = 3):
    """First (D1, D2) in enumeration order with sign(D1 D2) != sign(D1) sign(D2)."""
    ds = enumerate_diagrams(n)
    for D1 in ds:
        for D2 in ds:
            D, _ = concat(D1, D2)
            if sign(D) != sign(D1) * sign(D2):
                return D1, D2, D
    return None


def cmd_campaign(args) -> Report:
    rep = Report("campaign", {"fields": ["QQ", "GF(3)", "GF(5)", "GF(7)"]})
    per: dict[str, list[bool]] = {}

    def note(crit: int, name: str, expected, computed) -> None:
        per.setdefault(str(crit), []).append(rep.check(f"[{crit}] {name}", expected, computed))

    log.info("criterion 1: diagram enumeration")
    for n in range(1, 6):
        ds = enumerate_diagrams(n)
        note(1, f"|Bd_{n}|", double_factorial_odd(n), len(ds))
        note(1, f"normal form round trip failures n={n}", 0,
             sum(1 for D in ds if from_normal_form(normal_form(D)) != D))

    log.info("criterion 2: presentation")
    bad = [f"B_{n}: {name}" for n in range(2, 6) for name, l, r in presentation_relations(n) if l != r]
    note(2, "failing relations over ZZ[x], n <= 5", [], bad)

    log.info("criterion 3: sign certification")
    sc = sign_certification(4)
    note(3, "E_{a,b} = b(S_{a,b}, S'_{a,b}, beta_{a+b}) cases, a+b <= n <= 4", sc["cases"], sc["equal"])
    rep.results["sign_certification"] = sc

    fields = _grid_fields()
    log.info("criteria 4-6: kernel grid")
    for m, n in GRID:
        for f in fields:
            K = kernel(m, n, f)
            note(4, f"dim Ker phi m={m} n={n} {f.tag}", kernel_index_count(m, n), K.rank)
            I = kernel_ideal(m, n, f, "top")
            note(5, f"<E_top> = Ker phi m={m} n={n} {f.tag}", True, ideal_equals(I.span, K))
            J = kernel_ideal(m, n, f, "all")
            note(6, f"<E_0..E_top> = Ker phi m={m} n={n} {f.tag}", True, ideal_equals(J.span, K))

    log.info("criterion 7: symmetric group ideals")
    for n in range(1, 7):
        for a in range(n // 2 + 1):
            expected = dominance_ideal_dim(n, a)
            for f in fields:
                note(7, f"dim <X_(n-a,a)> n={n} a={a} {f.tag}", expected, sym_ideal(n, a, f).dim)

    log.info("criterion 8: Catalan-type identity")
    failures = [m for m in range(1, 51) if not catalan_identity_values(m).holds]
    note(8, "identity failures for 1 <= m <= 50", [], failures)
    note(8, "anchor m=2", 5, catalan_identity_values(2).lhs)
    note(8, "anchor m=3", 14, catalan_identity_values(3).lhs)

    log.info("criterion 9: seminormal suite")
    for n in range(1, 6):
        for c in property_suite(n):
            note(9, c.name, c.expected, c.computed)

    log.info("criterion 10: basis family")
    variants = {}
    for m in (1, 2, 3):
        r = family_report(corollary_family(m, QQ), m, QQ)
        note(10, f"family is a basis of Ker phi, m={m}", True, r.is_basis)
        note(10, f"family rank m={m}", r.kernel_dim, r.rank)
        variants[m] = family_report(shapewise_family(m, QQ), m, QQ).as_dict()
    rep.results["shapewise_variant"] = variants

    log.info("criterion 11: negative controls")
    refused = False
    try:
        kernel(1, 2, GF(2))
    except CharacteristicTwoError as exc:
        refused = "characteristic not equal to 2" in str(exc)
    note(11, "characteristic 2 refused", True, refused)
    I = kernel_ideal(2, 3, QQ, "top")
    note(11, "identity in <E_1> inside B_3(2)", False, membership(AlgebraElement.one(3, QQ, 2), I))
    w = sign_witness(3)
    note(11, "sign non-multiplicativity witness in B_3", True, w is not None)
    if w:
        rep.results["sign_witness"] = {"D1": w[0].to_text(), "D2": w[1].to_text(),
                                       "product": w[2].to_text()}

    rep.results["criteria"] = {k: ("pass" if all(v) else "fail") for k, v in per.items()}
    return rep


# --- argument parsing ---------------------------------------------------------

def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not a prime")
    return p


def _add_field(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--char", type=_prime, metavar="P", help="work over GF(P), P an odd prime")
    g.add_argument("--rational", action="store_true", help="work over QQ (default)")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="FILE", help="write the JSON report to FILE")
    p.add_argument("--timing", action="store_true", help="include timing_ms in the report")


COMMANDS: dict[str, Callable] = {
    "dims": cmd_dims,
    "relations": cmd_relations,
    "specht": cmd_specht,
    "identity": cmd_identity,
    "kernel": cmd_kernel,
    "verify-main": cmd_verify_main,
    "ideal-sym": cmd_ideal_sym,
    "seminormal": cmd_seminormal,
    "basis-cor": cmd_basis_cor,
    "campaign": cmd_campaign,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauerann", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="diagram counts and normal-form round trip")
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p = sub.add_parser("relations", help="presentation relations over ZZ[x]")
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p = sub.add_parser("specht", help="hook length formula against enumeration")
    p.add_argument("--lambda", dest="lam", required=True, metavar="a,b,..")
    _common(p)
    p = sub.add_parser("identity", help="sum of squared two-row dimensions")
    p.add_argument("--m", type=int, required=True)
    _common(p)
    for name, text in (("kernel", "dimension of the kernel of the tensor representation"),
                       ("verify-main", "kernel equals the ideal generated by E_i")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        _add_field(p)
        p.add_argument("--large", action="store_true", help="lift the size guards")
        _common(p)
    p = sub.add_parser("ideal-sym", help="ideal of KS_n generated by X_(n-a,a)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    _add_field(p)
    _common(p)
    p = sub.add_parser("seminormal", help="seminormal basis property suite over QQ")
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p = sub.add_parser("basis-cor", help="tableau-indexed basis of the kernel at n = m+1")
    p.add_argument("--m", type=int, required=True)
    _add_field(p)
    p.add_argument("--large", action="store_true", help="lift the size guards")
    _common(p)
    p = sub.add_parser("campaign", help="run the full verification grid")
    _common(p)
    return parser


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _refusal(command: str, message: str, status: str) -> dict:
    return {"schema": SCHEMA, "command": command, "version": __version__,
            "status": status, "error": message}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    out = getattr(args, "out", None)
    if hasattr(args, "char") or hasattr(args, "rational"):
        if args.char == 2:
            print(CHAR_TWO_MESSAGE, file=sys.stderr)
            _emit(_refusal(args.command, CHAR_TWO_MESSAGE, "refused"), out)
            return EXIT_USAGE
        args.field = GF(args.char) if args.char else QQ
    t0 = time.perf_counter()
    try:
        rep = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        _emit(_refusal(args.command, str(exc), "usage-error"), out)
        return EXIT_USAGE
    except CharacteristicTwoError as exc:
        print(str(exc), file=sys.stderr)
        _emit(_refusal(args.command, str(exc), "refused"), out)
        return EXIT_USAGE
    except (ResourceGuard, TensorGuardError, TableauGuardError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        _emit(_refusal(args.command, f"resource guard: {exc}", "guard"), out)
        return EXIT_GUARD
    timing = round((time.perf_counter() - t0) * 1000) if args.timing else None
    payload = rep.to_dict(timing)
    _emit(payload, out)
    print(f"{args.command}: {payload['status']}", file=sys.stderr)
    return EXIT_PASS if payload["status"] == "pass" else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
