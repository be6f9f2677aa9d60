"""One test per acceptance criterion.

Expected values are frozen constants computed from tableau counts and closed
forms, never from the code paths under test.  Each test prints a single
pass/fail line, and the terminal summary repeats them.
"""
import time

from brauerann.algebra import AlgebraElement, E_element, b_element, presentation_relations, standard_pairing
from brauerann.cli import run
from brauerann.diagram import concat, enumerate_diagrams, from_normal_form, normal_form, sign
from brauerann.ideals import corollary_family, family_report, ideal_equals, kernel_ideal, membership, sym_ideal
from brauerann.rings import GF, QQ
from brauerann.seminormal import property_suite
from brauerann.symgroup import catalan_identity_values
from brauerann.tensor import kernel

FIELDS = [QQ, GF(3), GF(5), GF(7)]
KERNEL_DIMS = {(1, 2): 2, (1, 3): 14, (2, 3): 5, (2, 4): 70, (3, 4): 14}
DIAGRAM_COUNTS = {1: 1, 2: 3, 3: 15, 4: 105, 5: 945}
SYM_DIMS = {(1, 0): 1, (2, 0): 1, (2, 1): 2, (3, 0): 1, (3, 1): 5, (4, 0): 1, (4, 1): 10, (4, 2): 14,
            (5, 0): 1, (5, 1): 17, (5, 2): 42, (6, 0): 1, (6, 1): 26, (6, 2): 107, (6, 3): 132}


def _catalan(k):
    c = 1
    for j in range(k):
        c = c * 2 * (2 * j + 1) // (j + 2)
    return c


def _verdict(number, ok, elapsed, budget, detail=""):
    ok = ok and elapsed < budget
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  ({elapsed:.1f}s of {budget}s) {detail}"
    print(line)
    assert ok, line


def test_criterion01_structure():
    t0 = time.perf_counter()
    sizes = {n: len(enumerate_diagrams(n)) for n in DIAGRAM_COUNTS}
    broken = sum(1 for n in DIAGRAM_COUNTS for D in enumerate_diagrams(n)
                 if from_normal_form(normal_form(D)) != D)
    _verdict(1, sizes == DIAGRAM_COUNTS and broken == 0, time.perf_counter() - t0, 10,
             f"sizes={sizes} round-trip failures={broken}")


def test_criterion02_presentation():
    t0 = time.perf_counter()
    bad = [f"n={n} {name}" for n in range(1, 6) for name, lhs, rhs in presentation_relations(n) if lhs != rhs]
    _verdict(2, bad == [], time.perf_counter() - t0, 10, f"failing={bad}")


def test_criterion03_sign_certification():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 5):
        for a in range(n + 1):
            for b in range(n + 1 - a):
                if a + b == 0:
                    continue
                if E_element(a, b, n, QQ, 1) != b_element(standard_pairing(a, b, n), n, QQ, 1):
                    bad.append((a, b, n))
    _verdict(3, bad == [], time.perf_counter() - t0, 30, f"unequal (a,b,n)={bad}")


def test_criterion04_kernel_dimensions():
    t0 = time.perf_counter()
    got = {(m, n, f.tag): kernel(m, n, f).rank for (m, n) in KERNEL_DIMS for f in FIELDS}
    want = {(m, n, f.tag): d for (m, n), d in KERNEL_DIMS.items() for f in FIELDS}
    bad = {k: v for k, v in got.items() if want[k] != v}
    _verdict(4, bad == {}, time.perf_counter() - t0, 120, f"mismatches={bad}")


def _kernel_equalities(which):
    bad = []
    for m, n in KERNEL_DIMS:
        for f in FIELDS:
            if not ideal_equals(kernel_ideal(m, n, f, which), kernel(m, n, f)):
                bad.append((m, n, f.tag))
    return bad


def test_criterion05_main_theorem():
    t0 = time.perf_counter()
    bad = _kernel_equalities("top")
    _verdict(5, bad == [], time.perf_counter() - t0, 180, f"unequal={bad}")


def test_criterion06_all_E_generate_kernel():
    t0 = time.perf_counter()
    bad = _kernel_equalities("all")
    _verdict(6, bad == [], time.perf_counter() - t0, 180, f"unequal={bad}")


def test_criterion07_symmetric_group_ideals():
    t0 = time.perf_counter()
    bad = {}
    for (n, a), want in SYM_DIMS.items():
        for f in FIELDS:
            got = sym_ideal(n, a, f).dim
            if got != want:
                bad[(n, a, f.tag)] = (want, got)
    _verdict(7, bad == {}, time.perf_counter() - t0, 120, f"(expected, computed)={bad}")


def test_criterion08_catalan_identity():
    t0 = time.perf_counter()
    bad = []
    for m in range(1, 51):
        v = catalan_identity_values(m)
        if not (v.lhs == v.rhs == _catalan(m + 1)):
            bad.append(m)
    anchors = (catalan_identity_values(2).lhs, catalan_identity_values(3).lhs)
    _verdict(8, bad == [] and anchors == (5, 14), time.perf_counter() - t0, 1,
             f"failures={bad} anchors={anchors}")


def test_criterion09_seminormal_suite():
    t0 = time.perf_counter()
    bad = [c.name for n in range(1, 6) for c in property_suite(n) if not c.passed]
    _verdict(9, bad == [], time.perf_counter() - t0, 120, f"failing={bad}")


def test_criterion10_tableau_basis_of_kernel():
    t0 = time.perf_counter()
    reports = {m: family_report(corollary_family(m, QQ), m, QQ) for m in (1, 2, 3)}
    bad = {m: r.as_dict() for m, r in reports.items() if not r.is_basis}
    _verdict(10, bad == {}, time.perf_counter() - t0, 60, f"not a basis={bad}")


def test_criterion11_negative_controls(capsys):
    t0 = time.perf_counter()
    code = run(["kernel", "--m", "1", "--n", "2", "--char", "2"])
    err = capsys.readouterr().err
    refused = code == 2 and "characteristic not equal to 2" in err
    proper = not membership(AlgebraElement.one(3, QQ, 2), kernel_ideal(2, 3, QQ))
    ds = enumerate_diagrams(3)
    witness = next(((D1, D2) for D1 in ds for D2 in ds
                    if sign(concat(D1, D2)[0]) != sign(D1) * sign(D2)), None)
    _verdict(11, refused and proper and witness is not None, time.perf_counter() - t0, 10,
             f"refused={refused} proper={proper} witness={witness and [d.to_text() for d in witness]}")
