"""Acceptance criteria 1-14, each run at its stated parameters and time limit.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for a
PASS/FAIL line per criterion.
"""
import io
import json
import sys
import time
from contextlib import redirect_stdout

import pytest

from modvoa.c2 import affine_v0, verify_c2_cofinite, virasoro_v0
from modvoa.cli import main as cli_main
from modvoa.enveloping import EnvelopingAlgebra, cmn_identity_check, cmn_multiset_check
from modvoa.liealg import VirasoroAlgebra, sl2_structure, verify_restricted_axioms
from modvoa.modes import check_power_field, check_virasoro_pcenter_field
from modvoa.scalars import verify_appendix_identities, verify_lucas_congruences
from modvoa.suites import axiom_report, centrality_report, random_vir_elements, singular_vector_report
from modvoa.vacuum import (IdealDescription, affine_vacuum, build_graded_module, ideal_graded_span,
                           virasoro_vacuum)
from modvoa.zhu import (ZhuPolyVir, classify_irreducibles_u_sl2, omega_W_action_check, reduce_vir,
                        sl2_irreducible_action, verify_zhu_affine, verify_zhu_vir)


def _all_ok(reports):
    bad = [(r.suite, c.name) for r in reports for c in r.failures]
    return not bad, bad[:3]


def criterion_1():
    return _all_ok([verify_appendix_identities(p, range(-12, 13), range(-12, 13), range(0, 11))
                    for p in (3, 5, 7)])


def criterion_2():
    return _all_ok([verify_lucas_congruences(p, 25, 25) for p in (3, 5, 7)])


def criterion_3():
    reports = [verify_restricted_axioms(VirasoroAlgebra(p), {"window": (-8, 8), "random": 10, "seed": 0})
               for p in (3, 5, 7)]
    reports += [verify_restricted_axioms(sl2_structure(p), {"random": 25, "seed": 0}) for p in (3, 5)]
    return _all_ok(reports)


def criterion_4():
    return _all_ok([centrality_report(3, [2, 3, 4]), centrality_report(5, [2])])


def criterion_5():
    import random
    rng = random.Random(0)
    U3 = EnvelopingAlgebra(VirasoroAlgebra(3))
    U5 = EnvelopingAlgebra(VirasoroAlgebra(5))
    reports = [cmn_identity_check(random_vir_elements(U3, 3, rng)) for _ in range(25)]
    reports.append(cmn_multiset_check(random_vir_elements(U3, 2, rng), [2, 1]))
    reports.append(cmn_multiset_check(random_vir_elements(U5, 2, rng), [4, 1]))
    return _all_ok(reports)


def criterion_6():
    reports = []
    for c in (0, 1, 2):
        V = virasoro_vacuum(3, c, 9)
        probes = [{k: 1} for d in range(10) for k in V.basis(d)]
        for n in (2, 3):
            reports.append(check_virasoro_pcenter_field(n, V, 9, probes))
    ok, bad = _all_ok(reports)
    counted = sum(r.checks[0].params["coefficients"] for r in reports)
    return ok and counted == 3 * 2 * 30 * 19, bad or {"coefficients": counted}


def criterion_7():
    reports = [verify_zhu_vir(3, 0, 4), verify_zhu_vir(5, 0, 2)]
    ok, bad = _all_ok(reports)
    # x^p - x straight from the polynomial ring
    for p in (3, 5):
        V = virasoro_vacuum(p, 0, 2 * p)
        f, cert = reduce_vir(V.vector((("L", -2),) * p))
        ok = ok and f == ZhuPolyVir([0, -1] + [0] * (p - 2) + [1], p) and cert.verify()
    return ok, bad


def criterion_8():
    return _all_ok([verify_zhu_affine(sl2_structure(3), level, 1) for level in (0, 1, 2)])


def criterion_9():
    reports = [classify_irreducibles_u_sl2(p) for p in (3, 5)]
    for lam in range(3):
        reports.append(omega_W_action_check(build_graded_module("virasoro", {"c": 0, "weight": lam}, 6, p=3)))
        W = build_graded_module("affine", {"level": 1, "action": sl2_irreducible_action(3, lam)}, 3,
                                structure=sl2_structure(3))
        reports.append(omega_W_action_check(W))
    ok, bad = _all_ok(reports)
    for p in (3, 5):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(["classify", "--p", str(p), "--output", "json"])
        rows = json.loads(buf.getvalue())["rows"]
        ok = ok and code == 0 and len(rows) == p and [r["weight"] for r in rows] == list(range(p))
    return ok, bad


def partitions_min_part_two(n):
    counts = [1] + [0] * n
    for part in range(2, n + 1):
        for d in range(part, n + 1):
            counts[d] += counts[d - part]
    return counts


def criterion_10():
    V = virasoro_vacuum(3, 0, 8)
    dims = V.dims()
    ok = dims == [1, 0, 1, 1, 2, 2, 4, 4, 7] == partitions_min_part_two(8)
    sub = ideal_graded_span(V, IdealDescription("I"))
    ok = ok and sub.dims[:6] == [0] * 6 and sub.dims[6] == 1
    return ok, {"V": dims, "I0": sub.dims}


def criterion_11():
    vir = verify_c2_cofinite(virasoro_v0(3, 0, 8))
    aff = [verify_c2_cofinite(affine_v0(sl2_structure(3), level, 4)) for level in (0, 1, 2)]
    ok, bad = _all_ok([vir] + aff)
    ok = ok and vir.params["quotient_dims"] == [1, 0, 1, 0, 1, 0, 0, 0, 0]
    names = {c.name for r in aff for c in r.checks}
    ok = ok and {"e-bar^3 = 0 in V0/C2", "f-bar^3 = 0 in V0/C2", "h-bar^3 = 0 in V0/C2"} <= names
    return ok, bad


def criterion_12():
    return _all_ok([singular_vector_report(sl2_structure(3), level) for level in (0, 1, 2)])


def criterion_13():
    reports = []
    for p in (3, 5):
        reports.append(axiom_report(virasoro_vacuum(p, 1, 9), 100, seed=p))
        reports.append(axiom_report(affine_vacuum(sl2_structure(p), 1, 6), 100, seed=p, cap=8))
    ok, bad = _all_ok(reports)
    skipped = {f"{'affine' if 'level' in r.params else 'virasoro'} p={r.params['p']}":
               sum(c.params["skipped_above_cap"] for c in r.checks) for r in reports}
    return ok, bad or {"skipped": skipped}


def criterion_14():
    V = affine_vacuum(sl2_structure(3), 1, 5)
    probes = [{k: 1} for d in range(6) for k in V.basis(d)]
    return _all_ok([check_power_field(V.vector((("a", -1, 0),)), 1, 6, probes)])


CRITERIA = [
    (1, "binomial identities (m-n)binom and cocycle", criterion_1, 10),
    (2, "Lucas digit congruences", criterion_2, 5),
    (3, "restrictedness (Virasoro window, sl2 axioms)", criterion_3, 30),
    (4, "centrality of the p-center in U(Vir)", criterion_4, 60),
    (5, "symmetrization identities over S_3, T(2,1), T(4,1)", criterion_5, 30),
    (6, "p-center field expansion on V_Vir(c,0)", criterion_6, 120),
    (7, "Zhu algebra of the Virasoro quotient", criterion_7, 120),
    (8, "Zhu algebra of the affine sl2 quotient", criterion_8, 60),
    (9, "classification and Omega actions", criterion_9, 60),
    (10, "graded dimensions against partition counts", criterion_10, 10),
    (11, "C2 quotients", criterion_11, 60),
    (12, "singular vectors e(-1)^(l+1) 1", criterion_12, 30),
    (13, "vertex algebra axiom property suite", criterion_13, 180),
    (14, "Frobenius field powers on V(1,0)", criterion_14, 60),
]


def run_criterion(number, title, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed < limit
    line = f"{'PASS' if passed else 'FAIL'}  criterion {number:2d}: {title}  ({elapsed:.2f}s, limit {limit}s)"
    return passed, line, detail


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    passed, line, detail = run_criterion(number, title, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert passed, detail


if __name__ == "__main__":
    failures = 0
    for entry in CRITERIA:
        passed, line, detail = run_criterion(*entry)
        print(line if passed else f"{line}  {detail}")
        failures += not passed
    sys.exit(1 if failures else 0)
