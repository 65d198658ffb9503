import random

import pytest

from modvoa.liealg import sl2_structure
from modvoa.modes import vertex_operators
from modvoa.scalars import binom_mod
from modvoa.vacuum import ModuleVector, affine_vacuum, build_graded_module, virasoro_vacuum
from modvoa.zhu import (OVCertificate, ZhuPolyVir, circ, classify_irreducibles_u_sl2,
                        highest_weight_module_u_sl2, omega_W_action_check, reduce_affine,
                        reduce_vir, sl2_irreducible_action, star, verify_zhu_affine,
                        verify_zhu_vir, zhu_poly_vir)
from modvoa.enveloping import RestrictedEnveloping

V = virasoro_vacuum(3, 1, 9)
OMEGA = V.vector((("L", -2),))


def poly(*coeffs, p=3):
    return ZhuPolyVir(list(coeffs), p)


def test_polynomial_arithmetic():
    x = poly(0, 1)
    assert (x * x * x).mod_frobenius() == x
    assert poly(0, -1, 0, 1).divisible_by_frobenius()
    assert (poly(1, 1) + poly(2, 2)) == poly(0, 0)
    assert poly(1, 2, 1).evaluate(2) == 0


def test_small_reductions():
    assert reduce_vir(V.vector((("L", -3),)))[0] == poly(0, -2)
    assert reduce_vir(OMEGA)[0] == poly(0, 1)
    assert reduce_vir(V.vacuum())[0] == poly(1)
    f, cert = reduce_vir(V.vector((("L", -2), ("L", -2))))
    assert f == poly(0, 2, 1) and cert.verify()


def test_star_with_conformal_vector():
    assert reduce_vir(star(OMEGA, OMEGA))[0] == poly(0, 0, 1)


def test_circ_lies_in_kernel():
    for n in range(3):
        f, cert = reduce_vir(circ(OMEGA, n, OMEGA))
        assert f == poly() and cert.verify()
    with pytest.raises(ValueError):
        circ(OMEGA, -1, OMEGA)


def test_hasse_congruence():
    # D^(k) v = binom(-deg v, k) v modulo O(V)
    ops = vertex_operators(V)
    rng = random.Random(0)
    for _ in range(10):
        d = rng.randint(2, 5)
        key = rng.choice(V.basis(d))
        for k in range(1, 4):
            if d + k > V.max_degree:
                continue
            dv = ops.d_raw(k, {key: 1})
            expected = zhu_poly_vir(V, {key: 1}) * binom_mod(-d, k, 3)
            assert zhu_poly_vir(V, dv) == expected


def test_tampered_certificate_fails():
    _, cert = reduce_vir(V.vector((("L", -3),) * 3))
    assert cert.verify() and len(cert) > 0
    a, n, b, c = cert.terms[0]
    bad = OVCertificate(cert.module, [(a, n, b, c + 1)] + cert.terms[1:], cert.claimed)
    assert not bad.verify()


def test_affine_reduction_reverses_words():
    A = affine_vacuum(sl2_structure(3), 1, 4)
    image, cert = reduce_affine(A.vector((("a", -1, 0), ("a", -1, 1))))
    uea = image.algebra
    assert image == uea.straighten((("x", 1), ("x", 0)))
    assert cert.verify()
    image, cert = reduce_affine(A.vector((("a", -2, 0),)))
    assert image == uea.gen(("x", 0)) * -1 and cert.verify()


def test_zhu_suites():
    assert verify_zhu_vir(3, 0, 3, samples=5).ok
    for level in (0, 1, 2):
        assert verify_zhu_affine(sl2_structure(3), level, 1, samples=5).ok


@pytest.mark.parametrize("p", [3, 5])
def test_classification(p):
    report = classify_irreducibles_u_sl2(p)
    assert report.ok
    u = RestrictedEnveloping(sl2_structure(p))
    assert [highest_weight_module_u_sl2(u, lam)[0] for lam in range(p)] == list(range(1, p + 1))


def test_omega_action_on_quotients():
    for lam in range(3):
        W = build_graded_module("virasoro", {"c": 2, "weight": lam}, 5, p=3)
        assert omega_W_action_check(W).ok
    W = build_graded_module("affine", {"level": 2, "action": sl2_irreducible_action(3, 2)}, 2,
                            structure=sl2_structure(3))
    assert omega_W_action_check(W).ok


def test_irreducible_matrices_are_modules():
    from modvoa.vacuum import _check_action
    for lam in range(5):
        _check_action(sl2_structure(5), sl2_irreducible_action(5, lam))


def test_module_vector_input_type():
    assert isinstance(star(OMEGA, V.vacuum()), ModuleVector)
