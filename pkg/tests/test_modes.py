import pytest

from modvoa.liealg import sl2_structure
from modvoa.modes import (check_commutator, check_conjugation, check_pcenter_hasse_values,
                          check_jacobi_coefficient, check_power_field, check_skew_symmetry,
                          check_virasoro_pcenter_field, d_operator, hasse_on_pbw, mode_act,
                          pcenter_state, vertex_operators)
from modvoa.vacuum import VACUUM, TruncationOverflow, affine_vacuum, virasoro_vacuum, virasoro_verma

V = virasoro_vacuum(3, 1, 8)
A = affine_vacuum(sl2_structure(3), 1, 5)
OMEGA = V.vector((("L", -2),))


def probes(module, top):
    return [{k: 1} for d in range(top + 1) for k in module.basis(d)]


def test_conformal_vector_modes_are_virasoro_generators():
    ops = vertex_operators(V)
    for w in probes(V, 5):
        for n in range(-3, 5):
            assert ops.mode_raw(OMEGA.terms, n, w) == V.act_raw(("L", n - 1), w)


def test_current_modes_are_affine_generators():
    ops = vertex_operators(A)
    for i in range(3):
        state = {((("a", -1, i),), 0): 1}
        for w in probes(A, 3):
            for n in range(-2, 4):
                assert ops.mode_raw(state, n, w) == A.act_raw(("a", n, i), w)


def test_vacuum_and_creation():
    ops = vertex_operators(V)
    for w in probes(V, 6):
        for n in range(-4, 4):
            assert ops.mode_raw({VACUUM: 1}, n, w) == (w if n == -1 else {})
        assert ops.mode_raw(w, -1, {VACUUM: 1}) == w


def test_hasse_derivative_of_conformal_vector():
    assert d_operator(1, OMEGA) == V.vector((("L", -3),))
    ops = vertex_operators(V)
    for w in probes(V, 5):
        for k in range(0, 4):
            assert ops.d_raw(k, w) == hasse_on_pbw(V, k, w)


def test_mode_overflow_is_reported():
    with pytest.raises(TruncationOverflow):
        mode_act(OMEGA, -6, OMEGA)


def test_module_modes_on_verma():
    W = virasoro_verma(3, 1, 2, 5)
    ops = vertex_operators(virasoro_vacuum(3, 1, 5, algebra=W.lie), W)
    top = {((), 0): 1}
    assert ops.mode_raw(OMEGA.terms, 1, top) == {((), 0): 2}


@pytest.mark.parametrize("module", [V, A], ids=["virasoro", "affine"])
def test_axiom_checks_on_low_degree_states(module):
    basis = [k for d in range(1, 4) for k in module.basis(d)][:3]
    u = module.vector(basis[0][0])
    v = module.vector(basis[-1][0])
    w = module.vector(basis[1][0])
    window = (-2, 2)
    assert check_skew_symmetry(u, v, window).ok
    assert check_conjugation(u, window, 2, [w.terms]).ok
    assert check_commutator(u, v, window, [w.terms]).ok
    assert check_jacobi_coefficient(u, v, w, window).ok


def test_power_field_for_currents():
    e = A.vector((("a", -1, 0),))
    assert check_power_field(e, 1, 4, probes(A, 3)).ok
    assert check_power_field(e, 2, 4, probes(A, 2)).ok


def test_power_field_precondition_fails_for_conformal_vector():
    report = check_power_field(OMEGA, 1, 2, probes(V, 2))
    assert not report.ok


def test_pcenter_field_and_hasse_values():
    W = virasoro_vacuum(3, 2, 6)
    assert check_virasoro_pcenter_field(2, W, 6, probes(W, 6)).ok
    assert check_pcenter_hasse_values(2, 9, W).ok
    assert check_pcenter_hasse_values(3, 6, W).ok


def test_pcenter_state_at_multiple_of_p():
    W = virasoro_vacuum(3, 0, 9)
    state = pcenter_state(W, 3)
    assert W.vector((("L", -9),)).terms.keys() <= state.keys()
