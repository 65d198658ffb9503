from modvoa.c2 import (affine_v0, c2_quotient_algebra, c2_span, check_c2_ideal, verify_c2_cofinite,
                       virasoro_v0)
from modvoa.liealg import sl2_structure
from modvoa.modes import vertex_operators
from modvoa.vacuum import VACUUM, virasoro_vacuum


def test_low_degree_components_vanish():
    V = virasoro_vacuum(3, 0, 8)
    sub = c2_span(V)
    assert sub.dims[:3] == [0, 0, 0]
    # quotient: one class in each even degree
    dims = [a - b for a, b in zip(V.dims(), sub.dims)]
    assert dims == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_hasse_derivatives_lie_in_c2():
    V = virasoro_vacuum(5, 1, 8)
    sub = c2_span(V)
    ops = vertex_operators(V)
    for d in range(2, 6):
        for key in V.basis(d):
            for k in range(1, 8 - d + 1):
                assert sub.contains(ops.d_raw(k, {key: 1}))


def test_quotient_algebra_properties():
    V = virasoro_vacuum(3, 1, 8)
    quotient, report = c2_quotient_algebra(V)
    assert report.ok
    omega = {((("L", -2),), 0): 1}
    for k in range(5):
        assert quotient.power(omega, k)
    assert check_c2_ideal(V, quotient.sub).ok


def test_virasoro_v0_cofinite():
    report = verify_c2_cofinite(virasoro_v0(3, 0, 8))
    assert report.ok
    assert report.params["quotient_dims"] == [1, 0, 1, 0, 1, 0, 0, 0, 0]


def test_affine_v0_cofinite():
    for level in range(3):
        report = verify_c2_cofinite(affine_v0(sl2_structure(3), level, 4))
        assert report.ok
        assert report.params["quotient_dims"] == [1, 3, 6, 7, 6]


def test_insufficient_truncation_is_rejected():
    import pytest
    with pytest.raises(ValueError):
        verify_c2_cofinite(virasoro_v0(3, 0, 5))
