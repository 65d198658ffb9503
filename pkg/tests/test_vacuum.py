import pytest

from modvoa.liealg import sl2_structure
from modvoa.vacuum import (VACUUM, IdealDescription, ModuleVector, TruncationConfig,
                           TruncationOverflow, act, affine_vacuum, build_graded_module,
                           ideal_graded_span, maximal_graded_submodule,
                           maximal_submodule_by_monomials, omega_membership, virasoro_vacuum,
                           virasoro_verma)


def partition_counts(n, min_part, colours=1):
    """Coefficients of prod_{k >= min_part} (1 - q^k)^(-colours) up to q^n."""
    coeffs = [1] + [0] * n
    for part in range(min_part, n + 1):
        for _ in range(colours):
            for d in range(part, n + 1):
                coeffs[d] += coeffs[d - part]
    return coeffs


def test_partition_oracle_sanity():
    assert partition_counts(8, 2) == [1, 0, 1, 1, 2, 2, 4, 4, 7]
    assert partition_counts(6, 1) == [1, 1, 2, 3, 5, 7, 11]


@pytest.mark.parametrize("p,c", [(3, 0), (5, 2), (7, 1)])
def test_virasoro_vacuum_dims(p, c):
    assert virasoro_vacuum(p, c, 12).dims() == partition_counts(12, 2)


def test_verma_dims():
    assert virasoro_verma(5, 1, 2, 8).dims() == partition_counts(8, 1)


def test_affine_vacuum_dims():
    assert affine_vacuum(sl2_structure(3), 1, 5).dims() == partition_counts(5, 1, colours=3)


def test_central_charge_in_l2_omega():
    V = virasoro_vacuum(3, 1, 4)
    omega = V.vector((("L", -2),))
    assert V.act(("L", 2), omega) == V.vacuum() * 2


def test_truncation_overflow_only_at_public_api():
    V = virasoro_vacuum(3, 0, 4)
    omega = V.vector((("L", -2),))
    with pytest.raises(TruncationOverflow):
        V.act(("L", -3), omega)
    # raw action is exact at any degree
    assert V.act_raw(("L", -3), omega.terms)
    with pytest.raises(TruncationOverflow):
        act(("L", -2), omega, TruncationConfig(3))


def test_virasoro_ideal_dims():
    V = virasoro_vacuum(3, 0, 9)
    sub = ideal_graded_span(V, IdealDescription("I"))
    assert sub.dims == [0, 0, 0, 0, 0, 0, 1, 0, 1, 2]
    assert sub.contains(V.apply_word_raw((("L", -2),) * 3, {VACUUM: 1}))


def test_nongraded_ideal_is_flagged():
    V = virasoro_vacuum(3, 0, 6)
    ideal = IdealDescription("I", mu=1)
    assert not ideal.is_graded()
    sub = ideal_graded_span(V, ideal)
    assert not sub.graded and sum(sub.dims) == 1


@pytest.mark.parametrize("level", [0, 1, 2])
def test_affine_radical_matches_oracle(level):
    V = affine_vacuum(sl2_structure(3), level, 3)
    assert maximal_graded_submodule(V).dims == maximal_submodule_by_monomials(V, 3)


def test_affine_radical_at_level_one():
    V = affine_vacuum(sl2_structure(3), 1, 4)
    J = maximal_graded_submodule(V)
    assert J.dims == [0, 0, 5, 15, 38]
    assert J.contains(V.apply_word_raw((("a", -1, 0),) * 2, {VACUUM: 1}))


def test_verma_radical_matches_oracle():
    V = virasoro_verma(5, 1, 0, 6)
    assert maximal_graded_submodule(V).dims == maximal_submodule_by_monomials(V, 6)


def test_virasoro_vacuum_radical_at_c0():
    # at c = 0 the conformal vector itself is singular
    V = virasoro_vacuum(3, 0, 6)
    J = maximal_graded_submodule(V)
    assert J.dims == [0] + V.dims()[1:]
    assert omega_membership(V.vector((("L", -2),)))


def test_build_graded_module_rejects_non_module():
    bad = {0: [[0, 1], [0, 0]], 1: [[0, 0], [1, 0]], 2: [[1, 0], [0, 1]]}
    with pytest.raises(ValueError):
        build_graded_module("affine", {"level": 0, "action": bad}, 2, structure=sl2_structure(3))


def test_module_vector_arithmetic():
    V = virasoro_vacuum(5, 0, 6)
    a = V.vector((("L", -2),))
    b = V.vector((("L", -3),))
    assert (a + b) - b == a
    assert (a * 5).terms == {}
    assert a.degree() == 2 and a.is_homogeneous()
    assert not (a + b).is_homogeneous()
    with pytest.raises(ValueError):
        a + virasoro_vacuum(3, 0, 6).vector((("L", -2),))
    assert isinstance(a, ModuleVector)
