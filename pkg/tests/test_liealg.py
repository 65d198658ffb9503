import json

import pytest
from hypothesis import given, strategies as st

from modvoa.liealg import (AffineAlgebra, FiniteLieAlgebra, StructureConstants, VirasoroAlgebra,
                           ad_power, ad_solve_p_map, affine_bracket, hasse_action, jacobson_terms,
                           load_structure_file, sl2_structure, structure_from_dict, vir_bracket,
                           vir_element, verify_b_module_lie, verify_restricted_axioms)

P = 3


def vir_oracle(m, n, p):
    """(m-n) L_{m+n} + (m^3 - m)/12 d_{m+n,0} c: divide by 6 over Z, then halve mod p."""
    out = {}
    if (m - n) % p:
        out[("L", m + n)] = (m - n) % p
    if m + n == 0:
        assert (m ** 3 - m) % 6 == 0
        val = (m ** 3 - m) // 6 * pow(2, -1, p) % p
        if val:
            out[("c",)] = val
    return out


@given(st.integers(-12, 12), st.integers(-12, 12), st.sampled_from([3, 5, 7]))
def test_virasoro_bracket_matches_closed_form(m, n, p):
    assert VirasoroAlgebra(p).bracket_gens(("L", m), ("L", n)) == vir_oracle(m, n, p)


def test_virasoro_example_bracket():
    x, y = vir_element(3, {2: 1}), vir_element(3, {-2: 1})
    assert vir_bracket(x, y) == vir_element(3, {0: 1, "c": 2})


def test_ad_power_example():
    a = VirasoroAlgebra(3)
    x, y = vir_element(3, {3: 1}, a), vir_element(3, {1: 1}, a)
    assert ad_power(x, 3, y) == vir_element(3, {10: -1}, a)


small = st.integers(-5, 5)


@given(small, small, small)
def test_virasoro_jacobi(a, b, c):
    alg = VirasoroAlgebra(5)
    x, y, z = ({("L", n): 1} for n in (a, b, c))
    total = {}
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        for k, val in alg.bracket(u, alg.bracket(v, w)).items():
            total[k] = (total.get(k, 0) + val) % 5
    assert not any(total.values())


@given(small, small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_affine_bracket_antisymmetric(m, n, i, j, p_idx):
    p = (3, 5, 7)[p_idx]
    alg = AffineAlgebra(sl2_structure(p))
    lhs = alg.bracket_gens(("a", m, i), ("a", n, j))
    rhs = {k: (-v) % p for k, v in alg.bracket_gens(("a", n, j), ("a", m, i)).items()}
    assert lhs == rhs


def test_affine_central_term_has_mode_factor():
    alg = AffineAlgebra(sl2_structure(5))
    e, f = alg.gen("e", 2), alg.gen("f", -2)
    assert alg.bracket_gens(e, f) == {("a", 0, 2): 1, ("k",): 2}


def test_sl2_structure_is_valid(prime):
    assert sl2_structure(prime).validate() == []


def test_corrupted_p_map_fails_axiom_one():
    s = sl2_structure(3, p_map={0: [], 1: [], 2: [(0, 1)]})
    report = verify_restricted_axioms(s, {"random": 5, "seed": 1})
    assert not report.ok
    assert report.failures[0].witness is not None


@pytest.mark.parametrize("p", [3, 5])
def test_restricted_axioms_sl2(p):
    assert verify_restricted_axioms(sl2_structure(p), {"random": 10, "seed": 0}).ok


def test_restricted_axioms_virasoro():
    assert verify_restricted_axioms(VirasoroAlgebra(3), {"window": (-5, 5), "random": 5, "seed": 0}).ok


def test_p_map_of_sums_matches_ad_solution():
    # for sl2 (trivial centre) the p-map of any x is the unique y with ad y = (ad x)^p
    s = sl2_structure(5)
    g = FiniteLieAlgebra(s)
    for vec in ({0: 1, 1: 1}, {0: 2, 2: 3}, {0: 1, 1: 4, 2: 2}):
        x = {("x", i): c for i, c in vec.items()}
        expected = ad_solve_p_map(s, vec)
        got = {k[1]: v for k, v in g.p_map_element(x).items()}
        assert got == expected


def test_jacobson_terms_vanish_for_commuting_elements():
    g = FiniteLieAlgebra(sl2_structure(3))
    assert all(not s for s in jacobson_terms(g, {("x", 2): 1}, {("x", 2): 2}))


def test_hasse_action_virasoro():
    x = vir_element(3, {-2: 1})
    # D^(1) L_{-2} = -binom(-1, 1) L_{-3} = L_{-3}
    assert hasse_action(1, x) == vir_element(3, {-3: 1})


def test_b_module_compatibility():
    assert verify_b_module_lie(VirasoroAlgebra(3), {"window": (-4, 4), "kmax": 4}).ok
    assert verify_b_module_lie(AffineAlgebra(sl2_structure(3)), {"window": (-3, 3), "kmax": 4}).ok


def test_structure_file_round_trip(tmp_path):
    s = sl2_structure(5)
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(s.to_dict()))
    loaded = load_structure_file(path)
    assert loaded.names == s.names and loaded.table == s.table and loaded.p_map == s.p_map


def test_structure_validation_rejects_bad_jacobi():
    data = sl2_structure(3).to_dict()
    data["bracket"] = [[0, 1, [[2, 1]]], [2, 0, [[0, 1]]], [2, 1, [[1, -2]]]]
    with pytest.raises(ValueError):
        structure_from_dict(data)


def test_mixing_algebras_is_rejected():
    x = vir_element(3, {1: 1})
    y = vir_element(5, {1: 1})
    with pytest.raises(ValueError):
        vir_bracket(x, y)
    a = AffineAlgebra(sl2_structure(3))
    from modvoa.liealg import LieElement
    with pytest.raises((TypeError, ValueError)):
        affine_bracket(LieElement(a, {("a", 1, 0): 1}), x)
