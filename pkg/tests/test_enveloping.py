import random

import pytest
from hypothesis import given, strategies as st

from modvoa.enveloping import (EnvelopingAlgebra, RestrictedEnveloping, UEAElement,
                               cmn_identity_check, cmn_multiset_check, commutator, is_central,
                               multiset_maps)
from modvoa.liealg import FiniteLieAlgebra, VirasoroAlgebra, sl2_structure
from modvoa.suites import centrality_report, random_vir_elements

U3 = EnvelopingAlgebra(VirasoroAlgebra(3))
words = st.lists(st.integers(-4, 4), min_size=0, max_size=5)


def L(n):
    return ("L", n)


def test_straighten_example():
    got = U3.straighten((L(2), L(-2)))
    assert got == U3.straighten((L(-2), L(2))) + U3.gen(L(0)) + U3.gen(("c",)) * 2


@given(words, words)
def test_straightening_is_multiplicative(a, b):
    wa, wb = tuple(map(L, a)), tuple(map(L, b))
    assert U3.straighten(wa + wb) == U3.straighten(wa) * U3.straighten(wb)


@given(words, words, words)
def test_associativity(a, b, c):
    x, y, z = (U3.straighten(tuple(map(L, w))) for w in (a, b, c))
    assert (x * y) * z == x * (y * z)


@given(words)
def test_normal_form_is_sorted(a):
    for mono in U3.straighten(tuple(map(L, a))).terms:
        assert list(mono) == sorted(mono)


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_commutator_of_generators_is_bracket(m, n):
    lhs = commutator(U3.gen(L(m)), U3.gen(L(n)))
    rhs = UEAElement(U3, {(g,): c for g, c in U3.lie.bracket_gens(L(m), L(n)).items()})
    assert lhs == rhs


def test_pcenter_is_central_on_window():
    z = U3.straighten((L(-3),) * 3) - U3.gen(L(-9))
    ok, witness = is_central(z, [L(s) for s in range(-6, 7)])
    assert ok, witness
    ok, witness = is_central(U3.straighten((L(-3),) * 3), [L(s) for s in range(-6, 7)])
    assert not ok and witness is not None


def test_centrality_report():
    assert centrality_report(3, [2, 3]).ok


def test_cmn_identity_and_multisets():
    rng = random.Random(4)
    for _ in range(3):
        assert cmn_identity_check(random_vir_elements(U3, 3, rng)).ok
    r = cmn_multiset_check(random_vir_elements(U3, 2, rng), [2, 1])
    assert r.ok
    with pytest.raises(ValueError):
        cmn_multiset_check(random_vir_elements(U3, 2, rng), [1, 1])


def test_multiset_maps_count():
    assert len(multiset_maps([2, 1])) == 3
    assert len(multiset_maps([2, 2, 1])) == 30


@pytest.mark.parametrize("p", [3, 5])
def test_restricted_enveloping_relations(p):
    u = RestrictedEnveloping(sl2_structure(p))
    assert len(u.basis()) == u.dimension == p ** 3
    assert not u.power(u.gen("e"), p)
    assert not u.power(u.gen("f"), p)
    assert u.power(u.gen("h"), p) == u.gen("h")


def test_restricted_enveloping_associative():
    u = RestrictedEnveloping(sl2_structure(3))
    rng = random.Random(0)
    basis = u.basis()
    for _ in range(20):
        a, b, c = ({rng.choice(basis): rng.randrange(1, 3)} for _ in range(3))
        assert u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c))


def test_finite_uea_over_sl2():
    U = EnvelopingAlgebra(FiniteLieAlgebra(sl2_structure(5)))
    e, f, h = (U.gen(("x", i)) for i in range(3))
    assert commutator(e, f) == h
    assert commutator(h, e) == e * 2
    casimir = e * f + f * e + h * h * pow(2, -1, 5)
    ok, _ = is_central(casimir, [("x", i) for i in range(3)])
    assert ok
