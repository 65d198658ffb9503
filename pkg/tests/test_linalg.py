from itertools import product
from math import log

from hypothesis import given, strategies as st

from modvoa.linalg import RowSpace, kernel, rank, solve_combination

P = 3
vectors = st.lists(st.dictionaries(st.integers(0, 3), st.integers(1, P - 1), max_size=4),
                   min_size=0, max_size=4)


def brute_span(vecs, p):
    span = set()
    for coeffs in product(range(p), repeat=len(vecs)):
        out = [0] * 4
        for c, v in zip(coeffs, vecs):
            for k, x in v.items():
                out[k] = (out[k] + c * x) % p
        span.add(tuple(out))
    return span


@given(vectors)
def test_rank_matches_span_size(vecs):
    size = len(brute_span(vecs, P))
    assert P ** rank(vecs, P) == size


@given(vectors)
def test_kernel_combinations_vanish(vecs):
    ker = kernel(vecs, P)
    assert len(ker) == len(vecs) - rank(vecs, P)
    for combo in ker:
        out = {}
        for i, c in combo.items():
            for k, x in vecs[i].items():
                out[k] = (out.get(k, 0) + c * x) % P
        assert not any(out.values())


@given(vectors, st.dictionaries(st.integers(0, 3), st.integers(1, P - 1), max_size=4))
def test_solve_combination(vecs, target):
    sol = solve_combination(vecs, target, P)
    tup = tuple(target.get(k, 0) for k in range(4))
    assert (sol is not None) == (tup in brute_span(vecs, P))
    if sol is not None:
        out = {}
        for i, c in sol.items():
            for k, x in vecs[i].items():
                out[k] = (out.get(k, 0) + c * x) % P
        assert {k: v for k, v in out.items() if v} == target


def test_row_space_reduce_is_canonical():
    space = RowSpace(5)
    space.add({0: 1, 1: 2})
    space.add({1: 1, 2: 1})
    v = {0: 3, 2: 4}
    # v and v + (row combination) reduce to the same remainder
    shifted = {0: (3 + 1) % 5, 1: 2, 2: 4}
    assert space.reduce(v) == space.reduce(shifted)
    assert space.contains({0: 1, 1: 3, 2: 1})
    assert not space.add({0: 2, 1: 4})
    assert space.rank == 2
