import random

import pytest
from hypothesis import given, settings, strategies as st

from hivering.hive import BoundarySpec, HiveError, enumerate_hives
from hivering.ring import (
    RingElement,
    candidate_weights,
    det_shift,
    dual_weight,
    fundamental_weight,
    peel_all,
    peel_strip,
    pieri_expand,
    product_expand,
    structure_constant,
)

TENSOR_SQUARE = {(4, 2, 0): 1, (4, 1, 1): 1, (3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1}


def dominant(n, lo, hi):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_tensor_square():
    assert product_expand((2, 1, 0), (2, 1, 0)) == TENSOR_SQUARE


def test_iteration_order_descending():
    assert list(product_expand((2, 1, 0), (2, 1, 0))) == [(4, 2, 0), (4, 1, 1), (3, 3, 0), (3, 2, 1), (2, 2, 2)]


def test_ring_element_arithmetic():
    a = RingElement.basis((1, 0))
    assert a * a == {(2, 0): 1, (1, 1): 1}
    assert (a + a).scale(3)[(1, 0)] == 6
    assert (a - a) == RingElement()
    assert RingElement.from_json((a * a).to_json()) == a * a


def test_zero_terms_dropped():
    assert len(RingElement({(1, 0): 0, (0, 0): 2})) == 1


def test_helpers():
    assert fundamental_weight(4, 2) == (1, 1, 0, 0)
    assert dual_weight((3, 1, -2)) == (2, -1, -3)
    assert det_shift((2, 0), -1) == (1, -1)
    with pytest.raises(HiveError):
        fundamental_weight(3, 4)


def test_structure_constant():
    assert structure_constant((2, 1, 0), (2, 1, 0), (3, 2, 1)) == 2


def test_candidates_sum_and_bounds():
    lam, mu = (3, 1, 0), (2, 2, -1)
    cands = list(candidate_weights(lam, mu))
    assert len(set(cands)) == len(cands)
    for nu in cands:
        assert sum(nu) == 7
        assert all(-1 <= a <= 5 for a in nu)
    assert set(product_expand(lam, mu)) <= set(cands)


def test_pieri_examples():
    assert pieri_expand((2, 1, 0), 1) == {(3, 1, 0): 1, (2, 2, 0): 1, (2, 1, 1): 1}
    assert pieri_expand((1, 1, 0), 2) == {(2, 2, 0): 1, (2, 1, 1): 1}
    assert pieri_expand((0, 0), 0) == {(0, 0): 1}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(dominant(n, -2, 3), st.integers(0, n))))
def test_pieri_agrees_with_hives(args):
    lam, i = args
    assert product_expand(lam, fundamental_weight(len(lam), i)) == pieri_expand(lam, i)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: dominant(n, -3, 4)))
def test_det_inverse(lam):
    n = len(lam)
    assert product_expand(lam, (-1,) * n) == {det_shift(lam, -1): 1}


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(dominant(n, 0, 2), dominant(n, 0, 2))))
def test_commutative(ws):
    lam, mu = ws
    assert product_expand(lam, mu) == product_expand(mu, lam)


@pytest.mark.parametrize("lam, i", [((2, 1, 0), 1), ((3, 1, 1, 0), 2), ((1, 0, 0, 0), 3), ((0, -1, -1), 2)])
def test_peel_strip_shape(lam, i):
    n = len(lam)
    omega = fundamental_weight(n, i)
    for nu in pieri_expand(lam, i):
        (h,) = enumerate_hives(BoundarySpec(lam, omega, nu))
        sub, bit = peel_strip(h)
        assert sub.n == n - 1
        assert bit == nu[-1] - lam[-1]
        bits = peel_all(h)
        assert len(bits) == n and sum(bits) == i


def test_peel_strip_rejects_non_fundamental():
    h = enumerate_hives(BoundarySpec((2, 1, 0), (2, 1, 0), (3, 2, 1)))[0]
    with pytest.raises(HiveError):
        peel_strip(h)


def test_random_products_match_oracle():
    from hivering.schur import lr_coef_oracle

    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 3)
        lam = tuple(sorted((rng.randint(0, 3) for _ in range(n)), reverse=True))
        mu = tuple(sorted((rng.randint(0, 3) for _ in range(n)), reverse=True))
        for nu, c in product_expand(lam, mu).terms.items():
            assert lr_coef_oracle(lam, mu, nu) == c
