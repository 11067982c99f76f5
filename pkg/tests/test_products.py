import itertools
import random

import pytest

from qcong.errors import DivergentSpec, NoProductForm
from qcong.products import (
    ProductSpec,
    ThetaSpec,
    chi,
    eta_power,
    eta_quotient,
    general_f,
    pentagonal_euler,
    phi,
    psi,
    theta_expand,
    theta_product_form,
)
from qcong.oracle import overpartition_series
from qcong.series import mul, one, reduce_mod

from conftest import brute_partitions, naive_eta_quotient


def test_pentagonal_matches_naive_product():
    for N in (1, 2, 8, 100, 333):
        assert list(pentagonal_euler(N).coeffs) == naive_eta_quotient([(1, 1)], N)


def test_eta_power_examples():
    # direct product (1-q)(1-q^2)...(1-q^8), truncated
    prod = [1] + [0] * 7
    for j in range(1, 9):
        prod = [prod[i] - (prod[i - j] if i >= j else 0) for i in range(8)]
    assert eta_power(1, 1, 8).coeffs == tuple(prod) == (1, -1, -1, 0, 0, 1, 0, 1)
    assert eta_power(5, 0, 7) == one(7)
    # 1/f2 counts partitions into even parts
    counts = tuple(brute_partitions(n, range(2, n + 1, 2)) for n in range(6))
    assert eta_power(2, -1, 6).coeffs == counts == (1, 0, 1, 0, 2, 0)


@pytest.mark.parametrize("n,k", [(1, 3), (2, -2), (3, 5), (7, -4), (12, 1), (1, -7)])
def test_eta_power_matches_naive(n, k):
    assert list(eta_power(n, k, 150).coeffs) == naive_eta_quotient([(n, k)], 150)


def test_eta_power_inverse_pairs():
    for n, k in itertools.product((1, 2, 5), (1, 2, 3, 6)):
        assert mul(eta_power(n, k, 120), eta_power(n, -k, 120)) == one(120)


def test_eta_quotient_overpartitions():
    spec = ProductSpec.of({2: 1, 1: -2})
    assert eta_quotient(spec, 6).coeffs == (1, 2, 4, 8, 14, 24)
    assert eta_quotient(spec, 6).coeffs[3] == 8
    assert eta_quotient(spec, 200) == overpartition_series(200)


def test_eta_quotient_empty():
    assert eta_quotient(ProductSpec(), 5) == one(5)


def test_eta_quotient_matches_naive_random():
    rng = random.Random(0)
    for _ in range(20):
        factors = [(rng.randint(1, 12), rng.randint(-3, 3)) for _ in range(rng.randint(1, 5))]
        assert list(eta_quotient(ProductSpec(tuple(factors)), 120).coeffs) == \
            naive_eta_quotient(factors, 120)


def test_eta_quotient_permutation_invariant():
    factors = [(2, 3), (3, 2), (12, 1), (1, -2), (4, -1), (6, -3)]
    ref = eta_quotient(ProductSpec(tuple(factors)), 100)
    rng = random.Random(1)
    for _ in range(10):
        rng.shuffle(factors)
        assert eta_quotient(ProductSpec(tuple(factors)), 100) == ref


def test_canonicalize():
    spec = ProductSpec(((4, 1), (1, 2), (4, -1), (2, 1), (1, 1)))
    assert spec.canonical().factors == ((1, 3), (2, 1))
    assert spec.text == "f1^3 * f2"


def test_theta_sum_examples():
    assert theta_expand(phi(), 10).coeffs == (1, 2, 0, 0, 2, 0, 0, 0, 0, 2)
    assert theta_expand(psi(), 11).coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)
    assert theta_expand(phi(-1), 10).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)


def test_product_form_examples():
    assert theta_product_form(phi()) == ProductSpec.of({2: 5, 1: -2, 4: -2})
    assert theta_product_form(psi(-1, 3)) == ProductSpec.of({3: 1, 12: 1, 6: -1})
    assert theta_product_form(chi(-1)) == ProductSpec.of({1: 1, 2: -1})


def test_general_f_has_no_product_form():
    with pytest.raises(NoProductForm):
        theta_product_form(general_f(1, 1, 1, 5))


def test_general_f_divergent():
    with pytest.raises(DivergentSpec):
        general_f(1, 0, 1, 0)
    with pytest.raises(DivergentSpec):
        general_f(1, -1, 1, 3)


THETAS = [ThetaSpec(kind, sign, t) for kind in ("phi", "psi", "chi")
          for sign in (1, -1) for t in (1, 2, 3, 4, 9)]


@pytest.mark.parametrize("spec", THETAS, ids=lambda s: s.text)
def test_theta_sum_equals_product(spec):
    assert theta_expand(spec, 200) == eta_quotient(theta_product_form(spec), 200)


@pytest.mark.parametrize("spec", [s for s in THETAS if s.kind != "chi"], ids=lambda s: s.text)
def test_theta_coefficients_small(spec):
    assert set(theta_expand(spec, 300).coeffs) <= {0, 1, -1, 2, -2}


def test_general_f_specializations():
    # f(q,q) = phi(q), f(q,q^3) = psi(q), f(-q,-q^2) = f1
    assert theta_expand(general_f(1, 1, 1, 1), 150) == theta_expand(phi(), 150)
    assert theta_expand(general_f(1, 1, 1, 3), 150) == theta_expand(psi(), 150)
    assert theta_expand(general_f(-1, 1, -1, 2), 150) == eta_power(1, 1, 150)


def test_general_f_symmetric():
    assert theta_expand(general_f(1, 3, -1, 15), 200) == theta_expand(general_f(-1, 15, 1, 3), 200)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_frobenius(p, k):
    assert reduce_mod(eta_power(k, p, 300), p) == reduce_mod(eta_power(p * k, 1, 300), p)


def test_cache_is_invisible():
    eta_power.cache_clear()
    cold = eta_power(3, -5, 400)
    warm = eta_power(3, -5, 400)
    assert cold == warm
    assert list(cold.coeffs) == naive_eta_quotient([(3, -5)], 400)
