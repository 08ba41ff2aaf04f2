import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oreext.errors import LawViolation, UsageError
from oreext.maps import (EvalZero, FormalDerivative, Identity, InnerDerivation,
                         QScale, SequenceShift, binomial, deriv_power, endo_order_probe,
                         kernel_probe, make_derivation, verify_laws)
from oreext.ore import OreAlgebra
from oreext.rings import PolynomialRing, QuotientRing, RationalFunctionField, SequenceRing
from oreext.scalars import GF, QQ

from .conftest import ALL_CONFIGS, get


@pytest.mark.parametrize("name", ALL_CONFIGS)
@given(seed=st.integers(0, 10 ** 6))
def test_twisted_leibniz_on_catalog(name, seed):
    spec = get(name)
    rng = random.Random(seed)
    R, s, d = spec.ring, spec.sigma, spec.delta
    a, b = R.random_element(rng), R.random_element(rng)
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)
    assert d(a * b) == s(a) * d(b) + d(a) * b
    assert d(a + b) == d(a) + d(b)


@pytest.mark.parametrize("q", [2, 3, -1])
def test_jackson_on_monomials(q):
    R = PolynomialRing(QQ)
    sigma = QScale(R, q)
    delta = make_derivation(R, sigma, "jackson")
    y = R.gen()
    for n in range(1, 7):
        qn = sum(Fraction(q) ** i for i in range(n))  # [n]_q
        assert delta(y ** n) == (y ** (n - 1)) * qn


def test_jackson_with_eval0_lowers_degree():
    R = PolynomialRing(QQ)
    delta = make_derivation(R, EvalZero(R), "jackson")
    y = R.gen()
    assert delta(y ** 4 + 3) == y ** 3
    assert delta(R.one) == R.zero


def test_jackson_needs_q_not_one():
    R = PolynomialRing(QQ)
    with pytest.raises(UsageError):
        make_derivation(R, QScale(R, 1), "jackson")


def test_quotient_derivative_needs_compatible_modulus():
    with pytest.raises(UsageError):
        make_derivation(QuotientRing(QQ, (0, 0, 1)), Identity(QuotientRing(QQ, (0, 0, 1))), "quotient_d_dy")
    R = QuotientRing(GF(2), (0, 0, 1))
    delta = make_derivation(R, Identity(R), "quotient_d_dy")
    assert delta(R.gen()) == R.one


def test_wrong_pairing_is_caught():
    R = PolynomialRing(QQ)
    sigma = QScale(R, 2)
    with pytest.raises(LawViolation):
        verify_laws(sigma, FormalDerivative(R, sigma))


def test_qscale_rejects_zero():
    with pytest.raises(UsageError):
        QScale(PolynomialRing(QQ), 0)


def test_inner_derivation_is_a_sigma_derivation():
    R = PolynomialRing(QQ)
    sigma = QScale(R, 3)
    delta = InnerDerivation(R, sigma, R("y+2"))
    verify_laws(sigma, delta, samples=50)
    OreAlgebra(R, sigma, delta)


def test_sequence_shift():
    S = SequenceRing()
    sigma = SequenceShift(S)
    assert sigma(S.sequence([3, 4], 5)) == S.sequence([3, 3, 4], 5)
    assert sigma(S.indicator(0)) == S.sequence([1, 1], 0)
    assert endo_order_probe(sigma, 10) is None


@pytest.mark.parametrize("p,q,order", [(7, 2, 3), (7, 3, 6), (5, 4, 2)])
def test_order_probe_finds_multiplicative_order(p, q, order):
    R = PolynomialRing(GF(p))
    assert endo_order_probe(QScale(R, q), 10) == order


def test_order_probe_over_q_and_identity():
    R = PolynomialRing(QQ)
    assert endo_order_probe(QScale(R, 2), 20) is None
    assert endo_order_probe(Identity(R), 5) == 1


def test_kernel_probe():
    R = PolynomialRing(QQ)
    assert kernel_probe(EvalZero(R)) == [R.gen()]
    assert kernel_probe(QScale(R, 2), [R.gen()]) == []


def test_binomials_reduce_through_characteristic():
    assert binomial(3, 1, PolynomialRing(GF(3))) == PolynomialRing(GF(3)).zero
    assert binomial(6, 3, PolynomialRing(QQ)) == PolynomialRing(QQ).scalar(20)


def test_deriv_power_and_its_preconditions():
    R = PolynomialRing(QQ)
    d = FormalDerivative(R, Identity(R))
    assert deriv_power(d, 3, R("y^4")) == R("24*y")
    with pytest.raises(UsageError):
        deriv_power(d, -1, R.one)
    sigma = QScale(R, 2)
    with pytest.raises(UsageError):
        deriv_power(make_derivation(R, sigma, "jackson"), 2, R.one)


def test_derivative_on_rational_functions():
    K = RationalFunctionField(QQ)
    d = FormalDerivative(K, Identity(K))
    y = K.gen()
    assert d(1 / y) == -1 / (y * y)
