import random

import pytest
from hypothesis import given, strategies as st

from oreext.errors import UnsupportedOperation, UsageError
from oreext.rings import (BaseFieldRing, Ideal, PolynomialRing, QuotientRing,
                          RationalFunctionField, SequenceRing, ideals_by_closure,
                          ideals_by_subsets)
from oreext.scalars import GF, QQ

RINGS = {
    "Q[y]": PolynomialRing(QQ),
    "F3[y]": PolynomialRing(GF(3)),
    "F2[y]/y^2": QuotientRing(GF(2), (0, 0, 1)),
    "F5[y]/(y^2+2)": QuotientRing(GF(5), (2, 0, 1)),
    "Q(y)": RationalFunctionField(QQ),
    "Seq": SequenceRing(),
    "F7": BaseFieldRing(GF(7)),
}


@pytest.mark.parametrize("name", sorted(RINGS))
@given(seed=st.integers(0, 10 ** 6))
def test_commutative_ring_axioms(name, seed):
    R = RINGS[name]
    rng = random.Random(seed)
    a, b, c = (R.random_element(rng) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * R.one == a and a + R.zero == a
    assert a - a == R.zero


def test_polynomial_printing_and_parsing():
    R = PolynomialRing(QQ)
    y = R.gen()
    p = y ** 2 * QQ("3/2") - y + 1
    assert str(p) == "3/2*y^2-y+1"
    assert R(str(p)) == p
    assert str(R.zero) == "0"


def test_quotient_reduces_and_inverts():
    R = QuotientRing(GF(2), (0, 0, 1))
    y = R.gen()
    assert not y * y
    assert (y + 1).inverse() == y + 1
    assert not y.is_unit() and not y.is_regular()
    assert R.size() == 4 and len(list(R.elements())) == 4
    assert not R.is_domain


def test_quotient_validation():
    with pytest.raises(UsageError):
        QuotientRing(QQ, (1,))
    with pytest.raises(UsageError):
        QuotientRing(QQ, (1, 2))
    with pytest.raises(UsageError):
        QuotientRing(GF(2), (1, 1, 1), domain=False)  # y^2+y+1 is irreducible over F_2
    assert QuotientRing(GF(2), (1, 1, 1)).is_domain


def test_rational_functions_normalize():
    K = RationalFunctionField(QQ)
    y = K.gen()
    r = (y * y - 1) / (y - 1)
    assert r == y + 1
    assert str(1 / (y * 2)) == "(1/2)/(y)"
    assert (y / (y + 1)) * ((y + 1) / y) == K.one


def test_sequence_ring():
    S = SequenceRing()
    d0, d1 = S.indicator(0), S.indicator(1)
    assert not d0 * d1
    assert d0 * d0 == d0
    assert str(S.sequence([1, 2, 2], 2)) == "seq([1],2)"
    assert not d0.is_regular() and S.sequence([1, 3], 2).is_regular()
    with pytest.raises(UnsupportedOperation):
        S.generators()
    r = S.sequence([5, 0, 2], 7)
    coords = S.linear_coordinates(r)
    assert coords == {"tail": 7, 0: -2, 1: -7, 2: -5}


def test_ring_mismatch_is_an_error():
    with pytest.raises(UsageError):
        PolynomialRing(QQ).gen() + PolynomialRing(GF(3)).gen()


def test_ideal_membership():
    R = PolynomialRing(QQ)
    y = R.gen()
    J = Ideal(R, [y ** 2 * (y + 1), y ** 3])
    assert J.principal_generator() == y ** 2
    assert y ** 5 - y ** 2 in J and y not in J
    assert J.is_proper()
    assert not Ideal(R, [y + 1, y]).is_proper()
    S = SequenceRing()
    K = Ideal(S, [S.one - S.indicator(0)])
    assert S.sequence([0, 4], 1) in K and S.indicator(0) not in K


@pytest.mark.parametrize("ring,count", [
    (QuotientRing(GF(2), (0, 0, 1)), 3),       # 0, <y>, R
    (QuotientRing(GF(3), (0, 0, 1)), 3),
    (QuotientRing(GF(2), (0, 1, 1)), 4),       # y(y+1): 0, <y>, <y+1>, R
    (QuotientRing(GF(2), (1, 1, 1)), 2),       # field
])
def test_ideal_enumerations_agree(ring, count):
    subsets, space = ideals_by_subsets(ring)
    closure = ideals_by_closure(ring)
    assert space == 2 ** ring.size()
    assert set(subsets) == set(closure)
    assert len(subsets) == count


def test_enumeration_needs_finite_ring():
    with pytest.raises(UnsupportedOperation):
        ideals_by_subsets(PolynomialRing(QQ))
