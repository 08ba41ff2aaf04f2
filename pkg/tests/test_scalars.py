import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from oreext.errors import UsageError
from oreext.scalars import GF, QQ, Matrix, is_prime, nullspace, rank, rref

primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@pytest.mark.parametrize("n,expected", [(0, False), (1, False), (2, True), (9, False), (97, True)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("p", [0, 1, 4, 15, 2 ** 31 + 11])
def test_gf_rejects_bad_orders(p):
    with pytest.raises(UsageError):
        GF(p)


@given(primes, st.integers(), st.integers(), st.integers())
def test_fp_field_axioms(p, a, b, c):
    F = GF(p)
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F(0)
    if a:
        assert a * a.inverse() == F(1)


def test_fp_reduces_and_compares_with_ints():
    F = GF(7)
    assert F(10) == 3
    assert F(-1) == 6
    assert F(3) / F(5) * F(5) == F(3)
    assert not F(14)
    assert F(2) ** 3 == 1


def test_fp_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5)(0).inverse()


def test_qq_format_and_parse():
    assert QQ.format(Fraction(3, 2)) == "3/2"
    assert QQ.format(Fraction(-4)) == "-4"
    assert QQ(Fraction(6, 4)) == Fraction(3, 2)
    assert QQ.characteristic == 0 and GF(5).characteristic == 5


def test_nullspace_basis_is_reduced():
    M = Matrix.from_rows(QQ, [[1, 1], [2, 2]])
    assert nullspace(M) == [(Fraction(1), Fraction(-1))]
    assert rank(M) == 1


def test_nullspace_of_invertible_and_empty():
    assert nullspace(Matrix.from_rows(QQ, [[1, 2], [3, 4]])) == []
    assert len(nullspace(Matrix(QQ, 0, 3))) == 3


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_rank_and_nullity_match_sympy(rows):
    M = Matrix.from_rows(QQ, rows)
    S = sympy.Matrix(rows)
    assert rank(M) == S.rank()
    basis = nullspace(M)
    assert len(basis) == len(S.nullspace())
    for v in basis:
        assert all(c == 0 for c in M.apply(v))


@given(matrices)
def test_rref_matches_sympy(rows):
    reduced, pivots = rref([[QQ(a) for a in r] for r in rows], len(rows[0]), QQ)
    S, spivots = sympy.Matrix(rows).rref()
    assert tuple(pivots) == tuple(spivots)
    for i, row in enumerate(reduced):
        assert [sympy.Rational(c.numerator, c.denominator) for c in row] == list(S.row(i))


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_fp_kernel_matches_brute_force(p, data):
    F = GF(p)
    r = data.draw(st.integers(1, 3))
    c = data.draw(st.integers(1, 4))
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    M = Matrix.from_rows(F, rows)
    kernel = {v for v in itertools.product(range(p), repeat=c)
              if all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in rows)}
    basis = nullspace(M)
    span = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        vec = [F(0)] * c
        for k, b in zip(coeffs, basis):
            vec = [x + F(k) * y for x, y in zip(vec, b)]
        span.add(tuple(int(x) for x in vec))
    assert span == kernel
