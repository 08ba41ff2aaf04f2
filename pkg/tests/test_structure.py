import itertools

import pytest
import sympy

from oreext import commutator
from oreext.errors import UnsupportedOperation, UsageError
from oreext.ore import OrePoly
from oreext.scalars import Matrix, rank
from oreext.structure import (TruncationBound, center, centralizer_commutativity_check,
                              centralizer_of_R, constants, ideal_intersection_element,
                              is_maximal_commutative)

from .conftest import get


def B(n, m, samples=20):
    return TruncationBound(n, m, samples)


def coords(p):
    ring = p.parent.ring
    return {(i, k): c for i, a in p.terms.items() for k, c in ring.linear_coordinates(a).items()}


# -- examples


def test_qweyl_centralizer_is_R():
    rep = centralizer_of_R(get("qweyl_q"), B(4, 4))
    assert rep.verdict == "equals-R-up-to-bound"
    assert all(b.degree == 0 for b in rep.basis)
    assert len(rep.basis) == 5


def test_quantum_plane_f7_centralizer():
    rep = centralizer_of_R(get("quantum_plane_f7"), B(3, 3))
    assert rep.contains_monomial("(1)*x^3")
    assert rep.contains_monomial("(y^3)")
    assert rep.verdict == "strictly-larger-with-witness"


def test_sequence_shift_witness():
    rep = centralizer_of_R(get("seq_shift"), B(2, 3, 8))
    assert rep.sampled
    assert str(rep.witness) == "(seq([1],0))*x"


@pytest.mark.parametrize("name,maximal,condition", [
    ("weyl_q", True, "char0_domain_nonzero_derivation"),
    ("quantum_plane_q", True, "domain_sigma_no_finite_order_up_to_bound"),
    ("qweyl_q", True, "regular_sigma_power_difference"),
    ("euler_q", True, "char0_domain_nonzero_derivation"),
    ("weyl_f3", False, None),
    ("quantum_plane_f7", False, None),
])
def test_maximal_commutativity(name, maximal, condition):
    rep = is_maximal_commutative(get(name), B(4, 4))
    assert rep.maximal is maximal
    if condition:
        assert condition in rep.sufficient_conditions_fired
    else:
        assert rep.witness.degree > 0


def test_weyl_f3_witness_is_x_cubed():
    assert str(is_maximal_commutative(get("weyl_f3"), B(4, 4)).witness) == "(1)*x^3"


def test_center_examples():
    assert [str(b) for b in center(get("weyl_q"), B(6, 6)).basis] == ["(1)"]
    f2 = center(get("f2quot"), B(4, 4))
    assert f2.contains_monomial("(1)*x^2")
    f3 = center(get("weyl_f3"), B(4, 4))
    assert f3.contains_monomial("(1)*x^3") and f3.contains_monomial("(y^3)")


@pytest.mark.parametrize("name,bound,expected,is_field", [
    ("weyl_q", 6, ["1"], True),
    ("euler_q", 6, ["1"], True),
    ("weyl_f3", 5, ["1", "y^3"], False),
    ("f2quot", 3, ["1"], True),
])
def test_constants(name, bound, expected, is_field):
    rep = constants(get(name), B(0, bound))
    assert [str(b) for b in rep.basis] == expected
    assert rep.is_field is is_field


def test_constants_need_differential_spec():
    with pytest.raises(UnsupportedOperation):
        constants(get("qweyl_q"))


@pytest.mark.parametrize("name", ["quantum_plane_f7", "weyl_f3", "weyl_q", "seq_shift"])
def test_centralizer_is_commutative(name):
    assert centralizer_commutativity_check(get(name), B(3, 3, 8))


# -- soundness and oracles


@pytest.mark.parametrize("name", ["weyl_q", "weyl_f3", "qweyl_f7", "quantum_plane_f7", "f2quot", "euler_q"])
def test_centralizer_basis_commutes_with_random_ring_elements(name, rng):
    spec = get(name)
    rep = centralizer_of_R(spec, B(3, 3))
    for _ in range(10):
        r = spec.monomial(spec.ring.random_element(rng), 0)
        for b in rep.basis:
            assert not commutator(r, b)


@pytest.mark.parametrize("name", ["weyl_f3", "f2quot", "weyl_q", "quantum_plane_f7"])
def test_center_commutes_with_random_polynomials(name, rng):
    spec = get(name)
    rep = center(spec, B(4, 3))
    for _ in range(10):
        p = spec.random_element(rng, x_degree=4, coeff_degree=3)
        for b in rep.basis:
            assert not commutator(p, b)


@pytest.mark.parametrize("name,n,m", [("weyl_q", 3, 3), ("qweyl_q", 3, 3), ("euler_q", 3, 3),
                                      ("quantum_plane_q", 3, 3)])
@pytest.mark.parametrize("which", ["centralizer", "center"])
def test_dimension_matches_sympy_on_direct_commutators(name, n, m, which):
    spec = get(name)
    basis = spec.ring.coefficient_basis(m)
    unknowns = [spec.monomial(b, i) for i in range(n + 1) for b in basis]
    tests = [spec.monomial(g, 0) for g in spec.ring.generators()]
    if which == "center":
        tests.append(spec.x)
    columns = [{} for _ in unknowns]
    for j, u in enumerate(unknowns):
        for t, g in enumerate(tests):
            for key, c in coords(commutator(g, u)).items():
                columns[j][(t, key)] = c
    keys = sorted({k for col in columns for k in col}, key=repr)
    M = sympy.Matrix([[sympy.Rational(str(col.get(k, 0))) for col in columns] for k in keys])
    expected = len(unknowns) - M.rank()
    fn = centralizer_of_R if which == "centralizer" else center
    assert len(fn(spec, B(n, m)).basis) == expected


def test_f2_center_matches_brute_force():
    spec = get("f2quot")
    n = 3
    R = spec.ring
    elems = list(R.elements())
    found = 0
    for coeffs in itertools.product(elems, repeat=n + 1):
        p = OrePoly(spec, dict(enumerate(coeffs)))
        if not commutator(spec("y"), p) and not commutator(spec.x, p):
            found += 1
    rep = center(spec, B(n, 1))
    assert found == 2 ** len(rep.basis)


@pytest.mark.parametrize("name", ["weyl_f3", "quantum_plane_f7", "qweyl_q"])
def test_monotone_in_bounds(name):
    spec = get(name)
    small = centralizer_of_R(spec, B(2, 2)).basis
    big = centralizer_of_R(spec, B(3, 4)).basis
    keys = sorted({k for p in small + big for k in coords(p)}, key=repr)

    def mat(polys):
        return Matrix.from_rows(spec.field, [[coords(p).get(k, spec.field.zero) for k in keys] for p in polys],
                                cols=len(keys))
    assert rank(mat(big + small)) == rank(mat(big))


@pytest.mark.parametrize("name", ["weyl_q", "weyl_f3", "f2quot"])
def test_ideal_intersection_by_commutators(name, rng):
    spec = get(name)
    for _ in range(10):
        p = spec.random_nonzero(rng, x_degree=4, coeff_degree=3)
        a, trace = ideal_intersection_element(spec, p)
        assert a
        assert len(trace) <= max(p.degree, 0)
        for g in spec.ring.generators():
            assert not commutator(spec.monomial(g, 0), a)


def test_reports_serialize():
    js = is_maximal_commutative(get("weyl_f3"), B(4, 4)).to_json()
    assert js["witness"] == "(1)*x^3"
    cent = js["centralizer"]
    assert set(cent) >= {"bound", "basis", "verdict", "witness", "sufficient_conditions_fired"}


def test_bounds_and_unsupported_rings():
    with pytest.raises(UsageError):
        TruncationBound(-1, 2)
    with pytest.raises(UnsupportedOperation):
        centralizer_of_R(get("qweyl_ratfunc_q"), B(2, 2))
