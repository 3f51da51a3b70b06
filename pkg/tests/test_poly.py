import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modhodge import _pykernels, kernels
from modhodge.errors import ConversionError, IntegralityError, NonExactDivisionError
from modhodge.poly import (
    ONE, T, U, V, X, MultiPoly, at_unit_uv, euler_value, exact_div, pure_conversion,
    round_conversion, specialize,
)

exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(MultiPoly)
nonzero = polys.filter(bool)


def test_product_example():
    assert (1 + T * U) * (1 + T * V) == 1 + T * U + T * V + T**2 * X


def test_zeroth_power_is_one():
    assert (1 + T) ** 0 == ONE


def test_binomial_square():
    s = T * X
    assert (1 + s) ** 2 == 1 + 2 * s + s**2
    assert (1 + s) ** 2 == MultiPoly({(0, 0, 0): 1, (1, 1, 1): 2, (2, 2, 2): 1})


def test_canonical_form():
    p = MultiPoly({(2, 0, 0): 1, (0, 0, 0): 3, (1, 1, 0): 0})
    assert list(p.terms) == [(0, 0, 0), (2, 0, 0)]
    assert p - p == MultiPoly()
    assert not (p - p).terms
    assert type((p / 1).coefficient(0, 0, 0)) is int


def test_rejects_negative_exponents():
    with pytest.raises(ValueError):
        MultiPoly({(-1, 0, 0): 1})


@pytest.mark.parametrize("num,den,quot", [
    ((1 + X) ** 2, 1 + X, 1 + X),
    (1 - X**2, 1 + X, 1 - X),
    (1 + X**3, 1 + X, 1 - X + X**2),
])
def test_exact_div_examples(num, den, quot):
    assert exact_div(num, den) == quot


def test_exact_div_remainder():
    with pytest.raises(NonExactDivisionError):
        exact_div(1 + X**2, 1 + X)
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, MultiPoly())


def test_adams_examples():
    assert (X).adams(2) == X**2
    assert ((1 + T) ** 2).adams(2, signed=True) == 1 - 2 * T**2 + T**4
    assert ((1 + T) ** 2).adams(3, signed=True) == (1 + T**3) ** 2


def test_specialisation_examples():
    for d in (1, 2, 3):
        e = X**d * (U - 1) ** d * (V - 1) ** d
        assert pure_conversion(e, 2 * d) == (1 + T) ** (2 * d)
        assert specialize(e, "pure", 2 * d) == (1 + T) ** (2 * d)
    for r in (1, 2, 5):
        assert round_conversion((X - 1) ** r, r) == (1 + T) ** r
    assert at_unit_uv(1 + T * U + T * V + T**2 * X) == (1 + T) ** 2
    assert pure_conversion(ONE, 0) == ONE
    assert euler_value((1 + T * X) ** 2) == 0
    assert specialize((1 + T * X) ** 2, "euler") == MultiPoly()


def test_conversion_errors():
    with pytest.raises(ConversionError):
        round_conversion(U - 1, 1)
    with pytest.raises(ConversionError):
        pure_conversion(X**3, 1)
    with pytest.raises(ConversionError):
        pure_conversion(T, 1)
    with pytest.raises(ValueError):
        specialize(X, "pure")


def test_pure_conversion_of_product_is_product():
    # Kunneth: both factors pure
    a = X * (U - 1) * (V - 1)
    b = X**2 - X * U - X * V + X
    assert pure_conversion(a * b, 4) == pure_conversion(a, 2) * pure_conversion(b, 2)


def test_rational_coefficients_and_integrality():
    p = (1 + T) / 2
    assert p.coefficient(1, 0, 0) == Fraction(1, 2)
    assert not p.is_integral()
    with pytest.raises(IntegralityError):
        p.require_integral()
    with pytest.raises(IntegralityError):
        p.to_json()
    assert (p * 2).is_integral()


def test_json_round_trip_and_order():
    p = 3 * T**2 * U - 7 * V + 10**40 * X
    obj = p.to_json()
    assert obj["vars"] == ["t", "u", "v"]
    assert [t["e"] for t in obj["terms"]] == sorted(t["e"] for t in obj["terms"])
    assert all(isinstance(t["c"], str) for t in obj["terms"])
    assert MultiPoly.from_json(json.loads(json.dumps(obj))) == p


def test_evaluate_and_degree():
    p = (1 + T * U) * (1 - T * V)
    assert p.evaluate(1, 1, 1) == 0
    assert p.evaluate(2, 3, 5) == (1 + 6) * (1 - 10)
    assert p.degree("t") == 2 and p.degree("u") == 1
    assert p.swap_uv() == (1 + T * V) * (1 - T * U)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == MultiPoly()


@settings(max_examples=60)
@given(polys, nonzero)
def test_exact_div_inverts_multiplication(a, b):
    assert exact_div(a * b, b) == a


@given(polys, polys, st.integers(1, 4), st.booleans())
def test_adams_is_multiplicative(f, g, n, signed):
    assert (f * g).adams(n, signed) == f.adams(n, signed) * g.adams(n, signed)
    assert (f + g).adams(n, signed) == f.adams(n, signed) + g.adams(n, signed)


@given(polys, st.integers(1, 4), st.integers(1, 4), st.booleans())
def test_adams_composes(f, n, k, signed):
    assert f.adams(n, signed).adams(k, signed) == f.adams(n * k, signed)


@given(polys)
def test_json_round_trip_property(p):
    assert MultiPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


big = st.dictionaries(exps, st.integers(-(10**25), 10**25), max_size=8)
small = st.dictionaries(exps, st.integers(-3, 3), max_size=30)


@given(st.one_of(big, small), st.one_of(big, small))
def test_kernel_backends_agree(a, b):
    a = dict(sorted((k, c) for k, c in a.items() if c))
    b = dict(sorted((k, c) for k, c in b.items() if c))
    assert kernels.mul_terms(a, b) == _pykernels.mul_terms(a, b)
    assert kernels.add_terms(a, b, -2) == _pykernels.add_terms(a, b, -2)


def test_kernel_backend_handles_fractions():
    a = {(0, 0, 0): Fraction(1, 2), (1, 0, 0): 3}
    b = {(0, 0, 0): Fraction(2, 1), (2, 1, 0): Fraction(-1, 3)}
    out = kernels.mul_terms(a, b)
    assert out == _pykernels.mul_terms(a, b)
    assert type(out[(0, 0, 0)]) is int


def test_compiled_backend_is_active():
    import modhodge
    assert modhodge.BACKEND in ("cython", "python")
    assert kernels.BACKEND == modhodge.BACKEND
