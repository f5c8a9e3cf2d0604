from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtbinomial.exprcore import (
    QExp, WeightError, WeightExpr, weight_product, we_limit_q1, we_limit_t1, we_to_poly,
)
from qtbinomial.tpoly import TPoly


def qdiff(y, z):
    return QExp.diff(y, z)


def test_qexp_basics():
    e = qdiff(3, 1)
    assert e.eval(2) == 6
    assert e.at_one() == 0
    assert e.derivative_at_one() == 2
    assert e.frobenius(-2) == qdiff(1, -1)
    assert qdiff(-1, -2).eval(2) == Fraction(1, 4)
    assert str(qdiff(2, 0)) == "q^2 - 1"


def test_weight_polynomial_frozen():
    # t^(q-1) [q]_{t^(q-1)} at q = 3 is t^2 + t^4 + t^6
    w = WeightExpr.bottom_cell(qdiff(1, 0))
    assert we_to_poly(w, 3).terms == {2: 1, 4: 1, 6: 1}
    assert we_limit_t1(w, 3) == 3
    assert we_limit_q1(w) == 1


def test_fractional_exponent_weight():
    w = WeightExpr(qdiff(0, -1), (qdiff(0, -1),))
    assert we_to_poly(w, 2).terms == {Fraction(1, 2): 1, 1: 1}


def test_validation():
    with pytest.raises(WeightError):
        WeightExpr(QExp.power(1))
    with pytest.raises(WeightError):
        WeightExpr(QExp(), (qdiff(0, 1),))
    with pytest.raises(ValueError):
        we_to_poly(WeightExpr(), 1)


def test_frobenius_compatible_with_polynomials():
    w = WeightExpr(qdiff(2, 0), (qdiff(2, 1), qdiff(1, 0)))
    for q in (2, 3):
        assert we_to_poly(w.frobenius(1), q) == we_to_poly(w, q).frobenius(q)
        assert we_to_poly(w.frobenius(-1), q) == we_to_poly(w, q).frobenius(q, -1)


def test_weight_product_and_identity():
    assert weight_product([]) == WeightExpr.one()
    assert we_to_poly(WeightExpr.one(), 2) == TPoly.one()


# a random weight is a product of cells t^(q^r - q^s)[q]_{t^(q^r - q^s)}, r > s, plus a free prefactor
pairs = st.tuples(st.integers(-1, 3), st.integers(0, 3)).map(lambda p: (p[0] + p[1] + 1, p[0]))
weights = st.builds(
    lambda pre, brs: WeightExpr(sum((qdiff(r, s) for r, s in pre), QExp()),
                                [qdiff(r, s) for r, s in brs]),
    st.lists(pairs, max_size=3), st.lists(pairs, max_size=3),
)


@settings(max_examples=1000, deadline=None)
@given(weights, weights, st.sampled_from([2, 3]))
def test_multiplicativity(a, b, q):
    ab = a * b
    assert we_to_poly(ab, q) == we_to_poly(a, q) * we_to_poly(b, q)
    assert we_limit_t1(ab, q) == we_limit_t1(a, q) * we_limit_t1(b, q)
    assert we_limit_q1(ab) == we_limit_q1(a) + we_limit_q1(b)


@settings(max_examples=200, deadline=None)
@given(weights, st.sampled_from([2, 3]))
def test_limits_agree_with_polynomial(w, q):
    poly = we_to_poly(w, q)
    assert poly.eval_one() == we_limit_t1(w, q)
