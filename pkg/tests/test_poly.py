from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wonderful.poly import NotTHomogeneous, Poly, t_weight
from wonderful.rootsys import Weight

VARS = ("x1", "x2", "x3")


def small_polys():
    coeff = st.fractions(min_value=-4, max_value=4, max_denominator=6)
    term = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
    return st.dictionaries(term, coeff, max_size=5).map(
        lambda d: Poly(VARS, {k: Q(v) for k, v in d.items() if v != 0})
    )


@given(small_polys(), small_polys(), small_polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p + Poly() == p
    assert p * Poly.const(1) == p
    assert (p - p).is_zero()


@given(small_polys(), small_polys())
@settings(max_examples=40, deadline=None)
def test_derivative_is_a_derivation(p, q):
    assert (p * q).diff("x1") == p.diff("x1") * q + p * q.diff("x1")


def test_simple_derivative():
    x, y = Poly.var("x"), Poly.var("y")
    assert (x ** 2 * y).diff("x") == 2 * x * y
    with pytest.raises(KeyError):
        (x * y).diff("z")


def test_substitute_then_evaluate():
    x1, x2, u1 = Poly.var("x1"), Poly.var("x2"), Poly.var("u1")
    f = x1 * x2 + x2 ** 2
    g = f.subs({"x1": u1 + 1, "x2": Poly.const(2)})
    assert g == 2 * u1 + 6
    assert f.subs({"x1": 0, "x2": 0}).const_term() == 0


@given(small_polys())
@settings(max_examples=30, deadline=None)
def test_power_matches_repeated_product(p):
    assert p ** 3 == p * p * p
    assert p ** 0 == Poly.const(1)


def test_canonical_rendering():
    x1, x2, x4 = Poly.var("x1"), Poly.var("x2"), Poly.var("x4")
    p = 2 * x1 * x2 + x2 ** 2 - Q(1, 2) * x4
    assert str(p) == "2*x1*x2 + x2^2 - 1/2*x4"
    assert str(Poly()) == "0"
    assert str(-x1) == "-x1"
    assert p.monic().leading_coefficient() == 1


def test_coefficient_helpers():
    x1, x2 = Poly.var("x1"), Poly.var("x2")
    p = 3 * x1 ** 2 * x2 + 5 * x2
    assert p.coefficient({"x1": 2, "x2": 1}) == 3
    assert p.coefficient({"x2": 1}) == 5
    assert p.coefficient({"x1": 7}) == 0
    assert p.degree_in("x1") == 2
    assert p.coefficient_in("x2", 1) == 3 * x1 ** 2 + 5


def test_t_weight_additive():
    wts = {"x1": Weight([-1, 0]), "x2": Weight([0, -1]), "x3": Weight([-1, -1])}
    x1, x2, x3 = (Poly.var(v) for v in ("x1", "x2", "x3"))
    assert t_weight(x1 * x2, wts) == Weight([-1, -1])
    assert t_weight(x1 * x2, wts) == t_weight(x3, wts)
    assert t_weight(x1 ** 2 * x3, wts) == Weight([-3, -1])
    with pytest.raises(NotTHomogeneous) as err:
        t_weight(x1 + x2, wts)
    assert len(err.value.witness) == 2
    with pytest.raises(KeyError):
        t_weight(Poly.var("zz"), wts)


@given(small_polys(), small_polys())
@settings(max_examples=30, deadline=None)
def test_t_weight_multiplicative(p, q):
    wts = {"x1": Weight([-1, 0]), "x2": Weight([-1, 0]), "x3": Weight([-2, 0])}
    # force homogeneity by taking single terms
    for poly in (p, q):
        pass
    terms_p = p.sorted_terms()
    terms_q = q.sorted_terms()
    if not terms_p or not terms_q:
        return
    kp, vp, cp = terms_p[0]
    kq, vq, cq = terms_q[0]
    mp = Poly(vp, {kp: cp})
    mq = Poly(vq, {kq: cq})
    total = t_weight(mp, wts) + t_weight(mq, wts)
    assert t_weight(mp * mq, wts) == total
