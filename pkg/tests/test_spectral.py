"""Rational functions in u and the expansion in inverse Pochhammer symbols."""

import pytest
from hypothesis import assume, given, strategies as st

from jackinf.alpha import ALPHA, AlphaPoleError, AlphaRat
from jackinf.spectral import PochhammerExpansion, UPoly, UPolyRat, expand_pochhammer, linear, pochhammer, rising_tail

from conftest import alpha_rats

a = ALPHA
u = UPoly.u()


def test_pochhammer_symbols():
    assert pochhammer(0) == UPoly([1])
    assert pochhammer(3) == u * (u + 1) * (u + 2)
    assert rising_tail(1, 3) == (u + 1) * (u + 2)
    assert rising_tail(3, 3) == UPoly([1])


def test_reduction():
    r = UPolyRat(u * (u - a), u * (u + 1))
    assert r.den == u + 1 and r.num == u - a
    assert UPolyRat(UPoly([2]), UPoly([4])) == UPolyRat(UPoly([AlphaRat(1) / 2]))


def test_expansion_examples():
    assert expand_pochhammer(UPolyRat(u - a, u), 1).coeffs == (1, -a)
    two = UPolyRat((u - a) * (u + 1 - a), u * (u + 1))
    assert expand_pochhammer(two, 2).coeffs == (1, -2 * a, a * (a + 1))
    assert expand_pochhammer(UPolyRat(UPoly([1])), 0).coeffs == (1,)


def test_expansion_preconditions():
    with pytest.raises(ValueError):
        expand_pochhammer(UPolyRat(UPoly([1]), u + 3), 2)
    with pytest.raises(ValueError):
        expand_pochhammer(UPolyRat(u * u, u), 1)


def test_evaluation_at_pole():
    r = UPolyRat(UPoly([1]), u - a)
    assert r(a + 1) == 1
    with pytest.raises(AlphaPoleError):
        r(a)


@given(st.lists(alpha_rats(), min_size=1, max_size=4))
def test_expansion_round_trip(coeffs):
    exp = PochhammerExpansion(tuple(coeffs))
    back = expand_pochhammer(exp.to_rational(), len(coeffs) - 1)
    assert back.coeffs == tuple(coeffs)


@given(alpha_rats(), alpha_rats(), alpha_rats(nonzero=True))
def test_rational_arithmetic(x, y, z):
    f = UPolyRat(linear(x), linear(y))
    g = UPolyRat(linear(z) * linear(x), UPoly([z]))
    assert (f + g) - g == f
    assert (f * g) / g == f
    assume(f.den(z))
    assert (f * g)(z) == f(z) * g(z)
