from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from momentseq.interval import QuadraticInterval, QuadSurd, map_interval, surd


def I(a, b):
    return QuadraticInterval.from_endpoints(a, b)


def test_map_examples():
    assert map_interval(I(0, 4), 2) == I(0, 16)
    assert map_interval(I(1, 5), 3) == I(1, 125)
    img = map_interval(QuadraticInterval(3, 2, 2), 2)
    assert img == QuadraticInterval(17, 12, 2)
    assert str(img) == "[17-12*sqrt(2), 17+12*sqrt(2)]"


def test_map_sign_cases():
    assert map_interval(I(-3, -1), 3) == I(-27, -1)
    # even d: a product of two negatives is positive
    assert map_interval(I(-3, -1), 2) == I(1, 9)
    # mixed signs: the cross term a*b sets the lower end
    assert map_interval(I(-2, 3), 2) == I(-6, 9)
    assert map_interval(I(-2, 3), 3) == I(-18, 27)
    assert map_interval(I(-1, F(1, 2)), 2) == I(F(-1, 2), 1)
    assert map_interval(I(F(-1, 2), 1), 5) == I(F(-1, 2), 1)


def test_map_hull_is_needed():
    # p = 1, alpha = (delta_{-2} + delta_3)/2: T_p(alpha)_n = alpha_n^2 has an atom at -6
    from momentseq.hankel import check_interval
    from momentseq.seq import SequencePrefix

    alpha = [(F(-2) ** n + F(3) ** n) / 2 for n in range(12)]
    t = SequencePrefix(tuple(x * x for x in alpha))
    assert check_interval(t, map_interval(I(-2, 3), 2)).passed
    assert not check_interval(t, I(-4, 9)).passed


small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@given(small, small)
def test_degree_one_is_identity(a, b):
    a, b = min(a, b), max(a, b)
    img = map_interval(I(a, b), 1)
    assert img.lo.sign() == I(a, b).lo.sign() and img.hi.sign() == I(a, b).hi.sign()
    assert (img.lo.rational(), img.hi.rational()) == (a, b)


@given(small, small, st.integers(1, 5))
def test_image_contains_powers_of_endpoints(a, b, d):
    a, b = min(a, b), max(a, b)
    img = map_interval(I(a, b), d)
    for x in (a, b):
        v = surd(x ** d)
        assert img.lo <= v <= img.hi


def test_not_representable():
    with pytest.raises(ValueError, match="not of the form"):
        map_interval(QuadraticInterval(1, 1, 2), 2)
    assert map_interval(QuadraticInterval(0, 2, 2), 2) == I(-8, 8)


def test_surd_sign():
    assert surd(3, -2, 2).sign() == 1
    assert surd(-3, 2, 2).sign() == -1
    assert surd(2, -1, 4).sign() == 0
    assert surd(0, -1, 7).sign() == -1
    assert str(surd(3, -2, 1)) == "1"


def test_s_and_q():
    iv = QuadraticInterval(3, 2, 2)
    assert (iv.s, iv.q) == (6, 1)
    assert QuadraticInterval.from_json(iv.to_json()) == iv


@pytest.mark.parametrize("args", [(0, -1, 1), (0, 1, -2), (0, 1, F(1, 2))])
def test_validation(args):
    with pytest.raises((ValueError, TypeError)):
        QuadraticInterval(*args)
    with pytest.raises(ValueError):
        I(2, 1)
