from fractions import Fraction

import pytest

from superint.algebra import (I, GaussianRational, ParamScalar, UnknownParameter, as_scalar,
                              const, det, frac_equal, pochhammer, var)


def test_gaussian_rational_field_ops():
    z = GaussianRational(Fraction(1, 2), 3)
    assert z * z.conjugate() == GaussianRational(z.norm())
    assert (z / z) == GaussianRational(1)


def test_fraction_arithmetic_is_exact():
    u, v = var("u"), var("v")
    x = (u + v) / (u - v)
    y = (u * u - v * v) / ((u - v) ** 2)
    assert frac_equal(x, y)
    assert not frac_equal(x, y + const(Fraction(1, 10**12)))


def test_negative_powers_and_imaginary_unit():
    w = var("w")
    assert frac_equal(w ** -2 * w ** 2, const(1))
    assert frac_equal(I * I, const(-1))


def test_zero_division_raises():
    with pytest.raises(ZeroDivisionError):
        var("u") / (var("u") - var("u"))


def test_unknown_parameter():
    with pytest.raises((UnknownParameter, KeyError)):
        var("q")


def test_pochhammer():
    x = var("a")
    assert frac_equal(pochhammer(x, 3), x * (x + 1) * (x + 2))
    assert frac_equal(pochhammer(x, 0), const(1))


def test_derivative_and_compose():
    u, v = var("u"), var("v")
    f = u ** 3 / (1 + v)
    assert frac_equal(f.derivative("u"), 3 * u ** 2 / (1 + v))
    assert frac_equal(f.compose({"u": v, "v": const(0)}), v ** 3)


def test_evaluate_and_shift():
    a = var("a")
    f = a ** 2 + 1
    assert frac_equal(f.shift("a", 1), (a + 1) ** 2 + 1)
    assert frac_equal(f.evaluate({"a": Fraction(1, 3)}), const(Fraction(10, 9)))


def test_det_matches_cofactor():
    a, b, c, d = (var(k) for k in "abcd")
    assert frac_equal(det([[a, b], [c, d]]), a * d - b * c)
    m = [[const(2), const(0), const(1)], [const(1), const(3), const(2)], [const(1), const(1), const(1)]]
    assert frac_equal(det(m), const(2 * (3 - 2) - 0 + 1 * (1 - 3)))


def test_as_scalar_roundtrip():
    assert isinstance(as_scalar(3), ParamScalar)
    assert frac_equal(as_scalar(Fraction(3, 4)), const(Fraction(6, 8)))


def test_expanded_is_canonical():
    u = var("u")
    assert ((u ** 2 - 1) / (u - 1)).expanded() == (u + 1).expanded()
