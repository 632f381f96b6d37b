import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pylogharmonic import series as ts
from pylogharmonic.errors import OutsideRadius, ZeroConstantTerm
from pylogharmonic.expr import compile_series, parse

ORDER = 8

small = st.floats(min_value=-1., max_value=1., allow_nan=False)
coefficients = st.lists(small, min_size=ORDER + 1, max_size=ORDER + 1)
complex_coefficients = st.lists(st.builds(complex, small, small),
                                min_size=ORDER + 1,
                                max_size=ORDER + 1)
half = st.floats(min_value=-.5, max_value=.5, allow_nan=False)
half_coefficients = st.lists(st.builds(complex, half, half),
                             min_size=ORDER + 1,
                             max_size=ORDER + 1)
inner_points = st.builds(
    lambda rho, theta: rho * cmath.exp(1j * theta),
    st.floats(min_value=0., max_value=.9 * ts.DEFAULT_RADIUS_HINT),
    st.floats(min_value=0., max_value=2. * math.pi))


def _series(*coeffs, order=ORDER):
    values = np.zeros(order + 1, dtype=complex)
    values[:len(coeffs)] = coeffs
    return ts.TaylorSeries(values)


def test_geometric_series():
    geometric = ts.div(ts.constant(1., ORDER), _series(1., -1.))
    assert np.allclose(geometric.coeffs, np.ones(ORDER + 1), atol=1e-15)


def test_product_truncates_at_smaller_order():
    product = ts.mul(_series(1., 1.), _series(1., -1., order=4))
    assert product.order == 4
    assert np.allclose(product.coeffs, [1., 0., -1., 0., 0.])


def test_exp_of_variable_is_factorial_series():
    result = ts.exp_series(ts.variable(ORDER))
    expected = [1. / math.factorial(n) for n in range(ORDER + 1)]
    assert np.allclose(result.coeffs, expected, rtol=1e-14, atol=0.)


@settings(max_examples=60, deadline=None)
@given(complex_coefficients, complex_coefficients)
def test_exp_additivity(first, second):
    s1 = ts.TaylorSeries(first)
    s2 = ts.TaylorSeries(second)
    left = ts.exp_series(s1 + s2)
    right = ts.exp_series(s1) * ts.exp_series(s2)
    assert np.allclose(left.coeffs, right.coeffs, rtol=1e-10, atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(half_coefficients, half_coefficients, half_coefficients)
def test_mul_is_commutative_and_associative(first, second, third):
    s1, s2, s3 = (ts.TaylorSeries(c) for c in (first, second, third))
    assert np.allclose((s1 * s2).coeffs, (s2 * s1).coeffs,
                       rtol=1e-13,
                       atol=1e-13)
    assert np.allclose(((s1 * s2) * s3).coeffs, (s1 * (s2 * s3)).coeffs,
                       rtol=1e-13,
                       atol=1e-13)


@settings(max_examples=60, deadline=None)
@given(complex_coefficients, inner_points)
def test_evaluate_matches_direct_summation(coeffs, z):
    direct = sum(c * z**n for n, c in enumerate(coeffs))
    assert abs(ts.TaylorSeries(coeffs)(z) - direct) <= 1e-13


@settings(max_examples=60, deadline=None)
@given(coefficients,
       st.floats(min_value=1., max_value=2.),
       st.lists(st.floats(min_value=-.5, max_value=.5),
                min_size=ORDER,
                max_size=ORDER))
def test_div_undoes_mul(numerator, leading, tail):
    s1 = ts.TaylorSeries(numerator)
    s2 = ts.TaylorSeries([leading] + tail)
    assert ts.allclose(ts.div(ts.mul(s1, s2), s2), s1, 1e-12)


def test_div_rejects_vanishing_constant_term():
    with pytest.raises(ZeroConstantTerm):
        ts.div(ts.constant(1., ORDER), ts.variable(ORDER))


@pytest.mark.parametrize(
    'operation, expected',
    [  # yapf fix
        (lambda s: s + 2., [3., 1.]),
        (lambda s: 2. + s, [3., 1.]),
        (lambda s: s - 1., [0., 1.]),
        (lambda s: 1. - s, [0., -1.]),
        (lambda s: s * 2j, [2j, 2j]),
        (lambda s: np.float64(3.) * s, [3., 3.]),
        (lambda s: s / 2., [.5, .5]),
        (lambda s: -s, [-1., -1.]),
    ])
def test_scalar_arithmetic(operation, expected):
    result = operation(_series(1., 1.))
    assert isinstance(result, ts.TaylorSeries)
    assert np.allclose(result.coeffs[:2], expected)


def test_derivative_and_antiderivative():
    s = _series(5., 1., 2., 3.)
    assert np.allclose(s.derivative().coeffs[:3], [1., 4., 9.])
    assert s.derivative().order == ORDER - 1

    restored = s.derivative().antiderivative()
    assert restored[0] == 0.
    assert np.allclose(restored.coeffs[1:4], [1., 2., 3.])


def test_shift_and_unshift_are_exact():
    s = _series(1., 2., 3.)
    shifted = ts.shift(s, 2)
    assert shifted.order == ORDER + 2
    assert np.array_equal(shifted.coeffs[:5], [0., 0., 1., 2., 3.])
    assert np.array_equal(ts.unshift(shifted, 2).coeffs, s.coeffs)


def test_unshift_requires_a_zero_at_the_origin():
    with pytest.raises(ZeroConstantTerm):
        ts.unshift(_series(1., 2.))


def test_evaluate_scalar_and_array():
    s = _series(1., 2., 3.)
    assert s(0.5) == pytest.approx(1. + 1. + .75)
    values = s(np.array([0., .5j]))
    assert values.shape == (2, )
    assert values[1] == pytest.approx(1. + 1j - .75)


def test_evaluate_outside_trusted_radius():
    s = ts.TaylorSeries([0., 1.], radius_hint=.5)
    with pytest.raises(OutsideRadius):
        s(np.array([.1, .6]))


@pytest.mark.parametrize(
    'coeffs, r, expected',
    [  # yapf fix
        ([1.] * 65, .5, .5**65 / .5),
        ([1., 2.] + [0.] * 20, .5, 0.),
        ([0., 1.] * 10 + [0.], .5, .5**21 / .5),
        ([1.] * 65, 1., None),
    ])
def test_tail_estimate(coeffs, r, expected):
    tail = ts.tail_estimate(ts.TaylorSeries(coeffs), r)
    if expected is None:
        assert tail is None
    else:
        assert tail == pytest.approx(expected, rel=1e-12)


def test_tail_estimate_skips_vanishing_coefficients():
    # c_64 = 0 while c_63 = 1
    phi = compile_series(parse('z/(1-z^2)'), 64)
    r = .904
    tail = ts.tail_estimate(phi, r)
    assert tail > 1e-3
    assert tail == pytest.approx(r**65 / (1. - r), rel=1e-9)


def test_trusted_radius():
    phi = compile_series(parse('z/(1-z^2)'), 64)
    r = ts.trusted_radius(phi)
    assert .6 < r < phi.radius_hint
    assert ts.tail_estimate(phi, r) <= ts.TAIL_TOLERANCE
    assert ts.tail_estimate(phi, r + 1e-6) > ts.TAIL_TOLERANCE

    identity = compile_series(parse('z'), 64)
    assert ts.trusted_radius(identity) == identity.radius_hint


def test_real_coefficients():
    assert _series(1., 2.).is_real()
    assert not _series(1., 2j).is_real()
    assert _series(1., 1e-11j).is_real(1e-10)


def test_invalid_construction():
    with pytest.raises(AssertionError):
        ts.TaylorSeries([1.])
    with pytest.raises(AssertionError):
        ts.TaylorSeries([1., 2.], radius_hint=1.)
