""" Truncated Taylor series with complex coefficients

A TaylorSeries holds the coefficients c_0..c_N of sum c_n z^n. All
operations return new series; instances are never mutated after
construction.

    >>> geometric = div(constant(1.), TaylorSeries([1., -1.]))
    >>> evaluate(geometric, 0.5)
    (2+0j)
"""
import math
from numbers import Number
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import OutsideRadius, ZeroConstantTerm

DEFAULT_ORDER = 64
DEFAULT_RADIUS_HINT = 0.95
DIV_EPS = 1e-14
TAIL_TOLERANCE = 1e-9
TAIL_WINDOW = 8
TRUSTED_RADIUS_TOL = 1e-9
# relative slack when comparing |z| against the radius hint
_RADIUS_SLACK = 1e-12

ComplexLike = Union[complex, float, int]
ArrayLike = Union[ComplexLike, np.ndarray, Sequence[ComplexLike]]


class TaylorSeries:
    """ Truncated power series sum_{n=0}^{order} coeffs[n] z^n

    @param coeffs: coefficients, index n holds the coefficient of z^n
    @param radius_hint: largest |z| at which evaluation is trusted
    """

    __slots__ = ('_coeffs', '_radius_hint')
    # numpy scalars on the left must defer to the reflected operators
    __array_ufunc__ = None

    def __init__(self,
                 coeffs: Iterable[ComplexLike],
                 radius_hint: float = DEFAULT_RADIUS_HINT):
        if not isinstance(coeffs, np.ndarray):
            coeffs = list(coeffs)
        values = np.array(coeffs, dtype=complex).ravel()
        assert values.size >= 2, \
            f'a series needs order >= 1, got {values.size} coefficient(s)'
        assert 0. < radius_hint < 1., \
            f'radius_hint must lie in (0, 1), got {radius_hint}'
        values.setflags(write=False)
        self._coeffs = values
        self._radius_hint = float(radius_hint)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    @property
    def radius_hint(self) -> float:
        return self._radius_hint

    def __repr__(self) -> str:
        head = ', '.join(f'{c:.6g}' for c in self._coeffs[:4])
        return (f'TaylorSeries([{head}, ...], order={self.order}, '
                f'radius_hint={self._radius_hint})')

    def __len__(self) -> int:
        return self._coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self._coeffs[n])

    def __call__(self, z: ArrayLike) -> Union[complex, np.ndarray]:
        return evaluate(self, z)

    def __neg__(self) -> 'TaylorSeries':
        return scale(self, -1.)

    def __add__(self, other) -> 'TaylorSeries':
        return add(self, _as_series(other, self))

    __radd__ = __add__

    def __sub__(self, other) -> 'TaylorSeries':
        return add(self, -_as_series(other, self))

    def __rsub__(self, other) -> 'TaylorSeries':
        return add(_as_series(other, self), -self)

    def __mul__(self, other) -> 'TaylorSeries':
        if isinstance(other, Number):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'TaylorSeries':
        if isinstance(other, Number):
            return scale(self, 1. / other)
        return div(self, other)

    def __rtruediv__(self, other) -> 'TaylorSeries':
        return div(_as_series(other, self), self)

    def derivative(self) -> 'TaylorSeries':
        return derivative(self)

    def antiderivative(self) -> 'TaylorSeries':
        return antiderivative(self)

    def exp(self) -> 'TaylorSeries':
        return exp_series(self)

    def shift(self, k: int = 1) -> 'TaylorSeries':
        return shift(self, k)

    def unshift(self, k: int = 1) -> 'TaylorSeries':
        return unshift(self, k)

    def with_radius_hint(self, radius_hint: float) -> 'TaylorSeries':
        return TaylorSeries(self._coeffs, radius_hint)

    def max_imag(self) -> float:
        """ Largest |Im c_n| over all coefficients """
        return float(np.max(np.abs(self._coeffs.imag)))

    def is_real(self, tolerance: float = 1e-10) -> bool:
        return self.max_imag() <= tolerance


def constant(value: ComplexLike,
             order: int = DEFAULT_ORDER,
             radius_hint: float = DEFAULT_RADIUS_HINT) -> TaylorSeries:
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[0] = value
    return TaylorSeries(coeffs, radius_hint)


def variable(order: int = DEFAULT_ORDER,
             radius_hint: float = DEFAULT_RADIUS_HINT) -> TaylorSeries:
    """ The series of the identity z """
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[1] = 1.
    return TaylorSeries(coeffs, radius_hint)


def zero(order: int = DEFAULT_ORDER,
         radius_hint: float = DEFAULT_RADIUS_HINT) -> TaylorSeries:
    return constant(0., order, radius_hint)


def _as_series(value, like: TaylorSeries) -> TaylorSeries:
    if isinstance(value, TaylorSeries):
        return value
    return constant(value, like.order, like.radius_hint)


def _common(s1: TaylorSeries, s2: TaylorSeries):
    order = min(s1.order, s2.order)
    radius_hint = min(s1.radius_hint, s2.radius_hint)
    return order, radius_hint, s1.coeffs[:order + 1], s2.coeffs[:order + 1]


def add(s1: TaylorSeries, s2: TaylorSeries) -> TaylorSeries:
    order, radius_hint, c1, c2 = _common(s1, s2)
    return TaylorSeries(c1 + c2, radius_hint)


def scale(s: TaylorSeries, factor: ComplexLike) -> TaylorSeries:
    return TaylorSeries(s.coeffs * factor, s.radius_hint)


def mul(s1: TaylorSeries, s2: TaylorSeries) -> TaylorSeries:
    """ Cauchy product truncated at the smaller order """
    order, radius_hint, c1, c2 = _common(s1, s2)
    return TaylorSeries(np.convolve(c1, c2)[:order + 1], radius_hint)


def div(s1: TaylorSeries, s2: TaylorSeries) -> TaylorSeries:
    """ Long division s1/s2; requires s2 not to vanish at the origin

    @raises ZeroConstantTerm: if |s2_0| <= DIV_EPS; factor out z first
    """
    order, radius_hint, num, den = _common(s1, s2)
    if abs(den[0]) <= DIV_EPS:
        raise ZeroConstantTerm(
            f'divisor has constant term {den[0]:.3g}; the quotient is not '
            'a power series (factor out z first)')

    quotient = np.zeros(order + 1, dtype=complex)
    for n in range(order + 1):
        # den[n:0:-1] pairs den_n..den_1 with quotient_0..quotient_{n-1}
        quotient[n] = (num[n] - np.dot(quotient[:n], den[n:0:-1])) / den[0]
    return TaylorSeries(quotient, radius_hint)


def exp_series(s: TaylorSeries) -> TaylorSeries:
    """ exp(s) via the recurrence n E_n = sum_{k=1}^{n} k s_k E_{n-k} """
    coeffs = s.coeffs
    weighted = np.arange(coeffs.size) * coeffs
    result = np.zeros(coeffs.size, dtype=complex)
    result[0] = np.exp(coeffs[0])
    for n in range(1, coeffs.size):
        result[n] = np.dot(weighted[1:n + 1], result[n - 1::-1]) / n
    return TaylorSeries(result, s.radius_hint)


def derivative(s: TaylorSeries) -> TaylorSeries:
    """ Termwise derivative; the order drops by one (never below 1) """
    coeffs = s.coeffs[1:] * np.arange(1, s.coeffs.size)
    if coeffs.size < 2:
        coeffs = np.append(coeffs, 0.)
    return TaylorSeries(coeffs, s.radius_hint)


def antiderivative(s: TaylorSeries) -> TaylorSeries:
    """ Termwise integral from the origin, so the constant term is 0

    The order is kept; the coefficient of z^{order+1} is dropped.
    """
    coeffs = np.zeros(s.coeffs.size, dtype=complex)
    coeffs[1:] = s.coeffs[:-1] / np.arange(1, s.coeffs.size)
    return TaylorSeries(coeffs, s.radius_hint)


def shift(s: TaylorSeries, k: int = 1) -> TaylorSeries:
    """ Exact multiplication by z^k; the order grows by k """
    assert k >= 0, f'shift expects k >= 0, got {k}'
    coeffs = np.concatenate([np.zeros(k, dtype=complex), s.coeffs])
    return TaylorSeries(coeffs, s.radius_hint)


def unshift(s: TaylorSeries, k: int = 1) -> TaylorSeries:
    """ Exact division by z^k for a series with a zero of order >= k

    @raises ZeroConstantTerm: if one of the first k coefficients is nonzero
    """
    assert 0 <= k < s.order, f'cannot divide order {s.order} series by z^{k}'
    leading = s.coeffs[:k]
    if leading.size and np.max(np.abs(leading)) > DIV_EPS:
        raise ZeroConstantTerm(
            f'series does not vanish to order {k} at the origin')
    return TaylorSeries(s.coeffs[k:], s.radius_hint)


def _check_radius(s: TaylorSeries, z: np.ndarray) -> None:
    if z.size == 0:
        return
    largest = float(np.max(np.abs(z)))
    if largest > s.radius_hint * (1. + _RADIUS_SLACK):
        raise OutsideRadius(
            f'|z| = {largest:.6g} exceeds the trusted radius '
            f'{s.radius_hint:.6g} of an order {s.order} series')


def evaluate(s: TaylorSeries, z: ArrayLike) -> Union[complex, np.ndarray]:
    """ Horner evaluation of the truncated sum at z (scalar or array)

    @raises OutsideRadius: if some |z| exceeds the series' radius_hint
    """
    points = np.asarray(z, dtype=complex)
    _check_radius(s, points)
    values = npoly.polyval(points, s.coeffs)
    if points.ndim == 0:
        return complex(values)
    return values


def tail_estimate(s: TaylorSeries, r: float) -> Optional[float]:
    """ Ratio-test estimate of the truncation error at |z| = r

    The growth rate rho comes from the last two nonzero coefficients
    c_i and c_j (i < j), so odd and even series are covered; the dropped
    terms are modelled as |c_j| rho^(n - j) r^n for n > N. Returns 0 when
    the last TAIL_WINDOW coefficients vanish (an exact polynomial) and
    None when the model does not converge at r.
    """
    nonzero = np.flatnonzero(s.coeffs)
    window = min(TAIL_WINDOW, s.order)
    if nonzero.size == 0 or nonzero[-1] <= s.order - window or r == 0.:
        return 0.
    if nonzero.size < 2:
        return None
    i, j = int(nonzero[-2]), int(nonzero[-1])
    log_last = math.log(abs(s.coeffs[j]))
    log_rho = (log_last - math.log(abs(s.coeffs[i]))) / (j - i)
    log_ratio = math.log(r) + log_rho
    if log_ratio >= 0.:
        return None
    # log form keeps r^N from underflowing before the product is formed
    log_tail = log_last + j * math.log(r) + \
        (s.order + 1 - j) * log_ratio - math.log(-math.expm1(log_ratio))
    return math.exp(log_tail)


def trusted_radius(s: TaylorSeries,
                   tolerance: float = TAIL_TOLERANCE,
                   upper: Optional[float] = None) -> float:
    """ Largest r <= upper whose tail estimate is at most tolerance

    @param upper: search bound, the series' radius_hint by default
    """
    upper = s.radius_hint if upper is None else upper

    def trusted(r: float) -> bool:
        tail = tail_estimate(s, r)
        return tail is not None and tail <= tolerance

    if trusted(upper):
        return upper
    low, high = 0., upper
    while high - low > TRUSTED_RADIUS_TOL:
        middle = .5 * (low + high)
        if trusted(middle):
            low = middle
        else:
            high = middle
    return low


def allclose(s1: TaylorSeries,
             s2: TaylorSeries,
             tolerance: float,
             upto: Optional[int] = None) -> bool:
    """ Coefficientwise comparison up to (and including) index upto """
    order, _, c1, c2 = _common(s1, s2)
    upto = order if upto is None else min(order, upto)
    return bool(np.max(np.abs(c1[:upto + 1] - c2[:upto + 1])) <= tolerance)
