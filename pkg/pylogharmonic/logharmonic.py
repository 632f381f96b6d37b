""" Logharmonic mappings f(z) = z h(z) conj(g(z)) built from (phi, a)

The rotation phi = z h g and the second dilatation a (with a(0) = 0)
determine f through

    g = exp(int_0^z a/(1+a) * phi'/phi ds),   h = phi / (z g),
    f = phi * exp(-2i Im int_0^z a/(1+a) * phi'/phi ds).

The path integral from the origin is the termwise antiderivative of the
integrand series. Typically real rotations phi = z p / (1 - z^2) split f
into a canonical factor q (rotation z/(1-z^2)) times a factor w built from
the real Herglotz function p.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple, Union

import numpy as np

from . import series as ts
from .errors import (BadNormalization, DegenerateDenominator,
                     DilatationNotVanishing, NotHerglotz, NotRealCoefficient,
                     NotTypicallyReal, OriginEvaluation)
from .expr import FunctionSpec, compile_series, parse
from .grid import DEFAULT_GRID, Grid

ZERO_TOL = 1e-14
UNIT_TOL = 1e-12
REAL_COEFFICIENT_TOL = 1e-10
CANONICAL_ROTATION = 'z/(1-z^2)'

logger = logging.getLogger(__name__)


def _one_minus_z_squared(order: int, radius_hint: float) -> ts.TaylorSeries:
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[0] = 1.
    if order >= 2:
        coeffs[2] = -1.
    return ts.TaylorSeries(coeffs, radius_hint)


def _check_rotation(phi: ts.TaylorSeries) -> None:
    if abs(phi[0]) > ZERO_TOL:
        raise BadNormalization(f'phi(0) must be 0, got {phi[0]:.3g}')
    if abs(phi[1]) <= ZERO_TOL:
        raise BadNormalization("phi'(0) must not vanish")


def _check_dilatation(a: ts.TaylorSeries) -> None:
    if abs(a[0]) > ZERO_TOL:
        raise DilatationNotVanishing(
            f'a(0) = {a[0]:.3g}; the integral from the origin only '
            'converges for a(0) = 0')


def _check_unit_constant(s: ts.TaylorSeries, name: str) -> None:
    if abs(s[0] - 1.) > UNIT_TOL:
        raise BadNormalization(f'{name}(0) must be 1, got {s[0]:.6g}')


def herglotz_part(phi: ts.TaylorSeries) -> ts.TaylorSeries:
    """ p = (1 - z^2) phi / z, so that phi = z p / (1 - z^2) """
    _check_rotation(phi)
    big_phi = ts.unshift(phi)
    return ts.mul(_one_minus_z_squared(big_phi.order, big_phi.radius_hint),
                  big_phi)


def _dilatation_ratio(a: ts.TaylorSeries) -> ts.TaylorSeries:
    """ u = a / (1 + a) """
    return ts.div(a, 1. + a)


def _unimodular(integral: ts.TaylorSeries, z: np.ndarray) -> np.ndarray:
    return np.exp(-2j * np.imag(integral(z)))


@dataclass(frozen=True)
class LogharmonicMap:
    """ f = z h conj(g) with rotation phi = z h g and dilatation a

    @param phi: rotation, phi(0) = 0 and phi'(0) = 1
    @param a: second dilatation, a(0) = 0
    @param g: derived, g(0) = 1
    @param h: derived, h(0) = 1
    @param integral: antiderivative of a/(1+a) phi'/phi, zero at 0
    """
    phi: ts.TaylorSeries
    a: ts.TaylorSeries
    g: ts.TaylorSeries
    h: ts.TaylorSeries
    integral: ts.TaylorSeries

    @cached_property
    def phi_prime(self) -> ts.TaylorSeries:
        return self.phi.derivative()

    @property
    def radius_hint(self) -> float:
        return min(self.phi.radius_hint, self.a.radius_hint)

    def __call__(self, z):
        """ f(z) = phi(z) exp(-2i Im integral(z)) """
        points = np.asarray(z, dtype=complex)
        values = self.phi(points) * _unimodular(self.integral, points)
        return complex(values) if points.ndim == 0 else values

    def factor_form(self, z):
        """ f(z) evaluated as z h(z) conj(g(z)) from the derived factors """
        points = np.asarray(z, dtype=complex)
        values = points * self.h(points) * np.conj(self.g(points))
        return complex(values) if points.ndim == 0 else values

    def reconstruction_error(self) -> float:
        """ max_n |phi_n - (z h g)_n| over the common order """
        rebuilt = ts.shift(ts.mul(self.h, self.g))
        order = min(rebuilt.order, self.phi.order)
        return float(
            np.max(
                np.abs(rebuilt.coeffs[:order + 1] -
                       self.phi.coeffs[:order + 1])))

    def with_radius_hint(self, radius_hint: float) -> 'LogharmonicMap':
        """ The same map with every series trusted up to radius_hint """
        return LogharmonicMap(
            phi=self.phi.with_radius_hint(radius_hint),
            a=self.a.with_radius_hint(radius_hint),
            g=self.g.with_radius_hint(radius_hint),
            h=self.h.with_radius_hint(radius_hint),
            integral=self.integral.with_radius_hint(radius_hint))

    def max_dilatation(self, grid: Grid = DEFAULT_GRID) -> float:
        """ max |a(z)| over the grid """
        points = grid.within(self.a.radius_hint).points()
        return float(np.max(np.abs(self.a(points))))


@dataclass(frozen=True)
class PLhMap:
    """ w = p exp(-2i Im int_0^z a/(1+a) p'/p ds) for a real Herglotz p """
    p: ts.TaylorSeries
    a: ts.TaylorSeries
    integral: ts.TaylorSeries

    def __call__(self, z):
        points = np.asarray(z, dtype=complex)
        values = self.p(points) * _unimodular(self.integral, points)
        return complex(values) if points.ndim == 0 else values

    def reciprocal(self) -> 'PLhMap':
        """ 1/w, logharmonic for the same a, with p replaced by 1/p """
        return PLhMap(p=1. / self.p, a=self.a, integral=-self.integral)


@dataclass(frozen=True)
class FactorPair:
    q: LogharmonicMap
    w: PLhMap

    def __call__(self, z):
        return self.q(z) * self.w(z)


@dataclass(frozen=True)
class ClosedFormMap:
    """ F(z) = z h(z) conj(g(z)) from closed-form h and g """
    h: FunctionSpec
    g: FunctionSpec

    @classmethod
    def from_text(cls, h: str, g: str) -> 'ClosedFormMap':
        return cls(parse(h), parse(g))

    def __call__(self, z):
        points = np.asarray(z, dtype=complex)
        values = points * self.h(points) * np.conj(self.g(points))
        return complex(values) if points.ndim == 0 else values


def _dilatation_integral(phi: ts.TaylorSeries, a: ts.TaylorSeries
                    ) -> Tuple[ts.TaylorSeries, ts.TaylorSeries]:
    """ Returns (Phi, I) with phi = z Phi and I' = a/(1+a) phi'/phi """
    _check_rotation(phi)
    _check_dilatation(a)
    big_phi = ts.unshift(phi)
    u = _dilatation_ratio(a)
    # phi'/phi = 1/z + Phi'/Phi and u(0) = 0, so u/z is a power series
    integrand = ts.unshift(u) + u * (big_phi.derivative() / big_phi)
    return big_phi, integrand.antiderivative()


def construct_g(phi: ts.TaylorSeries, a: ts.TaylorSeries) -> ts.TaylorSeries:
    """ g = exp(int_0^z a/(1+a) phi'/phi ds)

    @raises BadNormalization: phi(0) != 0 or phi'(0) = 0
    @raises DilatationNotVanishing: a(0) != 0
    """
    _, integral = _dilatation_integral(phi, a)
    return integral.exp()


def construct_map(phi: ts.TaylorSeries, a: ts.TaylorSeries) -> LogharmonicMap:
    """ Builds the logharmonic map with rotation phi and dilatation a

    @param phi: rotation series, phi(0) = 0, phi'(0) != 0
    @param a: dilatation series, a(0) = 0
    @return: the map bundle (phi, a, g, h, integral)
    """
    big_phi, integral = _dilatation_integral(phi, a)
    g = integral.exp()
    h = big_phi / g
    mapping = LogharmonicMap(phi=phi, a=a, g=g, h=h, integral=integral)

    margin = mapping.max_dilatation()
    if margin >= 1.:
        logger.warning('max |a| on the check grid is %.6g >= 1; the map '
                       'is not sense-preserving there', margin)
    logger.debug('constructed map: order %d, max |a| %.3g', h.order, margin)
    return mapping


def construct_q(a: ts.TaylorSeries,
                order: Optional[int] = None) -> LogharmonicMap:
    """ The canonical factor with rotation z/(1-z^2) for dilatation a """
    phi = compile_series(parse(CANONICAL_ROTATION),
                         order or a.order,
                         radius_hint=a.radius_hint)
    return construct_map(phi, a)


def construct_w(p: ts.TaylorSeries,
                a: ts.TaylorSeries,
                grid: Grid = DEFAULT_GRID) -> PLhMap:
    """ The factor w = p exp(-2i Im int_0^z a/(1+a) p'/p ds)

    @raises BadNormalization: p(0) != 1
    @raises NotRealCoefficient: some |Im p_n| > 1e-10
    @raises NotHerglotz: Re p <= 0 somewhere on the grid
    """
    _check_unit_constant(p, 'p')
    _check_dilatation(a)
    if not p.is_real(REAL_COEFFICIENT_TOL):
        raise NotRealCoefficient(
            f'p has coefficients with imaginary part up to '
            f'{p.max_imag():.3g}')
    points = grid.within(p.radius_hint).points()
    smallest = float(np.min(np.real(p(points))))
    if smallest <= 0.:
        raise NotHerglotz(f'min Re p on the grid is {smallest:.6g} <= 0')

    integrand = _dilatation_ratio(a) * (p.derivative() / p)
    return PLhMap(p=p, a=a, integral=integrand.antiderivative())


def factorize(f: LogharmonicMap, grid: Grid = DEFAULT_GRID) -> FactorPair:
    """ Splits f = q w with q canonical and w built from p

    @raises NotTypicallyReal: the rotation of f is not typically real
    """
    from .analysis import typically_real_check

    report = typically_real_check(f.phi, grid=grid)
    if not report.passed:
        raise NotTypicallyReal(
            f'rotation is not typically real: min Re p = '
            f'{report.extremal_value:.6g} at {report.extremal_point:.6g}')

    p = herglotz_part(f.phi)
    return FactorPair(q=construct_q(f.a, order=f.phi.order),
                      w=construct_w(p, f.a, grid=grid))


def corollary1_transform(f: LogharmonicMap,
                         grid: Grid = DEFAULT_GRID) -> LogharmonicMap:
    """ The map q^2/f = q/w, with rotation z / ((1 - z^2) p) """
    pair = factorize(f, grid=grid)
    p = pair.w.p
    denominator = ts.mul(_one_minus_z_squared(p.order, p.radius_hint), p)
    phi = ts.shift(1. / denominator)
    return construct_map(phi, f.a)


def recover_dilatation(h: ts.TaylorSeries,
                       g: ts.TaylorSeries) -> ts.TaylorSeries:
    """ a = (g'/g) z / (1 + z h'/h)

    @raises BadNormalization: h(0) != 1 or g(0) != 1
    """
    _check_unit_constant(h, 'h')
    _check_unit_constant(g, 'g')
    denominator = 1. + ts.shift(h.derivative() / h)
    if abs(denominator[0]) <= ts.DIV_EPS:
        raise DegenerateDenominator('1 + z h\'/h vanishes at the origin')
    return ts.div(ts.shift(g.derivative() / g), denominator)


def psi_series(m: LogharmonicMap) -> ts.TaylorSeries:
    """ psi = z h / g """
    return ts.shift(m.h / m.g)


def eval_wirtinger(m: LogharmonicMap, z, strict: bool = False):
    """ (f, f_z, f_zbar) at z

    Uses f_z = f phi'/phi (1 - u) and f_zbar = f conj(u phi'/phi) with
    u = a/(1+a), which equal f (1/z + h'/h) and f conj(g'/g). At z = 0
    the limits (0, 1, 0) are returned.

    @raises OriginEvaluation: z = 0 and strict is set
    """
    scalar = np.ndim(z) == 0
    points = np.atleast_1d(np.asarray(z, dtype=complex))
    at_origin = points == 0
    if strict and np.any(at_origin):
        raise OriginEvaluation('f_z and f_zbar at the origin are limits')

    phi = m.phi(points)
    phi_prime = m.phi_prime(points)
    a = m.a(points)
    u = a / (1. + a)
    unimodular = _unimodular(m.integral, points)

    # phi / conj(phi) has modulus one and is undefined only at the origin
    phase = np.ones_like(phi)
    phase[~at_origin] = phi[~at_origin] / np.conj(phi[~at_origin])

    f = phi * unimodular
    f_z = unimodular * phi_prime * (1. - u)
    f_zbar = unimodular * np.conj(u * phi_prime) * phase
    if scalar:
        return complex(f[0]), complex(f_z[0]), complex(f_zbar[0])
    return f, f_z, f_zbar


def pde_residual(m: LogharmonicMap, z) -> Union[float, np.ndarray]:
    """ |conj(f_zbar/f) - a f_z/f|, which vanishes for logharmonic f """
    f, f_z, f_zbar = eval_wirtinger(m, z, strict=True)
    residual = np.abs(np.conj(f_zbar / f) - m.a(z) * f_z / f)
    return float(residual) if np.ndim(z) == 0 else residual


def jacobian(m: LogharmonicMap, z) -> Union[float, np.ndarray]:
    """ J_f = |f_z|^2 (1 - |a|^2) """
    _, f_z, _ = eval_wirtinger(m, z)
    values = np.abs(f_z)**2 * (1. - np.abs(m.a(z))**2)
    return float(values) if np.ndim(z) == 0 else values
