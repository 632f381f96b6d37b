""" Predicates and metrics for logharmonic mappings

Typical realness of the rotation, the starlikeness functional and the
radius of starlikeness, arclength of image circles with its bound,
boundary extrema of closed-form maps and real-axis symmetry.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from . import series as ts
from .errors import (BadNormalization, LogharmonicError, NotTypicallyReal,
                     OriginEvaluation, OutsideRadius, PreconditionFailed)
from .grid import DEFAULT_GRID, Grid, circle_angles
from .logharmonic import (ClosedFormMap, LogharmonicMap, construct_map,
                          eval_wirtinger, herglotz_part, psi_series)

SIGN_TOLERANCE = 1e-9
REAL_COEFFICIENT_TOL = 1e-10
SYMMETRY_POINT_TOL = 1e-9
ALTERNATE_G_TOL = 1e-8
NONVANISHING_TOL = 1e-9
NORMALIZATION_TOL = 1e-12

RADIUS_ANGLES = 4096
ARCLENGTH_ANGLES = 4096
EXTREMA_SAMPLES = 8192
RADIUS_STEP = 0.01
RADIUS_CAP = 1. - 1e-6
BISECTION_TOL = 1e-10
MAX_EXPORT_RADIUS = 0.9
SINGULAR_ARC = 1e-3

STARLIKE_RADIUS = 3. - 2. * math.sqrt(2.)
KIRWAN_RADIUS = math.sqrt(2.) - 1.

logger = logging.getLogger(__name__)


@dataclass
class CheckReport:
    """ Outcome of a predicate evaluated over a grid

    @param passed: verdict
    @param extremal_value: the value deciding the verdict
    @param extremal_point: where extremal_value was attained
    @param grid: sampling grid
    @param tolerance: signed slack applied to the threshold
    @param details: further named diagnostics
    """
    passed: bool
    extremal_value: float
    extremal_point: complex
    grid: Grid
    tolerance: float
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': bool(self.passed),
            'extremal_value': float(self.extremal_value),
            'extremal_point': complex(self.extremal_point),
            'grid': self.grid.to_dict(),
            'tolerance': self.tolerance,
            'details': self.details
        }


@dataclass
class RadiusResult:
    radius: float
    certificate_grid: Dict[str, Any]
    lower_bound_ref: float = STARLIKE_RADIUS
    capped: bool = False
    minimum: float = 0.

    def to_dict(self) -> Dict[str, Any]:
        return {
            'radius': self.radius,
            'certificate_grid': self.certificate_grid,
            'lower_bound_ref': self.lower_bound_ref,
            'capped': self.capped,
            'minimum': self.minimum,
            'passed': self.radius >= self.lower_bound_ref - 1e-6
        }


@dataclass
class BoundaryExtrema:
    component: str
    maximum: float
    argmax: float
    minimum: float
    argmin: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            'component': self.component,
            'max': self.maximum,
            'argmax': self.argmax,
            'min': self.minimum,
            'argmin': self.argmin
        }


@dataclass
class ArclengthBoundReport:
    """ The four integrals bounding the arclength of f(|z| = r) """
    r: float
    integrals: List[float]
    bounds: List[float]
    arclength: float
    max_modulus: float
    total_bound: float

    @property
    def component_passed(self) -> List[bool]:
        return [
            value <= bound * (1. + SIGN_TOLERANCE)
            for value, bound in zip(self.integrals, self.bounds)
        ]

    @property
    def product_passed(self) -> bool:
        return self.arclength <= \
            self.max_modulus * sum(self.integrals) * (1. + SIGN_TOLERANCE)

    @property
    def total_passed(self) -> bool:
        return self.arclength <= self.total_bound * (1. + SIGN_TOLERANCE)

    @property
    def passed(self) -> bool:
        return all(self.component_passed) and self.product_passed and \
            self.total_passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            'r': self.r,
            'integrals': self.integrals,
            'bounds': self.bounds,
            'component_passed': self.component_passed,
            'arclength': self.arclength,
            'max_modulus': self.max_modulus,
            'product_bound': self.max_modulus * sum(self.integrals),
            'total_bound': self.total_bound,
            'passed': self.passed
        }


def _wrap_angle(theta: float) -> float:
    """ Maps an angle onto [-pi, pi) """
    return float((theta + math.pi) % (2. * math.pi) - math.pi)


def _refined_extremum(values: Callable[[np.ndarray], np.ndarray],
                      count: int,
                      maximize: bool = False,
                      excluded: Iterable[float] = (),
                      arc: float = SINGULAR_ARC) -> Tuple[float, float]:
    """ Extremum over theta of a smooth periodic function

    Scans `count` equally spaced angles and refines around the best sample
    with a bounded scalar minimisation. Angles within `arc` of an excluded
    angle are skipped.

    @return: (value, theta)
    """
    sign = -1. if maximize else 1.
    thetas = circle_angles(count)
    keep = np.ones(count, dtype=bool)
    for center in excluded:
        distance = np.abs(np.angle(np.exp(1j * (thetas - center))))
        keep &= distance > arc
    assert np.any(keep), 'every sample falls into an excluded arc'

    thetas = thetas[keep]
    sampled = sign * np.asarray(values(thetas), dtype=float)
    best = int(np.argmin(sampled))
    theta, value = float(thetas[best]), float(sampled[best])

    step = 2. * math.pi / count
    result = minimize_scalar(
        lambda t: sign * float(values(np.array([t]))[0]),
        bounds=(theta - step, theta + step),
        method='bounded',
        options={'xatol': 1e-12})
    if result.success and result.fun < value:
        theta, value = float(result.x), float(result.fun)
    return sign * value, theta


def _direct_sign(phi: ts.TaylorSeries,
                 points: np.ndarray) -> Tuple[float, Optional[complex]]:
    """ min Im(z) Im(phi(z)) over the points off the real axis """
    off_axis = points[np.abs(points.imag) > 0.]
    if off_axis.size == 0:
        return float('inf'), None
    sign = off_axis.imag * np.imag(phi(off_axis))
    worst = int(np.argmin(sign))
    return float(sign[worst]), complex(off_axis[worst])


def typically_real_check(phi: ts.TaylorSeries,
                         grid: Grid = DEFAULT_GRID) -> CheckReport:
    """ Typical realness through the decomposition phi = z p / (1 - z^2)

    Passes when p has real coefficients (|Im p_n| <= 1e-10) and
    min Re p > -1e-9 over the grid. The direct sign test
    min Im(z) Im(phi(z)) over grid points off the real axis is reported in
    the details.

    @raises BadNormalization: phi(0) != 0 or phi'(0) != 1
    """
    if abs(phi[0]) > NORMALIZATION_TOL or \
            abs(phi[1] - 1.) > NORMALIZATION_TOL:
        raise BadNormalization(
            f"typical realness needs phi(0) = 0 and phi'(0) = 1, got "
            f'{phi[0]:.3g} and {phi[1]:.6g}')
    grid = grid.within(phi.radius_hint)
    p = herglotz_part(phi)
    points = grid.points()

    real_parts = np.real(p(points))
    worst = int(np.argmin(real_parts))
    max_imag = p.max_imag()

    sign_min, sign_point = _direct_sign(phi, points)

    real_coefficients = max_imag <= REAL_COEFFICIENT_TOL
    positive = real_parts[worst] > -SIGN_TOLERANCE
    report = CheckReport(passed=real_coefficients and positive,
                         extremal_value=float(real_parts[worst]),
                         extremal_point=complex(points[worst]),
                         grid=grid,
                         tolerance=SIGN_TOLERANCE,
                         details={
                             'max_imag_coefficient': max_imag,
                             'real_coefficients': real_coefficients,
                             'herglotz_positive': bool(positive),
                             'direct_sign_min': sign_min,
                             'direct_sign_point': sign_point
                         })
    logger.debug('typical realness: passed=%s, min Re p=%.6g at %s',
                 report.passed, report.extremal_value, report.extremal_point)
    return report


def starlike_functional(m: LogharmonicMap, z, strict: bool = False):
    """ Re[(1 - a)/(1 + a) z phi'/phi], which is 1 at the origin

    @raises OriginEvaluation: z = 0 and strict is set
    """
    scalar = np.ndim(z) == 0
    points = np.atleast_1d(np.asarray(z, dtype=complex))
    at_origin = points == 0
    if strict and np.any(at_origin):
        raise OriginEvaluation('the starlike functional at 0 is a limit')

    logarithmic = np.ones_like(points)
    off = ~at_origin
    logarithmic[off] = points[off] * m.phi_prime(points[off]) / \
        m.phi(points[off])
    a = m.a(points)
    values = np.real((1. - a) / (1. + a) * logarithmic)
    return float(values[0]) if scalar else values


def starlike_functional_wirtinger(m: LogharmonicMap, z):
    """ Re[(z f_z - conj(z) f_zbar) / f] from the Wirtinger derivatives """
    scalar = np.ndim(z) == 0
    points = np.atleast_1d(np.asarray(z, dtype=complex))
    f, f_z, f_zbar = eval_wirtinger(m, points)
    values = np.ones(points.shape)
    off = points != 0
    values[off] = np.real(
        (points[off] * f_z[off] - np.conj(points[off]) * f_zbar[off]) /
        f[off])
    return float(values[0]) if scalar else values


def _circle_minimum(m: LogharmonicMap, r: float,
                    angles: int) -> Tuple[float, float]:
    return _refined_extremum(
        lambda thetas: starlike_functional(m, r * np.exp(1j * thetas)),
        angles)


def trusted_radius(m: LogharmonicMap,
                   tolerance: float = ts.TAIL_TOLERANCE) -> float:
    """ Largest r where the tails of phi, phi' and a are at most tolerance """
    return min(
        ts.trusted_radius(s, tolerance, upper=m.radius_hint)
        for s in (m.phi, m.phi_prime, m.a))


def radius_of_starlikeness(m: LogharmonicMap,
                           angles: int = RADIUS_ANGLES,
                           step: float = RADIUS_STEP,
                           tolerance: float = SIGN_TOLERANCE,
                           require_typically_real: bool = True,
                           grid: Grid = DEFAULT_GRID) -> RadiusResult:
    """ Largest r such that the functional is >= -tolerance for |z| <= r

    Circles are stepped outwards from `step` until the first failure, then
    the boundary is bisected. The search is capped at the trusted radius of
    m, where the truncation tails of phi, phi' and a stay below 1e-9; when
    no circle fails up to the cap, `capped` is set.

    @raises NotTypicallyReal: the rotation is not typically real and
        require_typically_real is set
    """
    if require_typically_real:
        report = typically_real_check(m.phi, grid=grid)
        if not report.passed:
            raise NotTypicallyReal(
                f'rotation is not typically real (min Re p = '
                f'{report.extremal_value:.6g})')

    cap = min(trusted_radius(m), RADIUS_CAP)
    if cap < m.radius_hint:
        logger.info('truncation tails cap the search at r = %.6g', cap)
    certificate = {
        'angles': angles,
        'step': step,
        'tolerance': tolerance,
        'trusted_radius': cap
    }
    good, good_minimum = 0., 1.
    failed = None
    r = step
    while failed is None:
        r = min(r, cap)
        minimum, _ = _circle_minimum(m, r, angles)
        if minimum < -tolerance:
            failed = r
        else:
            good, good_minimum = r, minimum
            if r >= cap:
                break
            r += step

    if failed is None:
        logger.info('starlike on every circle up to the cap %.6g', cap)
        return RadiusResult(radius=cap,
                            certificate_grid=certificate,
                            capped=True,
                            minimum=good_minimum)

    low, high = good, failed
    while high - low > BISECTION_TOL:
        middle = .5 * (low + high)
        minimum, _ = _circle_minimum(m, middle, angles)
        logger.debug('bisection [%.12f, %.12f]: min %.3g', low, high, minimum)
        if minimum < -tolerance:
            high = middle
        else:
            low, good_minimum = middle, minimum
    logger.info('radius of starlikeness %.10f', low)
    return RadiusResult(radius=low,
                        certificate_grid=certificate,
                        minimum=good_minimum)


def _check_circle(r: float) -> None:
    if not 0. < r <= MAX_EXPORT_RADIUS:
        raise OutsideRadius(
            f'r must lie in (0, {MAX_EXPORT_RADIUS}], got {r}')


def arclength(m: LogharmonicMap, r: float,
              angles: int = ARCLENGTH_ANGLES) -> float:
    """ Length of the image of |z| = r, by the periodic trapezoid rule

    @raises OutsideRadius: r outside (0, 0.9]
    """
    _check_circle(r)
    points = r * np.exp(1j * circle_angles(angles))
    _, f_z, f_zbar = eval_wirtinger(m, points)
    speed = np.abs(points * f_z - np.conj(points) * f_zbar)
    return float(2. * math.pi * np.mean(speed))


def max_modulus(m: LogharmonicMap, r: float,
                angles: int = RADIUS_ANGLES) -> float:
    """ max |f| on |z| = r, which equals max |phi| """
    _check_circle(r)
    value, _ = _refined_extremum(
        lambda thetas: np.abs(m.phi(r * np.exp(1j * thetas))),
        angles,
        maximize=True)
    return value


def arclength_total_bound(modulus: float, r: float) -> float:
    """ 4 pi M(r) (1 + r + 2r^2 - 2r^3) / ((1 - r)(1 - r^2)) """
    return 4. * math.pi * modulus * (1. + r + 2. * r**2 - 2. * r**3) / \
        ((1. - r) * (1. - r**2))


def arclength_bound_report(m: LogharmonicMap,
                           r: float,
                           angles: int = ARCLENGTH_ANGLES,
                           grid: Grid = DEFAULT_GRID) -> ArclengthBoundReport:
    """ Splits the arclength integrand into four bounded integrals

    With k = (1 - a)/(1 + a) and m2 = (1 + z^2)/(1 - z^2):

        I1 = int |Re k z p'/p|,  I2 = int |Re k m2|,
        I3 = int |Im z p'/p|,    I4 = int |Im m2|.

    @raises NotTypicallyReal: the rotation is not typically real
    """
    _check_circle(r)
    report = typically_real_check(m.phi, grid=grid)
    if not report.passed:
        raise NotTypicallyReal('the arclength bound needs a typically real '
                               'rotation')

    p = herglotz_part(m.phi)
    points = r * np.exp(1j * circle_angles(angles))
    a = m.a(points)
    k = (1. - a) / (1. + a)
    herglotz_term = points * p.derivative()(points) / p(points)
    mobius = (1. + points**2) / (1. - points**2)

    def integral(values: np.ndarray) -> float:
        return float(2. * math.pi * np.mean(np.abs(values)))

    integrals = [
        integral(np.real(k * herglotz_term)),
        integral(np.real(k * mobius)),
        integral(np.imag(herglotz_term)),
        integral(np.imag(mobius))
    ]
    bounds = [
        4. * math.pi * r / (1. - r)**2,
        2. * math.pi * (1. + 3. * r**2) / (1. - r**2),
        4. * math.pi * r / (1. - r**2),
        2. * math.pi * (1. + r**2) / (1. - r**2)
    ]
    modulus = max_modulus(m, r, angles)
    return ArclengthBoundReport(r=r,
                                integrals=integrals,
                                bounds=bounds,
                                arclength=arclength(m, r, angles),
                                max_modulus=modulus,
                                total_bound=arclength_total_bound(
                                    modulus, r))


def boundary_image_extrema(closed_form: Callable,
                           component: str = 'im',
                           samples: int = EXTREMA_SAMPLES,
                           singularities: Iterable[complex] = ()
                           ) -> BoundaryExtrema:
    """ Extrema of Re or Im of F(e^{it}) over the unit circle

    @param closed_form: exact map, typically a ClosedFormMap
    @param component: 're' or 'im'
    @param singularities: points of the circle to keep a 1e-3 arc away from
    @return: extrema with their angles in [-pi, pi)
    """
    assert component in ('re', 'im'), \
        f"component must be 're' or 'im', got {component!r}"
    part = np.real if component == 're' else np.imag

    def values(thetas: np.ndarray) -> np.ndarray:
        return part(closed_form(np.exp(1j * thetas)))

    excluded = [float(np.angle(point)) for point in singularities]
    maximum, argmax = _refined_extremum(values,
                                        samples,
                                        maximize=True,
                                        excluded=excluded)
    minimum, argmin = _refined_extremum(values, samples, excluded=excluded)
    return BoundaryExtrema(component=component,
                           maximum=maximum,
                           argmax=_wrap_angle(argmax),
                           minimum=minimum,
                           argmin=_wrap_angle(argmin))


def _max_imag_coefficient(m: LogharmonicMap) -> float:
    return max(m.a.max_imag(), m.g.max_imag(), m.h.max_imag())


def symmetry_check(m: LogharmonicMap,
                   grid: Grid = DEFAULT_GRID,
                   closed_form: Optional[ClosedFormMap] = None,
                   singularities: Iterable[complex] = ()) -> CheckReport:
    """ Real coefficients of a, g, h and f(conj z) = conj f(z) on the grid

    When a closed form of the map is given, the extrema of Im F on the unit
    circle are added to the details.
    """
    grid = grid.within(m.radius_hint)
    points = grid.points()
    values = m(points)
    mirrored = m(np.conj(points))
    deviation = np.abs(mirrored - np.conj(values))
    worst = int(np.argmax(deviation))

    max_imag = _max_imag_coefficient(m)
    coefficients_real = max_imag <= REAL_COEFFICIENT_TOL
    pointwise = bool(deviation[worst] <= SYMMETRY_POINT_TOL)
    details = {
        'max_imag_coefficient': max_imag,
        'coefficient_test_passed': coefficients_real,
        'pointwise_test_passed': pointwise
    }
    if closed_form is not None:
        details['boundary_extrema'] = boundary_image_extrema(
            closed_form, 'im', singularities=singularities).to_dict()

    return CheckReport(passed=coefficients_real and pointwise,
                       extremal_value=float(deviation[worst]),
                       extremal_point=complex(points[worst]),
                       grid=grid,
                       tolerance=SYMMETRY_POINT_TOL,
                       details=details)


def membership_TLh(phi: ts.TaylorSeries,
                   a: ts.TaylorSeries,
                   grid: Grid = DEFAULT_GRID) -> CheckReport:
    """ Membership in the class of logharmonic maps with typically real
    rotation; failures are reported, never raised
    """
    grid = grid.within(min(phi.radius_hint, a.radius_hint))
    details: Dict[str, Any] = {}
    failed = CheckReport(passed=False,
                         extremal_value=float('nan'),
                         extremal_point=0j,
                         grid=grid,
                         tolerance=SIGN_TOLERANCE,
                         details=details)
    try:
        typical = typically_real_check(phi, grid=grid)
    except LogharmonicError as exc:
        details['error'] = f'{exc.__class__.__name__}: {exc}'
        return failed
    details['typically_real'] = typical.passed
    failed.extremal_value = typical.extremal_value
    failed.extremal_point = typical.extremal_point
    if not typical.passed:
        return failed

    try:
        m = construct_map(phi, a)
    except LogharmonicError as exc:
        details['constructed'] = False
        details['error'] = f'{exc.__class__.__name__}: {exc}'
        return failed
    details['constructed'] = True

    points = grid.points()
    min_h = float(np.min(np.abs(m.h(points))))
    min_g = float(np.min(np.abs(m.g(points))))
    max_a = float(np.max(np.abs(m.a(points))))
    details.update({
        'min_abs_h': min_h,
        'min_abs_g': min_g,
        'max_abs_a': max_a,
        'nonvanishing': min(min_h, min_g) > NONVANISHING_TOL,
        'sense_preserving': max_a < 1.
    })
    return CheckReport(passed=details['nonvanishing']
                       and details['sense_preserving'],
                       extremal_value=typical.extremal_value,
                       extremal_point=typical.extremal_point,
                       grid=grid,
                       tolerance=SIGN_TOLERANCE,
                       details=details)


def alternate_g(m: LogharmonicMap) -> ts.TaylorSeries:
    """ g = exp(int_0^z a/(1 - a) psi'/psi dt) with psi = z h / g """
    big_psi = ts.unshift(psi_series(m))
    ratio = m.a / (1. - m.a)
    integrand = ts.unshift(ratio) + ratio * (big_psi.derivative() / big_psi)
    return integrand.antiderivative().exp()


def final_theorem_check(m: LogharmonicMap,
                        grid: Grid = DEFAULT_GRID) -> CheckReport:
    """ Real-coefficient maps: Im(z) Im(phi(z)) >= 0 for |z| < sqrt(2) - 1

    Also rebuilds g from psi = z h / g and compares the first half of its
    coefficients with the constructed g (relative tolerance 1e-8).

    @raises PreconditionFailed: a, g or h has non-real coefficients
    """
    max_imag = _max_imag_coefficient(m)
    if max_imag > REAL_COEFFICIENT_TOL:
        raise PreconditionFailed(
            f'a, g and h need real coefficients, found imaginary parts up '
            f'to {max_imag:.3g}')

    grid = grid.restricted(KIRWAN_RADIUS).within(m.radius_hint)
    sign_min, sign_point = _direct_sign(m.phi, grid.points())
    positive = sign_min >= -SIGN_TOLERANCE

    rebuilt = alternate_g(m)
    order = min(rebuilt.order, m.g.order) // 2
    reference = m.g.coeffs[:order + 1]
    mismatch = np.abs(rebuilt.coeffs[:order + 1] - reference) / \
        np.maximum(1., np.abs(reference))
    g_matches = bool(np.max(mismatch) <= ALTERNATE_G_TOL)

    return CheckReport(passed=positive and g_matches,
                       extremal_value=sign_min,
                       extremal_point=sign_point or 0j,
                       grid=grid,
                       tolerance=SIGN_TOLERANCE,
                       details={
                           'alternate_g_max_mismatch': float(
                               np.max(mismatch)),
                           'alternate_g_matches': g_matches,
                           'radius_bound': KIRWAN_RADIUS
                       })


def starlike_psi_check(m: LogharmonicMap,
                       grid: Grid = DEFAULT_GRID) -> CheckReport:
    """ min Re(z psi'/psi) > -1e-9 over the grid, psi = z h / g """
    grid = grid.within(m.radius_hint)
    big_psi = ts.unshift(psi_series(m))
    points = grid.points()
    values = np.real(1. +
                     points * big_psi.derivative()(points) / big_psi(points))
    worst = int(np.argmin(values))
    return CheckReport(passed=bool(values[worst] > -SIGN_TOLERANCE),
                       extremal_value=float(values[worst]),
                       extremal_point=complex(points[worst]),
                       grid=grid,
                       tolerance=SIGN_TOLERANCE)
