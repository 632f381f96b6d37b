import math

import numpy as np
import pytest

from pylogharmonic import analysis, families
from pylogharmonic import series as ts
from pylogharmonic.errors import (BadNormalization, DivisionNearZero,
                                  NotTypicallyReal, OriginEvaluation,
                                  OutsideRadius, PreconditionFailed)
from pylogharmonic.expr import compile_series, parse
from pylogharmonic.grid import DEFAULT_GRID, Grid
from pylogharmonic.logharmonic import (ClosedFormMap, construct_map,
                                       corollary1_transform)

INNER_GRID = Grid((.1, .2, .3, .4, .5, .6, .7))
RADIUS_SLACK = 1e-6
CIRCLE_RADII = (.1, .2, .3, .4, .5, .6, .7, .8, .9)


def _series(text, order=ts.DEFAULT_ORDER):
    return compile_series(parse(text), order)


def _map(phi, a='0'):
    return construct_map(_series(phi), _series(a))


@pytest.mark.parametrize('phi', ['z*(1+z^2/9)', 'z', 'z/(1-z^2)'])
def test_typically_real_rotations_pass(phi):
    report = analysis.typically_real_check(_series(phi))
    assert report.passed
    assert report.details['direct_sign_min'] >= -analysis.SIGN_TOLERANCE


def test_example_2_is_not_typically_real():
    report = analysis.typically_real_check(families.EXAMPLE_2.rotation())
    assert not report.passed
    assert report.extremal_value < 0.
    assert abs(report.extremal_point) <= families.EXAMPLE_2.radius_hint


def test_example_2_witness_value():
    z1 = (1. - 2. / math.pi) + 2j / math.pi
    herglotz = parse('(1-z^2)*exp(4*z/(1-z))')
    # 4 z1 / (1 - z1) = (pi - 4) + i pi
    expected = -4. / math.pi * math.exp(math.pi - 4.)
    assert abs(herglotz(z1).real - expected) <= 1e-9
    assert herglotz(z1).real < 0.


def test_typically_real_check_rejects_unnormalized_rotation():
    with pytest.raises(BadNormalization):
        analysis.typically_real_check(_series('2*z'))


def test_non_real_rotation_fails():
    report = analysis.typically_real_check(_series('z+i*z^2/10'))
    assert not report.passed
    assert not report.details['real_coefficients']


def test_direct_sign_follows_from_decomposition(random_pairs):
    for phi, _ in random_pairs:
        report = analysis.typically_real_check(phi)
        assert report.passed
        assert report.details['direct_sign_min'] >= -analysis.SIGN_TOLERANCE


def test_starlike_functional_of_identity():
    m = _map('z')
    points = DEFAULT_GRID.points()
    assert np.allclose(analysis.starlike_functional(m, points), 1.)


def test_starlike_functional_of_canonical_rotation():
    m = _map('z/(1-z^2)')
    points = Grid((.1, .3, .5)).points()
    expected = np.real((1. + points**2) / (1. - points**2))
    assert np.max(np.abs(analysis.starlike_functional(m, points) -
                         expected)) <= 1e-10
    assert np.all(expected > 0.)


def test_starlike_functional_example_1(example_1_map):
    z = .17 * np.exp(1j * math.pi / 3)
    assert .17 < analysis.STARLIKE_RADIUS
    assert analysis.starlike_functional(example_1_map, z) > 0.


def test_starlike_functional_at_origin(example_1_map):
    assert analysis.starlike_functional(example_1_map, 0.) == 1.
    assert analysis.starlike_functional_wirtinger(example_1_map, 0.) == 1.
    with pytest.raises(OriginEvaluation):
        analysis.starlike_functional(example_1_map, 0., strict=True)


def test_starlike_functional_routes_agree(random_maps):
    points = INNER_GRID.points()
    for m in random_maps:
        series_route = analysis.starlike_functional(m, points)
        wirtinger_route = analysis.starlike_functional_wirtinger(m, points)
        assert np.max(np.abs(series_route - wirtinger_route)) <= 1e-9


def test_radius_of_starlikeness_is_capped_when_never_failing():
    m = families.CANONICAL.build()
    result = analysis.radius_of_starlikeness(m)
    assert result.capped
    assert result.radius == pytest.approx(analysis.trusted_radius(m))
    assert .6 < result.radius <= families.CANONICAL.radius_hint
    assert result.certificate_grid['trusted_radius'] == result.radius
    assert result.to_dict()['passed']


def test_radius_of_starlikeness_stops_where_the_tail_is_trusted():
    # Re[(1 + z^2)/(1 - z^2)] > 0 on the whole disk, but the order 64
    # polynomial z + z^3 + ... + z^63 is not starlike near r = 0.9
    m = _map('z/(1-z^2)')
    assert m.radius_hint == ts.DEFAULT_RADIUS_HINT
    result = analysis.radius_of_starlikeness(m)
    assert result.capped
    assert result.radius < .9
    for s in (m.phi, m.phi_prime, m.a):
        assert ts.tail_estimate(s, result.radius) <= ts.TAIL_TOLERANCE
    assert ts.tail_estimate(m.phi_prime, result.radius + 1e-6) > \
        ts.TAIL_TOLERANCE


def test_radius_of_starlikeness_example_1(example_1_map):
    result = analysis.radius_of_starlikeness(example_1_map)
    assert result.radius >= analysis.STARLIKE_RADIUS - RADIUS_SLACK
    assert result.lower_bound_ref == analysis.STARLIKE_RADIUS


def test_radius_of_starlikeness_lower_bound(random_maps):
    for m in random_maps:
        result = analysis.radius_of_starlikeness(m, angles=1024, step=.02)
        assert result.radius >= analysis.STARLIKE_RADIUS - RADIUS_SLACK


def test_radius_of_starlikeness_analytic_variant(random_pairs):
    for phi, _ in random_pairs[:20]:
        m = construct_map(phi, ts.zero(phi.order))
        result = analysis.radius_of_starlikeness(m, angles=1024, step=.02)
        assert result.radius >= analysis.KIRWAN_RADIUS - RADIUS_SLACK


def test_radius_of_starlikeness_outside_the_class(example_2_map):
    with pytest.raises(NotTypicallyReal):
        analysis.radius_of_starlikeness(example_2_map)
    result = analysis.radius_of_starlikeness(example_2_map,
                                             angles=1024,
                                             require_typically_real=False)
    # Re[(1 + z)/(1 - z)] > 0, so no circle fails before the trusted radius
    assert result.capped
    assert result.radius == pytest.approx(families.EXAMPLE_2.radius_hint)


def test_radius_bisection_finds_the_boundary():
    m = _map('z-z^2')
    result = analysis.radius_of_starlikeness(m,
                                             angles=1024,
                                             require_typically_real=False)
    assert not result.capped
    # z phi'/phi = (1 - 2z)/(1 - z) first vanishes on the real axis
    assert result.radius == pytest.approx(.5, abs=1e-6)


def test_arclength_of_identity():
    assert analysis.arclength(_map('z'), .5) == pytest.approx(math.pi,
                                                              abs=1e-12)


def test_arclength_matches_dense_quadrature():
    r = .3
    m = _map('z/(1-z^2)')
    dense = r * np.exp(2j * math.pi * np.arange(65536) / 65536)
    oracle = 2. * math.pi * np.mean(
        np.abs(dense * (1. + dense**2) / (1. - dense**2)**2))
    assert analysis.arclength(m, r) == pytest.approx(oracle, rel=1e-7)


def test_arclength_quadrature_is_converged(example_1_map, random_maps):
    for m in [example_1_map] + random_maps:
        for r in CIRCLE_RADII:
            coarse = analysis.arclength(m, r)
            fine = analysis.arclength(m, r, angles=8192)
            assert abs(fine - coarse) <= 1e-7 * fine


def test_arclength_example_1_bound(example_1_map):
    r = .5
    modulus = analysis.max_modulus(example_1_map, r)
    assert analysis.arclength(example_1_map, r) <= \
        analysis.arclength_total_bound(modulus, r)


@pytest.mark.parametrize('r', [0., .95, -.1])
def test_arclength_outside_radius(example_1_map, r):
    with pytest.raises(OutsideRadius):
        analysis.arclength(example_1_map, r)


@pytest.mark.parametrize(
    'phi, r, expected',
    [  # yapf fix
        ('z', .4, .4),
        ('z/(1-z^2)', .5, 2. / 3.),
        ('z*(1+z^2/9)', .9, .9 * (1. + .81 / 9.)),
    ])
def test_max_modulus(phi, r, expected):
    assert analysis.max_modulus(_map(phi, 'z/2'), r) == pytest.approx(
        expected, abs=1e-10)


def test_bound_report_without_herglotz_term():
    report = analysis.arclength_bound_report(_map('z/(1-z^2)'), .5)
    assert report.integrals[0] == 0.
    assert report.integrals[2] == 0.
    assert report.passed


def test_bound_report_example_1(example_1_map):
    report = analysis.arclength_bound_report(example_1_map, .5)
    assert all(report.component_passed)
    assert report.product_passed
    assert report.total_passed
    assert report.to_dict()['passed']


def test_bound_report_rejects_example_2(example_2_map):
    with pytest.raises(NotTypicallyReal):
        analysis.arclength_bound_report(example_2_map, .5)


def test_bound_report_holds_for_random_instances(random_maps):
    for m in random_maps:
        for r in DEFAULT_GRID.radii:
            report = analysis.arclength_bound_report(m, r, angles=1024)
            assert report.passed, report.to_dict()


def test_symmetry_example_2(example_2_map):
    report = analysis.symmetry_check(example_2_map)
    assert report.passed
    assert report.details['coefficient_test_passed']
    assert report.details['pointwise_test_passed']


def test_symmetry_example_1(example_1_map):
    report = analysis.symmetry_check(
        example_1_map, closed_form=families.EXAMPLE_1.closed_form())
    assert not report.passed
    assert not report.details['coefficient_test_passed']
    assert not report.details['pointwise_test_passed']

    extrema = report.details['boundary_extrema']
    assert extrema['max'] == pytest.approx(26. / 27., abs=1e-8)
    assert extrema['min'] == pytest.approx(-8. / 9., abs=1e-8)


def test_symmetry_real_analytic_map():
    assert analysis.symmetry_check(_map('z/(1-z)^2')).passed


def test_symmetry_deviation_is_absolute(random_real_maps):
    points = DEFAULT_GRID.points()
    for m in random_real_maps:
        report = analysis.symmetry_check(m)
        deviation = np.abs(m(np.conj(points)) - np.conj(m(points)))
        assert report.extremal_value == pytest.approx(np.max(deviation),
                                                      abs=1e-15)
        assert report.extremal_value <= analysis.SYMMETRY_POINT_TOL


def test_symmetry_tests_agree(random_real_maps, random_maps):
    for m in random_real_maps + random_maps[:10]:
        details = analysis.symmetry_check(m).details
        assert details['coefficient_test_passed'] == \
            details['pointwise_test_passed']


def test_boundary_extrema_example_1():
    extrema = analysis.boundary_image_extrema(
        families.EXAMPLE_1.closed_form())
    assert extrema.maximum == pytest.approx(26. / 27., abs=1e-8)
    assert extrema.minimum == pytest.approx(-8. / 9., abs=1e-8)
    # the maximum is attained at t = arcsin(2/3) and at pi - arcsin(2/3)
    assert math.sin(extrema.argmax) == pytest.approx(2. / 3., abs=1e-6)
    assert extrema.argmin == pytest.approx(-math.pi / 2., abs=1e-6)


def test_boundary_extrema_identity():
    extrema = analysis.boundary_image_extrema(ClosedFormMap.from_text(
        '1', '1'))
    assert extrema.maximum == pytest.approx(1., abs=1e-12)
    assert extrema.argmax == pytest.approx(math.pi / 2., abs=1e-6)
    assert extrema.minimum == pytest.approx(-1., abs=1e-12)
    assert extrema.argmin == pytest.approx(-math.pi / 2., abs=1e-6)
    assert analysis.boundary_image_extrema(ClosedFormMap.from_text(
        '1', '1'), 're').maximum == pytest.approx(1., abs=1e-12)


def test_boundary_extrema_singular_closed_form():
    closed_form = ClosedFormMap.from_text('1/(1-z)', '1')
    with pytest.raises(DivisionNearZero):
        analysis.boundary_image_extrema(closed_form)
    extrema = analysis.boundary_image_extrema(closed_form,
                                              singularities=[1.])
    assert np.isfinite(extrema.maximum)


@pytest.mark.parametrize(
    'fixture, passed',
    [  # yapf fix
        (families.EXAMPLE_1, True),
        (families.EXAMPLE_2, False),
        (families.CANONICAL, True),
    ])
def test_membership(fixture, passed):
    report = analysis.membership_TLh(fixture.rotation(),
                                     fixture.dilatation())
    assert report.passed == passed
    assert report.details['typically_real'] == passed


def test_membership_reports_bad_input():
    report = analysis.membership_TLh(_series('1+z'), _series('z'))
    assert not report.passed
    assert 'BadNormalization' in report.details['error']


def test_corollary1_transform_stays_in_class(random_maps):
    for m in random_maps[:20]:
        transformed = corollary1_transform(m)
        report = analysis.membership_TLh(transformed.phi, transformed.a,
                                         INNER_GRID)
        assert report.passed, report.details


def test_final_theorem_example_2(example_2_map):
    report = analysis.final_theorem_check(example_2_map)
    assert report.passed
    assert report.details['alternate_g_matches']
    assert all(r < analysis.KIRWAN_RADIUS for r in report.grid.radii)


def test_final_theorem_canonical_rotation():
    assert analysis.final_theorem_check(_map('z/(1-z^2)')).passed


def test_final_theorem_alternate_g(random_real_maps):
    for m in random_real_maps:
        report = analysis.final_theorem_check(m)
        assert report.details['alternate_g_matches']


def test_final_theorem_needs_real_coefficients(example_1_map):
    with pytest.raises(PreconditionFailed):
        analysis.final_theorem_check(example_1_map)


@pytest.mark.parametrize('fixture', [families.EXAMPLE_1, families.EXAMPLE_2])
def test_starlike_psi(fixture):
    assert analysis.starlike_psi_check(fixture.build()).passed
