import numpy as np
import pytest

from pylogharmonic import families
from pylogharmonic.expr import parse
from pylogharmonic.grid import Grid


def test_random_instances_are_reproducible():
    first = list(families.random_instances(7, 5))
    second = list(families.random_instances(7, 5))
    for (phi1, a1), (phi2, a2) in zip(first, second):
        assert np.array_equal(phi1.coeffs, phi2.coeffs)
        assert np.array_equal(a1.coeffs, a2.coeffs)

    other = next(families.random_instances(8, 1))
    assert not np.array_equal(other[0].coeffs, first[0][0].coeffs)


def test_random_instances_are_normalized():
    for phi, a in families.random_instances(11, 20):
        assert phi.order == families.RANDOM_ORDER
        assert abs(phi[0]) == 0.
        assert abs(phi[1] - 1.) <= 1e-12
        assert phi.max_imag() == 0.
        assert a[0] == 0.


def test_random_dilatations_stay_in_the_disk():
    points = Grid((.5, .9), 256).points()
    for _, a in families.random_instances(13, 30):
        assert np.max(np.abs(a(points))) < families.MAX_MU


@pytest.mark.parametrize('real', [True, False])
def test_real_flag(real):
    pairs = list(families.random_instances(17, 10, real=real))
    imaginary = max(a.max_imag() for _, a in pairs)
    assert (imaginary == 0.) == real


@pytest.mark.parametrize('fixture', list(families.FIXTURES.values()))
def test_fixture_factors_match_rotation(fixture):
    h, g = fixture.factors()
    points = Grid((.1, .3, .5), 16).points()
    assert np.max(
        np.abs(points * h(points) * g(points) -
               parse(fixture.phi)(points))) <= 1e-9


@pytest.mark.parametrize(
    'fixture',
    [  # yapf fix
        families.EXAMPLE_1,
        families.KOEBE,
        families.IDENTITY,
        families.CANONICAL,
    ])
def test_fixture_build(fixture):
    m = fixture.build()
    assert m.phi.order == fixture.order
    assert m.radius_hint == fixture.radius_hint
    assert m.reconstruction_error() <= 1e-9


def test_fixture_without_factors():
    fixture = families.Fixture(name='bare', phi='z', a='z/2')
    assert fixture.closed_form() is None
    with pytest.raises(AssertionError):
        fixture.factors()


def test_fixture_order_override():
    assert families.EXAMPLE_1.rotation(order=16).order == 16
    assert families.EXAMPLE_2.rotation().order == 160
