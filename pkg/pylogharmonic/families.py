""" Worked examples and seeded random instances

Random rotations are convex combinations of dilated extreme points
z / (1 - 2 c rho z + rho^2 z^2) of the typically real class, so their
Herglotz parts have real coefficients and positive real part on the
closed disk. Random dilatations are Schwarz functions mu z or
mu z (z - alpha) / (1 - conj(alpha) z).
"""
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from . import series as ts
from .expr import compile_series, parse
from .logharmonic import ClosedFormMap, LogharmonicMap, construct_map

RANDOM_ORDER = 96
DILATION_RANGE = (0.5, 0.75)
MAX_MU = 0.6
MAX_ALPHA = 0.5


@dataclass(frozen=True)
class Fixture:
    """ A map given by expression texts for its rotation and dilatation

    @param h, g: closed forms of the factors, when known
    @param singularities: points of the unit circle where h or g blow up
    @param radius_hint: largest |z| at which its series are trusted
    @param order: default series order
    """
    name: str
    phi: str
    a: str
    h: Optional[str] = None
    g: Optional[str] = None
    singularities: Tuple[complex, ...] = ()
    radius_hint: float = ts.DEFAULT_RADIUS_HINT
    order: int = ts.DEFAULT_ORDER

    def _compile(self, text: str, order: Optional[int]) -> ts.TaylorSeries:
        return compile_series(parse(text), order or self.order,
                              self.radius_hint)

    def rotation(self, order: Optional[int] = None) -> ts.TaylorSeries:
        return self._compile(self.phi, order)

    def dilatation(self, order: Optional[int] = None) -> ts.TaylorSeries:
        return self._compile(self.a, order)

    def factors(self, order: Optional[int] = None
                ) -> Tuple[ts.TaylorSeries, ts.TaylorSeries]:
        assert self.h is not None and self.g is not None, \
            f'{self.name} has no closed-form factors'
        return self._compile(self.h, order), self._compile(self.g, order)

    def build(self, order: Optional[int] = None) -> LogharmonicMap:
        return construct_map(self.rotation(order), self.dilatation(order))

    def closed_form(self) -> Optional[ClosedFormMap]:
        if self.h is None or self.g is None:
            return None
        return ClosedFormMap.from_text(self.h, self.g)


EXAMPLE_1 = Fixture(name='example-1',
                    phi='z*(1+z^2/9)',
                    a='-i*z*(3+i*z)/((3-i*z)*(3+2i*z))',
                    h='1+i*z/3',
                    g='1-i*z/3')

# exp(4z/(1-z)) has an essential singularity at 1; its coefficients grow
# like exp(4 sqrt(n)), so r = 0.6 needs order 160
EXAMPLE_2 = Fixture(name='example-2',
                    phi='z*exp(4*z/(1-z))',
                    a='z',
                    h='exp(2*z/(1-z))/(1-z)',
                    g='exp(2*z/(1-z))*(1-z)',
                    singularities=(1, ),
                    radius_hint=0.6,
                    order=160)

KOEBE = Fixture(name='koebe',
                phi='z/(1-z)^2',
                a='0',
                h='1/(1-z)^2',
                g='1',
                singularities=(1, ),
                radius_hint=0.8)

IDENTITY = Fixture(name='identity', phi='z', a='0', h='1', g='1')

CANONICAL = Fixture(name='canonical',
                    phi='z/(1-z^2)',
                    a='0',
                    h='1/(1-z^2)',
                    g='1',
                    singularities=(1, -1),
                    radius_hint=0.8)

FIXTURES: Dict[str, Fixture] = {
    fixture.name: fixture
    for fixture in (EXAMPLE_1, EXAMPLE_2, KOEBE, IDENTITY, CANONICAL)
}


def random_rotation(rng: np.random.Generator,
                    order: int = RANDOM_ORDER,
                    terms: int = 3) -> ts.TaylorSeries:
    """ sum_j w_j z / (1 - 2 c_j rho_j z + rho_j^2 z^2), w on the simplex """
    weights = rng.dirichlet(np.ones(terms))
    cosines = rng.uniform(-1., 1., terms)
    dilations = rng.uniform(*DILATION_RANGE, terms)

    z = ts.variable(order)
    phi = ts.zero(order)
    for weight, c, rho in zip(weights, cosines, dilations):
        phi = phi + weight * (z / (1. - 2. * c * rho * z + rho**2 * z * z))
    return phi


def random_dilatation(rng: np.random.Generator,
                      order: int = RANDOM_ORDER,
                      real: bool = False) -> ts.TaylorSeries:
    """ mu z, or mu z (z - alpha)/(1 - conj(alpha) z), with |mu| <= 0.6 """

    def draw(bound: float) -> complex:
        if real:
            return complex(rng.uniform(-bound, bound))
        return bound * np.sqrt(rng.uniform()) * np.exp(
            2j * np.pi * rng.uniform())

    mu = draw(MAX_MU)
    z = ts.variable(order)
    if rng.uniform() < .5:
        return mu * z
    alpha = draw(MAX_ALPHA)
    return mu * z * (z - alpha) / (1. - np.conj(alpha) * z)


def random_instances(seed: int,
                     count: int,
                     order: int = RANDOM_ORDER,
                     real: bool = False
                     ) -> Iterator[Tuple[ts.TaylorSeries, ts.TaylorSeries]]:
    """ Reproducible (phi, a) pairs; real=True keeps a real-coefficient """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield (random_rotation(rng, order),
               random_dilatation(rng, order, real=real))
