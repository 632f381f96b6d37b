""" Polar sampling grids over the unit disk
"""
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
DEFAULT_ANGLES = 64


@dataclass(frozen=True)
class Grid:
    """ radii x equally spaced angles theta_k = 2 pi k / angles """
    radii: Tuple[float, ...] = DEFAULT_RADII
    angles: int = DEFAULT_ANGLES

    def __post_init__(self):
        object.__setattr__(self, 'radii', tuple(float(r) for r in self.radii))
        assert self.radii, 'a grid needs at least one radius'
        assert all(0. < r < 1. for r in self.radii), \
            f'grid radii must lie in (0, 1), got {self.radii}'
        assert self.angles >= 1, f'angles must be positive, got {self.angles}'

    def thetas(self) -> np.ndarray:
        return circle_angles(self.angles)

    def points(self) -> np.ndarray:
        """ Complex points, radius-major and angle-ascending """
        radii = np.asarray(self.radii)[:, None]
        return (radii * np.exp(1j * self.thetas())[None, :]).ravel()

    def restricted(self, below: float) -> 'Grid':
        """ Radii strictly below `below`, or the circle at half of it """
        radii = tuple(r for r in self.radii if r < below)
        return Grid(radii or (below / 2., ), self.angles)

    def within(self, radius: float) -> 'Grid':
        """ Radii <= radius; falls back to the single circle |z| = radius """
        radii = tuple(r for r in self.radii if r <= radius)
        return Grid(radii or (radius, ), self.angles)

    def to_dict(self) -> Dict[str, Any]:
        return {'radii': list(self.radii), 'angles': self.angles}


DEFAULT_GRID = Grid()


def circle_angles(count: int) -> np.ndarray:
    return 2. * np.pi * np.arange(count) / count


def circle_points(r: float, count: int) -> np.ndarray:
    return r * np.exp(1j * circle_angles(count))
