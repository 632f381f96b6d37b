"""Top-level package for pylogharmonic."""

__author__ = """craftworks"""
__email__ = 'dev-accounts@craftworks.at'
__version__ = '0.1.0'

from . import analysis, errors, expr, families, logharmonic, series, utils
from .analysis import (membership_TLh, radius_of_starlikeness,
                       symmetry_check, typically_real_check)
from .expr import compile_series, parse, pointwise_eval
from .grid import DEFAULT_GRID, Grid
from .logharmonic import (ClosedFormMap, LogharmonicMap, construct_map,
                          eval_wirtinger, factorize, recover_dilatation)
from .series import TaylorSeries

__all__ = [
    'analysis', 'errors', 'expr', 'families', 'logharmonic', 'series',
    'utils', 'TaylorSeries', 'Grid', 'DEFAULT_GRID', 'parse',
    'compile_series', 'pointwise_eval', 'LogharmonicMap', 'ClosedFormMap',
    'construct_map', 'factorize', 'recover_dilatation', 'eval_wirtinger',
    'typically_real_check', 'membership_TLh', 'radius_of_starlikeness',
    'symmetry_check'
]
