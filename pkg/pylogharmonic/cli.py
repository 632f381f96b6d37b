""" Command-line front end: YAML job configs in, JSON reports and boundary
curve files out

Exit status is 0 when every check of the job passes, 1 when one fails (the
report is still written) and 2 on input errors.
"""
import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import jsonschema
import numpy as np
import yaml

from . import __version__
from . import analysis, export
from . import series as ts
from .errors import ConfigError
from .expr import BinaryOp, FunctionSpec, Variable, compile_series, parse
from .grid import DEFAULT_ANGLES, DEFAULT_RADII, Grid
from .job_helpers import exit_status, job_call
from .logharmonic import (ClosedFormMap, LogharmonicMap, construct_map,
                          factorize, recover_dilatation)
from .utils.common import atomic_write, parse_radii
from .utils.json_encoder import dumps
from .utils.schemas import (FORMATS, JOB_CONFIG_SCHEMA, REPORT_SCHEMA,
                            REQUIRED_EXPRESSIONS)

EXPRESSION_FIELDS = ('phi', 'a', 'p', 'h', 'g')
EXPORT_FORMATS = ('csv', 'svg', 'plotly-json')
HEAD = 6
IDENTITY_TOL = 1e-10
POINTWISE_TOL = 1e-9
FACTOR_RADIUS = 0.7
QUADRATURE_REL_TOL = 1e-7

logger = logging.getLogger(__name__)


@dataclass
class JobConfig:
    command: str
    phi: Optional[str] = None
    a: Optional[str] = None
    p: Optional[str] = None
    h: Optional[str] = None
    g: Optional[str] = None
    order: int = ts.DEFAULT_ORDER
    radii: Tuple[float, ...] = DEFAULT_RADII
    angles: int = DEFAULT_ANGLES
    output_path: Optional[str] = None
    format: Optional[str] = None
    component: str = 'im'
    singularities: Tuple[complex, ...] = field(default_factory=tuple)
    require_typically_real: bool = True

    @property
    def grid(self) -> Grid:
        return Grid(self.radii, self.angles)

    def to_dict(self) -> Dict[str, Any]:
        return {
            key: value
            for key, value in asdict(self).items() if value is not None
        }


def _validate_schema(data: dict, schema: dict, name: str) -> None:
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as err:
        path = '/'.join(str(item) for item in err.absolute_path)
        raise ConfigError(f'invalid {name}: {err.message}',
                          field=path or None) from err


def load_config(path: str) -> Dict[str, Any]:
    """ Reads a YAML job config

    @raises ConfigError: unreadable file, YAML syntax error (with line) or
        a document that is not a mapping
    """
    try:
        with open(path) as config_file:
            raw = yaml.safe_load(config_file)
    except OSError as err:
        raise ConfigError(f'cannot read config {path}: {err}') from err
    except yaml.YAMLError as err:
        mark = getattr(err, 'problem_mark', None)
        line = mark.line + 1 if mark is not None else None
        raise ConfigError(f'malformed YAML in {path}', line=line) from err
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ConfigError(f'{path} must hold a mapping of job settings')
    return raw


def _complex_point(value) -> complex:
    if isinstance(value, list):
        return complex(value[0], value[1])
    return complex(value)


def make_config(raw: Dict[str, Any],
                overrides: Optional[Dict[str, Any]] = None) -> JobConfig:
    """ Merges command-line overrides into the file values and validates

    @raises ConfigError: schema violation (with the field path) or a
        missing expression for the chosen command
    """
    values = dict(raw)
    values.update({
        key: value
        for key, value in (overrides or {}).items() if value is not None
    })
    if 'out' in values:
        values['output_path'] = values.pop('out')
    _validate_schema(values, JOB_CONFIG_SCHEMA, 'job config')

    for key in EXPRESSION_FIELDS:
        if key in values:
            values[key] = str(values[key])
    command = values['command']
    for required in REQUIRED_EXPRESSIONS[command]:
        choices = required if isinstance(required, tuple) else (required, )
        if not any(key in values for key in choices):
            raise ConfigError(
                f'{command} needs {" or ".join(choices)}', field=choices[0])
    if 'radii' in values:
        values['radii'] = tuple(values['radii'])
    if 'singularities' in values:
        values['singularities'] = tuple(
            _complex_point(point) for point in values['singularities'])
    return JobConfig(**values)


def _series(config: JobConfig, text: str) -> ts.TaylorSeries:
    return compile_series(parse(text), config.order)


def _rotation(config: JobConfig) -> ts.TaylorSeries:
    """ phi, or z p / (1 - z^2) when only the Herglotz part p is given """
    if config.phi is not None:
        return _series(config, config.phi)
    herglotz = parse(config.p)
    ast = BinaryOp('/', BinaryOp('*', Variable(), herglotz.ast),
                   parse('1-z^2').ast)
    return compile_series(FunctionSpec(ast, f'z*({config.p})/(1-z^2)'),
                          config.order)


def _build(config: JobConfig) -> LogharmonicMap:
    return construct_map(_rotation(config), _series(config, config.a))


def _closed_form(config: JobConfig) -> Optional[ClosedFormMap]:
    if config.h is None or config.g is None:
        return None
    return ClosedFormMap.from_text(config.h, config.g)


def _head(s: ts.TaylorSeries) -> List[complex]:
    return [complex(c) for c in s.coeffs[:HEAD]]


def _construct(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    m = _build(config)
    points = config.grid.within(m.radius_hint).points()
    deviation = float(np.max(np.abs(np.abs(m(points)) -
                                    np.abs(m.phi(points)))))
    result = {
        'reconstruction_error': m.reconstruction_error(),
        'max_abs_a': m.max_dilatation(config.grid),
        'modulus_deviation': deviation,
        'g': _head(m.g),
        'h': _head(m.h)
    }
    passed = result['reconstruction_error'] <= IDENTITY_TOL and \
        result['max_abs_a'] < 1. and deviation <= IDENTITY_TOL
    return passed, result


def _check_typreal(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    report = analysis.typically_real_check(_rotation(config), config.grid)
    return report.passed, report.to_dict()


def _membership(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    report = analysis.membership_TLh(_rotation(config),
                                     _series(config, config.a), config.grid)
    return report.passed, report.to_dict()


def _factorize(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    m = _build(config)
    pair = factorize(m, config.grid)
    points = config.grid.within(min(FACTOR_RADIUS, m.radius_hint)).points()
    deviation = float(np.max(np.abs(m(points) - pair(points))))
    return deviation <= POINTWISE_TOL, {
        'product_deviation': deviation,
        'p': _head(pair.w.p)
    }


def _recover_dilatation(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    a = recover_dilatation(_series(config, config.h),
                           _series(config, config.g))
    result: Dict[str, Any] = {'a': _head(a)}
    if config.a is None:
        return True, result
    points = config.grid.within(a.radius_hint).points()
    expected = parse(config.a)(points)
    deviation = float(np.max(np.abs(a(points) - expected)))
    result['deviation'] = deviation
    return deviation <= POINTWISE_TOL, result


def _radius_starlike(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    result = analysis.radius_of_starlikeness(
        _build(config),
        require_typically_real=config.require_typically_real,
        grid=config.grid).to_dict()
    return result['passed'], result


def _arclength(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    m = _build(config)
    circles = []
    for r in config.radii:
        length = analysis.arclength(m, r)
        refined = analysis.arclength(m, r, 2 * analysis.ARCLENGTH_ANGLES)
        modulus = analysis.max_modulus(m, r)
        bound = analysis.arclength_total_bound(modulus, r)
        circles.append({
            'r': r,
            'arclength': length,
            'max_modulus': modulus,
            'bound': bound,
            'quadrature_change': abs(refined - length) / length,
            'passed': length <= bound * (1. + analysis.SIGN_TOLERANCE)
        })
    passed = all(circle['passed'] and
                 circle['quadrature_change'] <= QUADRATURE_REL_TOL
                 for circle in circles)
    return passed, {'circles': circles}


def _bound_report(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    m = _build(config)
    reports = [
        analysis.arclength_bound_report(m, r, grid=config.grid)
        for r in config.radii
    ]
    return all(report.passed for report in reports), {
        'circles': [report.to_dict() for report in reports]
    }


def _symmetry(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    report = analysis.symmetry_check(_build(config),
                                     config.grid,
                                     closed_form=_closed_form(config),
                                     singularities=config.singularities)
    return report.passed, report.to_dict()


def _extrema(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    extrema = analysis.boundary_image_extrema(
        _closed_form(config),
        config.component,
        singularities=config.singularities)
    return True, extrema.to_dict()


def _final_theorem(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    report = analysis.final_theorem_check(_build(config), config.grid)
    return report.passed, report.to_dict()


def export_boundary(config: JobConfig) -> Tuple[bool, Dict[str, Any]]:
    """ Writes the image curves of the configured circles

    Uses the closed form when h and g are given, the series map otherwise.
    """
    fmt = config.format or 'csv'
    if fmt not in EXPORT_FORMATS:
        raise ConfigError(
            f'export-boundary writes {", ".join(EXPORT_FORMATS)}, not '
            f'{fmt}', field='format')
    if config.output_path is None:
        raise ConfigError('export-boundary needs an output path',
                          field='out')
    source = _closed_form(config)
    if source is None:
        if config.a is None:
            raise ConfigError('a series export needs a', field='a')
        source = _build(config)
    return True, export.export_boundary(source, config.grid,
                                        config.output_path, fmt)


JOBS: Dict[str, Callable[[JobConfig], Tuple[bool, Dict[str, Any]]]] = {
    'construct': _construct,
    'check-typreal': _check_typreal,
    'membership': _membership,
    'factorize': _factorize,
    'recover-dilatation': _recover_dilatation,
    'radius-starlike': _radius_starlike,
    'arclength': _arclength,
    'bound-report': _bound_report,
    'symmetry': _symmetry,
    'extrema': _extrema,
    'export-boundary': export_boundary,
    'final-theorem': _final_theorem,
}


def run(config: JobConfig) -> int:
    """ Runs one job and writes its JSON report

    The report goes to the output path for format json-report, to stdout
    otherwise.

    @return: exit status 0 (passed) or 1 (failed)
    """
    passed, result = JOBS[config.command](config)
    report = {
        'command': config.command,
        'passed': bool(passed),
        'config': config.to_dict(),
        'result': result,
        'references': {
            'starlike_radius': analysis.STARLIKE_RADIUS,
            'kirwan_radius': analysis.KIRWAN_RADIUS
        }
    }
    text = dumps(report)
    _validate_schema(json.loads(text), REPORT_SCHEMA, 'report')

    if config.format in (None, 'json-report') and config.output_path:
        with atomic_write(config.output_path) as handle:
            handle.write(text + '\n')
    else:
        sys.stdout.write(text + '\n')
    logger.info('%s: %s', config.command, 'passed' if passed else 'failed')
    return exit_status(passed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pylogharmonic',
        description='Construct and check logharmonic mappings')
    parser.add_argument('--config', help='YAML job config')
    parser.add_argument('--command', help='overrides the config command')
    parser.add_argument('--order', type=int, help='series order (8..512)')
    parser.add_argument('--radii',
                        type=parse_radii,
                        help='comma separated radii, e.g. 0.3,0.6,0.9')
    parser.add_argument('--angles', type=int, help='angles per circle')
    parser.add_argument('--out', help='output path')
    parser.add_argument('--format', choices=FORMATS)
    parser.add_argument('-v', '--verbose', action='store_true')
    parser.add_argument('--version',
                        action='version',
                        version=f'%(prog)s {__version__}')
    return parser


@job_call
def run_from_args(args: argparse.Namespace) -> int:
    raw = load_config(args.config) if args.config else {}
    overrides = {
        'command': args.command,
        'order': args.order,
        'radii': args.radii,
        'angles': args.angles,
        'out': args.out,
        'format': args.format
    }
    return run(make_config(raw, overrides))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    return run_from_args(args)
