""" Boundary curves f(r e^{i theta}) as CSV, SVG or plotly figure JSON
"""
import io
import json
import logging
from typing import Any, Callable, Dict, List, Sequence, Union

import numpy as np
import pandas as pd

from . import series as ts
from .errors import OutsideRadius
from .grid import Grid
from .logharmonic import ClosedFormMap, LogharmonicMap
from .utils.common import PathLike, atomic_write
from .utils.styling import (LINE_WIDTH, TRANSPARENT, curve_color,
                            matplotlib_color)

MAX_RADIUS = 0.999
TAIL_THRESHOLD = ts.TAIL_TOLERANCE
FLOAT_FORMAT = '%.12g'
CANVAS_UNITS = 1000
MARGIN = 0.05
COLUMNS = ['r', 'theta', 're', 'im']

Source = Union[LogharmonicMap, ClosedFormMap, Callable]

logger = logging.getLogger(__name__)


def _check_radii(radii: Sequence[float]) -> None:
    too_large = [r for r in radii if r > MAX_RADIUS]
    if too_large:
        raise OutsideRadius(
            f'boundary export is capped at r = {MAX_RADIUS}, got '
            f'{too_large}')


def boundary_curves(source: Source, grid: Grid) -> pd.DataFrame:
    """ Rows (r, theta, Re f, Im f), r-major and theta-ascending

    Series maps are evaluated up to r = 0.999 whatever their trusted
    radius; see untrusted_radii for the truncation diagnostics.
    """
    _check_radii(grid.radii)
    if isinstance(source, LogharmonicMap):
        source = source.with_radius_hint(MAX_RADIUS)

    thetas = grid.thetas()
    radii = np.repeat(np.asarray(grid.radii), thetas.size)
    angles = np.tile(thetas, len(grid.radii))
    values = np.asarray(source(radii * np.exp(1j * angles)))
    frame = {
        'r': radii,
        'theta': angles,
        're': values.real,
        'im': values.imag
    }
    return pd.DataFrame(frame, columns=COLUMNS)


def untrusted_radii(m: LogharmonicMap,
                    radii: Sequence[float],
                    threshold: float = TAIL_THRESHOLD
                    ) -> List[Dict[str, Any]]:
    """ Radii where a series of m has a truncation tail above threshold

    A tail of None means the ratio test does not converge at that radius.
    """
    flagged = []
    for r in radii:
        tails = [
            ts.tail_estimate(s, r) for s in (m.phi, m.a, m.integral)
        ]
        worst = None if None in tails else max(tails)
        if worst is None or worst > threshold:
            flagged.append({'r': float(r), 'tail': worst})
    if flagged:
        logger.warning('truncation tail above %.1e at r = %s', threshold,
                       [item['r'] for item in flagged])
    return flagged


def write_csv(curves: pd.DataFrame, path: PathLike) -> None:
    with atomic_write(path) as handle:
        curves.to_csv(handle,
                      index=False,
                      float_format=FLOAT_FORMAT)


def _closed(group: pd.DataFrame):
    re = np.append(group['re'].to_numpy(), group['re'].iloc[0])
    im = np.append(group['im'].to_numpy(), group['im'].iloc[0])
    return re, im


def write_svg(curves: pd.DataFrame, path: PathLike) -> None:
    """ One closed polyline per radius on a 1000 x 1000 canvas """
    import matplotlib
    matplotlib.use('Agg')
    from matplotlib.figure import Figure

    size = CANVAS_UNITS / 72.
    figure = Figure(figsize=(size, size), dpi=72)
    axes = figure.add_axes([0., 0., 1., 1.])
    for index, (r, group) in enumerate(curves.groupby('r', sort=True)):
        re, im = _closed(group)
        axes.plot(re,
                  im,
                  color=matplotlib_color(index),
                  linewidth=LINE_WIDTH,
                  label=f'r = {r:g}')
    axes.set_aspect('equal', adjustable='datalim')
    axes.margins(MARGIN)
    axes.set_axis_off()

    buffer = io.BytesIO()
    with matplotlib.rc_context({'svg.hashsalt': 'pylogharmonic'}):
        figure.savefig(buffer, format='svg', metadata={'Date': None})
    with atomic_write(path, 'wb') as handle:
        handle.write(buffer.getvalue())


def plotly_figure(curves: pd.DataFrame) -> dict:
    import plotly.graph_objects as go

    figure = go.Figure()
    for index, (r, group) in enumerate(curves.groupby('r', sort=True)):
        re, im = _closed(group)
        figure.add_trace(
            go.Scatter(x=re.tolist(),
                       y=im.tolist(),
                       mode='lines',
                       name=f'r = {r:g}',
                       line={
                           'color': curve_color(index),
                           'width': LINE_WIDTH
                       }))
    figure.update_layout(paper_bgcolor=TRANSPARENT,
                         plot_bgcolor=TRANSPARENT,
                         width=CANVAS_UNITS,
                         height=CANVAS_UNITS)
    figure.update_yaxes(scaleanchor='x', scaleratio=1)
    return json.loads(figure.to_json())


def write_plotly(curves: pd.DataFrame, path: PathLike) -> None:
    with atomic_write(path) as handle:
        json.dump(plotly_figure(curves), handle, sort_keys=True)


WRITERS = {'csv': write_csv, 'svg': write_svg, 'plotly-json': write_plotly}


def export_boundary(source: Source, grid: Grid, path: PathLike,
                    fmt: str = 'csv') -> Dict[str, Any]:
    """ Writes the boundary curves and returns a summary for the report

    @param fmt: one of csv, svg, plotly-json
    @raises OutsideRadius: some radius exceeds 0.999
    """
    assert fmt in WRITERS, f'unknown export format {fmt!r}'
    curves = boundary_curves(source, grid)
    WRITERS[fmt](curves, path)

    outer = curves[curves['r'] == curves['r'].max()]
    summary = {
        'rows': len(curves),
        'format': fmt,
        'path': str(path),
        'outer_radius': float(outer['r'].iloc[0]),
        'outer_im_max': float(outer['im'].max()),
        'outer_im_min': float(outer['im'].min()),
        'untrusted_radii': []
    }
    if isinstance(source, LogharmonicMap):
        summary['untrusted_radii'] = untrusted_radii(source, grid.radii)
    logger.info('wrote %d boundary points to %s', len(curves), path)
    return summary
