# one color per boundary curve, cycled when there are more radii
CURVE_COLORS = [
    'rgb(30,136,229)', 'rgb(255,13,87)', 'rgb(0,0,0)', 'rgb(38,166,91)',
    'rgb(255,152,0)', 'rgb(142,36,170)'
]

TRANSPARENT = 'rgba(0,0,0,0)'
LINE_WIDTH = 1.2


def curve_color(index: int) -> str:
    return CURVE_COLORS[index % len(CURVE_COLORS)]


def matplotlib_color(index: int) -> tuple:
    """ The plotly rgb() string as an RGB tuple in [0, 1] """
    channels = curve_color(index)[4:-1].split(',')
    return tuple(int(channel) / 255. for channel in channels)
