from . import styling
from .common import atomic_write, parse_radii
from .json_encoder import JSONEncoder, dumps

__all__ = ['styling', 'atomic_write', 'parse_radii', 'JSONEncoder', 'dumps']
