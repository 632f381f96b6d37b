import json

import numpy as np


class JSONEncoder(json.JSONEncoder):
    """ Encodes complex numbers as {"re": .., "im": ..} and numpy values as
    their Python counterparts
    """

    def default(self, obj: object):
        if isinstance(obj, (complex, np.complexfloating)):
            return {'re': float(obj.real), 'im': float(obj.imag)}
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        return super().default(obj)


def dumps(payload: object) -> str:
    """ Deterministic JSON text: sorted keys, fixed indentation """
    return json.dumps(payload, cls=JSONEncoder, sort_keys=True, indent=2)
