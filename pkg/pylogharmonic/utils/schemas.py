COMMANDS = [
    'construct', 'check-typreal', 'membership', 'factorize',
    'recover-dilatation', 'radius-starlike', 'arclength', 'bound-report',
    'symmetry', 'extrema', 'export-boundary', 'final-theorem'
]

FORMATS = ['json-report', 'csv', 'svg', 'plotly-json']

MIN_ORDER = 8
MAX_ORDER = 512

# expressions may be written as bare YAML numbers, e.g. `a: 0`
EXPRESSION_SCHEMA = {'type': ['string', 'number']}

COMPLEX_POINT_SCHEMA = {
    'oneOf': [
        {
            'type': 'number'
        },
        {
            'type': 'array',
            'minItems': 2,
            'maxItems': 2,
            'items': {
                'type': 'number'
            }
        },
    ]
}

JOB_CONFIG_SCHEMA = {
    'type': 'object',
    'properties': {
        'command': {
            'enum': COMMANDS
        },
        'phi': EXPRESSION_SCHEMA,
        'a': EXPRESSION_SCHEMA,
        'p': EXPRESSION_SCHEMA,
        'h': EXPRESSION_SCHEMA,
        'g': EXPRESSION_SCHEMA,
        'order': {
            'type': 'integer',
            'minimum': MIN_ORDER,
            'maximum': MAX_ORDER
        },
        'radii': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'number',
                'exclusiveMinimum': 0,
                'exclusiveMaximum': 1
            }
        },
        'angles': {
            'type': 'integer',
            'minimum': 1
        },
        'out': {
            'type': 'string'
        },
        'output_path': {
            'type': 'string'
        },
        'format': {
            'enum': FORMATS
        },
        'component': {
            'enum': ['re', 'im']
        },
        'singularities': {
            'type': 'array',
            'items': COMPLEX_POINT_SCHEMA
        },
        'require_typically_real': {
            'type': 'boolean'
        },
    },
    'required': ['command'],
    'additionalProperties': False,
}

# expression fields each command needs; a tuple lists alternatives
REQUIRED_EXPRESSIONS = {
    'construct': [('phi', 'p'), 'a'],
    'check-typreal': [('phi', 'p')],
    'membership': [('phi', 'p'), 'a'],
    'factorize': [('phi', 'p'), 'a'],
    'recover-dilatation': ['h', 'g'],
    'radius-starlike': [('phi', 'p'), 'a'],
    'arclength': [('phi', 'p'), 'a'],
    'bound-report': [('phi', 'p'), 'a'],
    'symmetry': [('phi', 'p'), 'a'],
    'extrema': ['h', 'g'],
    'export-boundary': [('phi', 'h')],
    'final-theorem': [('phi', 'p'), 'a'],
}

REPORT_SCHEMA = {
    'type': 'object',
    'properties': {
        'command': {
            'enum': COMMANDS
        },
        'passed': {
            'type': 'boolean'
        },
        'config': {
            'type': 'object'
        },
        'result': {
            'type': 'object'
        },
        'references': {
            'type': 'object',
            'additionalProperties': {
                'type': 'number'
            }
        },
    },
    'required': ['command', 'passed', 'config', 'result'],
}
