"""
JSON schemas for instance files and for every `--json` output of the CLI.
"""

COST = {'oneOf': [{'type': 'integer', 'minimum': 0}, {'const': 'unbounded'}]}
NODE_LIST = {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}}

INSTANCE_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'InstanceFile',
    'type': 'object',
    'required': ['variant', 'n', 'bounds', 'buys'],
    'additionalProperties': False,
    'properties': {
        'variant': {'enum': ['max', 'sum']},
        'n': {'type': 'integer', 'minimum': 1},
        'bounds': {
            'oneOf': [
                {'type': 'integer', 'minimum': 1},
                {'type': 'array', 'items': {'type': 'integer', 'minimum': 1}, 'minItems': 1},
            ]
        },
        'buys': {'type': 'array', 'items': NODE_LIST},
        'meta': {
            'type': 'object',
            'properties': {
                'provenance': {'type': 'string'},
                'params': {'type': 'object'},
                'expected': {
                    'type': 'object',
                    'properties': {
                        'stable': {'type': 'boolean'},
                        'social_cost': {'type': 'integer'},
                        'diameter': {'type': 'integer'},
                        'optimum': {'type': 'integer'},
                    },
                    'additionalProperties': False,
                },
            },
        },
    },
}

PLAYER_RECORD_SCHEMA = {
    'type': 'object',
    'required': ['player', 'current_cost', 'best_cost', 'status', 'deviation'],
    'properties': {
        'player': {'type': 'integer', 'minimum': 0},
        'current_cost': COST,
        'best_cost': {'oneOf': [COST, {'type': 'null'}]},
        'status': {'enum': ['exact', 'heuristic_upper_bound', 'infeasible', None]},
        'deviation': {'oneOf': [NODE_LIST, {'type': 'null'}]},
    },
}

EQUILIBRIUM_REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'EquilibriumReport',
    'type': 'object',
    'required': ['verdict', 'social_cost', 'purchases', 'witness', 'players'],
    'properties': {
        'verdict': {'enum': ['stable', 'unstable', 'unknown']},
        'social_cost': COST,
        'purchases': {'type': 'integer', 'minimum': 0},
        'witness': {'oneOf': [PLAYER_RECORD_SCHEMA, {'type': 'null'}]},
        'players': {'type': 'array', 'items': PLAYER_RECORD_SCHEMA},
    },
}

BEST_RESPONSE_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'BestResponse',
    'type': 'object',
    'required': ['player', 'strategy', 'cost', 'status'],
    'properties': {
        'player': {'type': 'integer', 'minimum': 0},
        'strategy': NODE_LIST,
        'cost': COST,
        'status': {'enum': ['exact', 'heuristic_upper_bound', 'infeasible']},
        'current_cost': COST,
    },
}

DYNAMICS_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'DynamicsResult',
    'type': 'object',
    'required': ['outcome', 'rounds', 'deviations', 'buys'],
    'properties': {
        'outcome': {'enum': ['equilibrium', 'cycle', 'limit']},
        'rounds': {'type': 'integer', 'minimum': 1},
        'deviations': {'type': 'integer', 'minimum': 0},
        'buys': {'type': 'array', 'items': NODE_LIST},
        'repeated_hash': {'type': ['string', 'null']},
        'first_seen': {'type': ['integer', 'null']},
    },
}

CHECK_SCHEMA = {
    'type': 'object',
    'required': ['check', 'verdict', 'measured', 'bound'],
    'properties': {
        'check': {'type': 'string'},
        'verdict': {'enum': ['pass', 'fail', 'skipped', 'not_applicable']},
        'measured': {'type': 'object'},
        'bound': {'type': ['number', 'null']},
        'detail': {'type': 'string'},
    },
}

BOUND_REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'BoundReport',
    'type': 'object',
    'required': ['instance', 'verdict', 'social_cost', 'optimum', 'optimum_kind', 'ratio', 'checks'],
    'properties': {
        'instance': {'type': 'string'},
        'verdict': {'enum': ['stable', 'unstable', 'unknown']},
        'social_cost': COST,
        'optimum': {'type': ['integer', 'null']},
        'optimum_kind': {'enum': ['exact', 'lower_bound', None]},
        'ratio': {'type': ['number', 'null']},
        'checks': {'type': 'array', 'items': CHECK_SCHEMA},
    },
}
