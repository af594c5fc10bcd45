"""
Fixture Catalog
Named, versioned JSON fixtures for cocycles, Morita witnesses, D8 modules
and the published braiding data
"""

import copy
import json

import config
from cocycles import CocycleParams
from errors import FixtureError
from groups import build_abelian
from morita import MoritaWitness, carry_split_params, carry_split_witness
from nichols import (D8_MODULE_SPECS, PUBLISHED_MATRICES, PUBLISHED_SKELETONS,
                     module_from_json)

FIXTURE_VERSION = 1

PAIR_DEFECT_WITNESSES = [
    (('M1', 'M3'), ('1u1', '1w1')), (('M1', 'M4'), ('1u1', 'xw2')),
    (('M1', 'M5'), ('1u1', '1w3')), (('M1', 'M6'), ('1u1', 'xw4')),
    (('M2', 'M3'), ('1v', 'xw1')), (('M2', 'M4'), ('1v', 'xw2')),
    (('M2', 'M5'), ('1v', '1w3')), (('M2', 'M6'), ('1v', '1w4')),
    (('M3', 'M4'), ('1w1', 'xw2')), (('M3', 'M5'), ('1w1', 'xw3')),
    (('M3', 'M6'), ('1w1', 'xw4')), (('M4', 'M5'), ('1w2', 'xw3')),
    (('M4', 'M6'), ('1w2', 'xw4')), (('M5', 'M6'), ('1w3', 'xw4')),
]

SKELETON_TRIPLES = {
    'two-solid-triangle': [[1, 3, 5], [1, 3, 6], [1, 4, 5], [1, 4, 6]],
    'one-solid-triangle': [[2, 3, 4], [3, 4, 5], [3, 4, 6], [3, 5, 6], [4, 5, 6], [2, 5, 6]],
    'dashed-triangle': [[2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6]],
}

DIAGONAL_TRIPLES = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 5, 6]]

# Adjoint ranks 4, 2, 0 both ways: Cartan entries -2, so these pairs break the skeleton rule
CARTAN_DISCREPANCY_PAIRS = [('M3', 'M6'), ('M4', 'M5')]


def _z2cubed():
    return build_abelian([2, 2, 2])


def _catalog():
    entries = {
        'z2cubed-a123': ('cocycle_params',
                         CocycleParams(_z2cubed(), (0, 0, 0), {}, {(1, 2, 3): 1}).to_json()),
        'trivial': ('cocycle_params', CocycleParams.zero(_z2cubed()).to_json()),
        'example-3-7': ('morita_witness', {'params': carry_split_params().to_json(),
                                           'witness': carry_split_witness().to_json()}),
        'cyclic-grid': ('cyclic_grid', {'pairs': [[m, a] for m in range(2, config.MAX_GRID_M + 1)
                                                  for a in range(1, m)]}),
        'pair-defect-witnesses': ('defect_witnesses',
                                  [{'pair': list(p), 'witness': list(w)}
                                   for p, w in PAIR_DEFECT_WITNESSES]),
        'triple-routes': ('triple_routes', {'diagonal': DIAGONAL_TRIPLES,
                                            'skeleton': SKELETON_TRIPLES,
                                            'cartan_discrepancies': [list(p) for p in CARTAN_DISCREPANCY_PAIRS],
                                            'signatures': {k: [v[0], [list(e) for e in v[1]]]
                                                           for k, v in PUBLISHED_SKELETONS.items()}}),
    }
    for name, spec in D8_MODULE_SPECS.items():
        entries[name] = ('yd_module', spec)
    for name, entry in PUBLISHED_MATRICES.items():
        entries[name] = ('braiding_matrix', entry)
    return {name: {'name': name, 'version': FIXTURE_VERSION, 'kind': kind, 'data': data}
            for name, (kind, data) in entries.items()}


def fixture_names():
    return sorted(_catalog())


def fixture(name):
    """Raw fixture record {name, version, kind, data}"""
    catalog = _catalog()
    if name not in catalog:
        raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(sorted(catalog))}")
    return copy.deepcopy(catalog[name])


def fixture_to_json(name):
    return json.dumps(fixture(name), sort_keys=True)


def fixture_from_json(text):
    """Parse and validate a serialized fixture record"""
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise FixtureError(f"fixture is not valid JSON: {e}") from e
    missing = {'name', 'version', 'kind', 'data'} - set(record)
    if missing:
        raise FixtureError(f"fixture record lacks {sorted(missing)}")
    if record['version'] != FIXTURE_VERSION:
        raise FixtureError(f"unsupported fixture version {record['version']}")
    return record


def build(record):
    """
    Domain object for a fixture record

    Returns:
        CocycleParams, (CocycleParams, MoritaWitness), YDModule, or the raw data
    """
    kind, data = record['kind'], record['data']
    try:
        if kind == 'cocycle_params':
            return CocycleParams.from_json(data)
        if kind == 'morita_witness':
            return CocycleParams.from_json(data['params']), MoritaWitness.from_json(data['witness'])
        if kind == 'yd_module':
            return module_from_json(data, name=record['name'])
    except (KeyError, TypeError, ValueError) as e:
        raise FixtureError(f"fixture {record['name']!r} does not match its schema: {e}") from e
    return data


def load(name):
    return build(fixture(name))
