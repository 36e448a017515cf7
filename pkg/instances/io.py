"""
Instance files: canonical JSON save/load (schema-validated) and graph exports.

Canonical form is sorted keys, two-space indent, sorted node lists, and the
bounds written as a single integer when they are uniform, so save -> load ->
save reproduces the same bytes.
"""

import json
import logging
from typing import Any, Dict

import jsonschema
import networkx as nx

from core.errors import InstanceFormatError
from game.model import GameSpec, StrategyProfile
from instances.instance import ExpectedClaims, Instance, Provenance
from schemas import INSTANCE_SCHEMA
from storage import StorageBackend

logger = logging.getLogger(__name__)


def instance_to_dict(instance: Instance) -> Dict[str, Any]:
    spec = instance.spec
    return {
        'variant': spec.variant.value,
        'n': spec.n,
        'bounds': spec.bounds[0] if spec.is_uniform else list(spec.bounds),
        'buys': instance.profile.to_lists(),
        'meta': {
            'provenance': instance.provenance.name,
            'params': instance.provenance.params,
            'expected': instance.expected.to_dict(),
        },
    }


def instance_from_dict(data: Dict[str, Any]) -> Instance:
    try:
        jsonschema.validate(instance=data, schema=INSTANCE_SCHEMA)
    except jsonschema.ValidationError as e:
        raise InstanceFormatError(f"instance file does not match the schema: {e.message}") from e

    n = data['n']
    bounds = data['bounds']
    if isinstance(bounds, int):
        bounds = [bounds] * n
    if len(bounds) != n:
        raise InstanceFormatError(f"expected {n} bounds, got {len(bounds)}")
    if len(data['buys']) != n:
        raise InstanceFormatError(f"expected {n} strategies, got {len(data['buys'])}")

    meta = data.get('meta', {})
    try:
        spec = GameSpec(data['variant'], tuple(bounds))
        profile = StrategyProfile.from_lists(data['buys'])
    except ValueError as e:
        raise InstanceFormatError(str(e)) from e
    return Instance(
        spec,
        profile,
        Provenance(meta.get('provenance', 'file'), meta.get('params', {})),
        ExpectedClaims.from_dict(meta.get('expected')),
    )


def dumps_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance), sort_keys=True, indent=2) + '\n'


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"invalid JSON: {e}") from e
    return instance_from_dict(data)


def save_instance(storage: StorageBackend, filename: str, instance: Instance):
    if not storage.save_text(filename, dumps_instance(instance)):
        raise OSError(f"could not write instance file {filename}")
    logger.info(f"wrote {instance.provenance.label()} to {filename}")


def load_instance(storage: StorageBackend, filename: str) -> Instance:
    text = storage.get_text(filename)
    if text is None:
        raise InstanceFormatError(f"instance file not found: {filename}")
    return loads_instance(text)


# =============================================================================
# EXPORT
# =============================================================================

def to_dot(instance: Instance) -> str:
    """
    Undirected DOT drawing; each edge points away from the player that bought
    it (dir=both when both endpoints bought it).
    """
    buys = instance.profile.buys
    lines = [f'graph "{instance.provenance.label()}" {{']
    for v in range(instance.n):
        lines.append(f'  {v} [label="{v}\\nb={instance.spec.bound(v)}"];')
    for a, b in instance.graph.edges():
        a_buys, b_buys = b in buys[a], a in buys[b]
        if a_buys and b_buys:
            lines.append(f'  {a} -- {b} [dir=both];')
        elif a_buys:
            lines.append(f'  {a} -- {b} [dir=forward];')
        else:
            lines.append(f'  {b} -- {a} [dir=forward];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_edgelist(instance: Instance) -> str:
    g = instance.graph.to_networkx()
    return '\n'.join(nx.generate_edgelist(g, data=False)) + '\n'
