"""
Instance = game spec + strategy profile + where it came from + what it is
expected to satisfy.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from core.graph import Graph
from game.costs import build_graph
from game.model import GameSpec, StrategyProfile


@dataclass(frozen=True)
class Provenance:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)

    def label(self) -> str:
        if not self.params:
            return self.name
        args = ','.join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return f"{self.name}({args})"


@dataclass(frozen=True)
class ExpectedClaims:
    """Machine-checkable claims about an instance; None means no claim."""

    stable: Optional[bool] = None
    social_cost: Optional[int] = None
    diameter: Optional[int] = None
    # Social optimum supplied by the construction (needed for non-uniform specs).
    optimum: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in {
            'stable': self.stable,
            'social_cost': self.social_cost,
            'diameter': self.diameter,
            'optimum': self.optimum,
        }.items() if v is not None}

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> 'ExpectedClaims':
        data = data or {}
        return cls(
            stable=data.get('stable'),
            social_cost=data.get('social_cost'),
            diameter=data.get('diameter'),
            optimum=data.get('optimum'),
        )


@dataclass(frozen=True)
class Instance:
    spec: GameSpec
    profile: StrategyProfile
    provenance: Provenance
    expected: ExpectedClaims = field(default_factory=ExpectedClaims)

    def __post_init__(self):
        self.spec.check_profile(self.profile)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def graph(self) -> Graph:
        return build_graph(self.profile)

    def with_spec(self, spec: GameSpec) -> 'Instance':
        return Instance(spec, self.profile, self.provenance, self.expected)
