"""
Game state types: who buys what, under which distance bounds, and the
records produced when best responses and equilibria are evaluated.
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from core.errors import InvalidPlayerError
from core.graph import UNBOUNDED, Distance

logger = logging.getLogger(__name__)

Cost = Distance


class Variant(str, Enum):
    MAX = 'max'
    SUM = 'sum'


class BestResponseStatus(str, Enum):
    EXACT = 'exact'
    HEURISTIC_UPPER_BOUND = 'heuristic_upper_bound'
    INFEASIBLE = 'infeasible'


class Verdict(str, Enum):
    STABLE = 'stable'
    UNSTABLE = 'unstable'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class GameSpec:
    """Variant plus one bound per player: R_v for MAX, broadcast bound B_v for SUM."""

    variant: Variant
    bounds: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'variant', Variant(self.variant))
        object.__setattr__(self, 'bounds', tuple(self.bounds))
        if not self.bounds:
            raise ValueError("a game needs at least one player")
        for v, b in enumerate(self.bounds):
            if not isinstance(b, int) or b < 1:
                raise ValueError(f"bound of player {v} must be a positive integer, got {b!r}")
        if self.variant is Variant.SUM:
            low = [v for v, b in enumerate(self.bounds) if b < self.n - 1]
            if low:
                logger.warning(f"SUM bounds below n-1={self.n - 1} for players {low}: "
                               f"no connected outcome keeps them within bound")

    @classmethod
    def uniform(cls, variant: Variant, n: int, bound: int) -> 'GameSpec':
        return cls(Variant(variant), tuple([bound] * n))

    @classmethod
    def sum_from_average(cls, n: int, average: float) -> 'GameSpec':
        """SUM spec from an average-distance bound D, using B = round(D*n)."""
        return cls.uniform(Variant.SUM, n, int(round(average * n)))

    @property
    def n(self) -> int:
        return len(self.bounds)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.bounds)) == 1

    def bound(self, v: int) -> int:
        return self.bounds[v]

    def check_player(self, v: int):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidPlayerError(f"player {v!r} out of range [0, {self.n})")

    def check_profile(self, profile: 'StrategyProfile'):
        if profile.n != self.n:
            raise ValueError(f"profile has {profile.n} players, spec has {self.n}")


@dataclass(frozen=True)
class StrategyProfile:
    """S = (S_v): the set of nodes each player buys an edge towards."""

    buys: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        n = len(self.buys)
        for v, strategy in enumerate(self.buys):
            if v in strategy:
                raise ValueError(f"player {v} cannot buy an edge to itself")
            for u in strategy:
                if not 0 <= u < n:
                    raise ValueError(f"player {v} buys towards {u}, outside [0, {n})")

    @classmethod
    def from_lists(cls, buys: Sequence[Iterable[int]]) -> 'StrategyProfile':
        return cls(tuple(frozenset(s) for s in buys))

    @classmethod
    def empty(cls, n: int) -> 'StrategyProfile':
        return cls(tuple(frozenset() for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.buys)

    def strategy(self, v: int) -> FrozenSet[int]:
        return self.buys[v]

    def with_strategy(self, v: int, strategy: Iterable[int]) -> 'StrategyProfile':
        buys = list(self.buys)
        buys[v] = frozenset(strategy)
        return StrategyProfile(tuple(buys))

    @property
    def purchases(self) -> int:
        """sum_v |S_v|; double-bought edges count twice."""
        return sum(len(s) for s in self.buys)

    def to_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self.buys]

    def state_hash(self) -> str:
        payload = json.dumps(self.to_lists(), separators=(',', ':'))
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()


@dataclass(frozen=True)
class BestResponse:
    player: int
    strategy: Tuple[int, ...]
    cost: Cost
    status: BestResponseStatus
    expansions: int = 0

    def to_dict(self) -> dict:
        return {
            'player': self.player,
            'strategy': list(self.strategy),
            'cost': cost_to_json(self.cost),
            'status': self.status.value,
        }


@dataclass(frozen=True)
class PlayerRecord:
    player: int
    current_cost: Cost
    best_cost: Optional[Cost]
    status: Optional[BestResponseStatus]
    deviation: Optional[Tuple[int, ...]] = None

    @property
    def resolved(self) -> bool:
        """Whether the best-response cost is certified optimal."""
        return self.status in (BestResponseStatus.EXACT, BestResponseStatus.INFEASIBLE)

    def to_dict(self) -> dict:
        return {
            'player': self.player,
            'current_cost': cost_to_json(self.current_cost),
            'best_cost': None if self.best_cost is None else cost_to_json(self.best_cost),
            'status': None if self.status is None else self.status.value,
            'deviation': None if self.deviation is None else list(self.deviation),
        }


@dataclass(frozen=True)
class EquilibriumReport:
    players: Tuple[PlayerRecord, ...]
    social_cost: Cost
    purchases: int
    verdict: Verdict
    witness: Optional[PlayerRecord] = None

    @property
    def all_within_bound(self) -> bool:
        return all(r.current_cost is not UNBOUNDED for r in self.players)

    def to_dict(self) -> dict:
        return {
            'verdict': self.verdict.value,
            'social_cost': cost_to_json(self.social_cost),
            'purchases': self.purchases,
            'witness': None if self.witness is None else self.witness.to_dict(),
            'players': [r.to_dict() for r in self.players],
        }


def cost_to_json(cost: Cost) -> Union[int, str]:
    return 'unbounded' if cost is UNBOUNDED else cost
