"""
The SUM ring family G_{k,h}: k hubs u_0..u_{k-1} on a cycle, each pair of
consecutive hubs joined through h middle nodes that own both their edges.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from game.model import GameSpec, Variant
from instances.generators import profile_from_purchases
from instances.instance import ExpectedClaims, Instance, Provenance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumFamilyCosts:
    """
    Broadcast costs in G_{k,h}: `lam` of a middle node, `lam_bar` of a hub,
    and `lam_prime`, the lowest broadcast a middle node reaches by any
    single-edge strategy. B in [lam, lam_prime) keeps G_{k,h} stable.
    """

    k: int
    h: int
    n_k: int
    lam: int
    lam_bar: int
    lam_prime: int

    @property
    def window(self) -> range:
        return range(self.lam, self.lam_prime)

    def to_dict(self) -> dict:
        return {'k': self.k, 'h': self.h, 'n': self.n_k, 'lambda': self.lam,
                'lambda_bar': self.lam_bar, 'lambda_prime': self.lam_prime}


def ring_size(k: int, h: int) -> int:
    return (h + 1) * k


def ring_family_costs(k: int, h: int) -> SumFamilyCosts:
    if k < 2 or h < 1:
        raise ValueError(f"ring family needs k >= 2 and h >= 1, got k={k}, h={h}")
    n2 = ring_size(2, h)
    lam = 2 * n2 - 4
    lam_bar = n2
    for j in range(2, k):
        nj = ring_size(j, h)
        if (j + 1) % 2 == 0:
            lam += nj + h
            lam_bar += nj + 1
        else:
            lam += nj + 1
            lam_bar += nj + h
    nk = ring_size(k, h)
    lam_prime = lam_bar + nk - 1 - k
    return SumFamilyCosts(k, h, nk, lam, lam_bar, lam_prime)


def ring_family(k: int, h: int, bound: Optional[int] = None) -> Instance:
    """
    G_{k,h} under a uniform SUM bound (default lambda(k)).

    Hubs are nodes 0..k-1 and buy nothing; middle node k+i*h+c (c < h) buys
    edges to hubs i and (i+1) mod k.
    """
    costs = ring_family_costs(k, h)
    b = costs.lam if bound is None else bound
    n = costs.n_k
    purchases = []
    for i in range(k):
        for c in range(h):
            node = k + i * h + c
            purchases += [(node, i), (node, (i + 1) % k)]

    stable = True if b in costs.window else None
    logger.debug(f"ring family k={k} h={h}: n={n} B={b} window=[{costs.lam}, {costs.lam_prime})")
    return Instance(
        GameSpec.uniform(Variant.SUM, n, b),
        profile_from_purchases(n, purchases),
        Provenance('ring', {'k': k, 'h': h, 'B': b}),
        ExpectedClaims(stable=stable, social_cost=2 * k * h),
    )
