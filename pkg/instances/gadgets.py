"""
Self-centered regular gadgets with pendant players attached.
"""

import logging
from enum import Enum

import networkx as nx

from core.errors import GadgetMismatchError
from core.graph import Graph, diameter, is_self_centered
from game.model import GameSpec, Variant
from instances.generators import profile_from_purchases
from instances.instance import ExpectedClaims, Instance, Provenance

logger = logging.getLogger(__name__)


def petersen() -> Graph:
    """The Petersen graph: 10 nodes, 3-regular, diameter 2 (a Moore graph)."""
    return Graph.from_networkx(nx.petersen_graph())


def regular_degree(graph: Graph) -> int:
    degrees = {graph.degree(v) for v in range(graph.n)}
    if len(degrees) != 1:
        raise GadgetMismatchError(f"gadget is not regular (degrees {sorted(degrees)})")
    return degrees.pop()


def validate_gadget(graph: Graph, R: int) -> int:
    """
    Check that the gadget is regular, self-centered and of diameter R.

    Returns:
        The common degree d.

    Raises:
        GadgetMismatchError: on any violated property
    """
    if graph.n < 2:
        raise GadgetMismatchError("gadget needs at least two nodes")
    d = regular_degree(graph)
    if not is_self_centered(graph):
        raise GadgetMismatchError("gadget is not self-centered")
    diam = diameter(graph)
    if diam != R:
        raise GadgetMismatchError(f"gadget diameter {diam} does not match R={R}")
    return d


class Attachment(str, Enum):
    SPREAD = 'spread'
    NEIGHBORHOOD = 'neighborhood'


def gadget_with_pendants(gadget: Graph, n_pendants: int, R: int,
                         attachment: Attachment = Attachment.SPREAD, anchor: int = 0) -> Instance:
    """
    Gadget on nodes 0..g-1 (edges bought by the lower index) plus pendant
    players g..g+n_pendants-1, each buying d edges into the gadget.

    SPREAD: pendant i buys (i*d + t) mod g for t < d, round-robin.
    NEIGHBORHOOD: every pendant buys N(anchor), so any two pendants share a
    neighbour and each reaches the whole gadget within the gadget's radius.
    """
    if n_pendants < 0:
        raise ValueError("number of pendants must be non-negative")
    attachment = Attachment(attachment)
    d = validate_gadget(gadget, R)
    g = gadget.n
    if d > g:
        raise GadgetMismatchError(f"degree {d} exceeds the gadget order {g}")
    n = g + n_pendants
    purchases = list(gadget.edges())
    params = {'order': g, 'degree': d, 'pendants': n_pendants, 'R': R, 'attachment': attachment.value}
    if attachment is Attachment.NEIGHBORHOOD:
        if not 0 <= anchor < g:
            raise ValueError(f"anchor {anchor} is not a gadget node (0..{g - 1})")
        params['anchor'] = anchor
        targets = sorted(gadget.neighbors(anchor))
        for i in range(n_pendants):
            purchases += [(g + i, x) for x in targets]
    else:
        for i in range(n_pendants):
            purchases += [(g + i, (i * d + t) % g) for t in range(d)]

    logger.debug(f"gadget with pendants: g={g} d={d} pendants={n_pendants} attachment={attachment.value}")
    return Instance(
        GameSpec.uniform(Variant.MAX, n, R),
        profile_from_purchases(n, purchases),
        Provenance('gadget', params),
        ExpectedClaims(social_cost=gadget.num_edges + d * n_pendants, optimum=n - 1),
    )
