import logging
from typing import List, NamedTuple, Optional, Tuple

import networkx as nx

from edfforge.config import search_limits
from edfforge.graph import Graph
from edfforge.oracle import OracleError, SearchLimitExceeded
from edfforge.oracle.search import search_beta
from edfforge.types import SearchLimits
from edfforge.valuation import ValuationKind

log = logging.getLogger(__name__)

# Unlabelled trees by order, used as a self-check on the generator.
KNOWN_TREE_COUNTS = (0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


class TreeSweepReport(NamedTuple):
    order: int
    tree_count: int
    expected_count: int
    failures: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def passed(self) -> bool:
        return not self.failures and self.tree_count == self.expected_count


def nonisomorphic_trees(order: int) -> List[Graph]:
    """All unlabelled trees on ``order`` vertices, as :class:`Graph` on vertices ``0..order-1``."""
    return [Graph(tuple(sorted(t.nodes)), tuple(sorted(tuple(sorted(e)) for e in t.edges)))
            for t in nx.nonisomorphic_trees(order)]


def exhaustive_trees_near_alpha(order: int, limits: Optional[SearchLimits] = None) -> TreeSweepReport:
    """Search a near-α valuation for every tree of the given order and report the ones without."""
    limits = limits or search_limits()
    if order < 2:
        raise OracleError(f'trees need at least 2 vertices, got {order}')
    if order > limits.max_tree_order:
        raise SearchLimitExceeded(f'tree order {order} exceeds the bound {limits.max_tree_order}')
    trees = nonisomorphic_trees(order)
    failures = []
    for t in trees:
        if search_beta(t, ValuationKind.near_alpha, limits) is None:
            log.warning('tree %s has no near-alpha valuation', t.edges)
            failures.append(t.edges)
    expected = KNOWN_TREE_COUNTS[order] if order < len(KNOWN_TREE_COUNTS) else len(trees)
    log.info('order %d: %d trees, %d without near-alpha', order, len(trees), len(failures))
    return TreeSweepReport(order, len(trees), expected, tuple(failures))
