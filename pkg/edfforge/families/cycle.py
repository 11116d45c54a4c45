import logging
from typing import List, Tuple

from edfforge.families import ConstructionError, certified, cycle_edges
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.graph.ops import natural_orientation
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationKind
from edfforge.valuation.transform import flip_arcs, selfflip_labels

log = logging.getLogger(__name__)


def _cycle_labels(m: int) -> List[int]:
    out = []
    for i in range(1, m + 1):
        if i % 2:
            out.append((i - 1) // 2)
        elif i <= m // 2:
            out.append(m + 1 - i // 2)
        else:
            out.append(m - i // 2)
    return out


def _cycle(m: int) -> Tuple[Graph, Labelling]:
    names = vertex_names('v', m, 1)
    return Graph(names, cycle_edges(names)), Labelling(dict(zip(names, _cycle_labels(m))))


def cycle_alpha(m: int) -> Tuple[Graph, Labelling]:
    if m < 4 or m % 4:
        raise ConstructionError(f'alpha-valued cycle needs m = 0 mod 4, got {m}; try the oriented variant for m = 2 mod 4')
    g, b = _cycle(m)
    return certified(g, b, ValuationKind.alpha)


def cycle_oriented_near_alpha(m: int) -> Tuple[Digraph, Labelling]:
    """C_m, m = 2 mod 4, naturally oriented except the closing arc between v_m and v_1.

    The natural orientation carries ``m/2`` twice and misses ``-m/2``; flipping the closing copy repairs it.
    """
    if m < 6 or m % 4 != 2:
        raise ConstructionError(f'oriented cycle needs m = 2 mod 4 and m >= 6, got {m}')
    g, b = _cycle(m)
    d = natural_orientation(g, b)
    repair = selfflip_labels(d, b)
    log.debug('C_%d: repairing labels %s', m, repair)
    return certified(flip_arcs(d, b, repair), b, ValuationKind.oriented_near_alpha)
