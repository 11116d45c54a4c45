"""Sun graphs S_{8k}: a 4k-cycle ``v_0..v_{4k-1}`` with one pendant ``u_i`` on every ``v_i``."""
import logging
from typing import List, NamedTuple, Tuple

from edfforge.families import ConstructionError, certified, cycle_edges, orient_by_flips
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.graph.ops import natural_orientation
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationError, ValuationKind

log = logging.getLogger(__name__)


class SunOrientation(NamedTuple):
    digraph: Digraph
    labelling: Labelling
    flips: Tuple[int, ...]
    forward: bool
    outward_first: bool


def _cycle_label(k: int, i: int) -> int:
    if i % 2 == 0:
        return i // 2 if i <= 2 * k - 2 else i // 2 + 2 * k - 1
    return 8 * k - (i + 1) // 2 if i <= 2 * k - 1 else 6 * k - (i + 1) // 2


def _pendant_label(k: int, i: int) -> int:
    if i == 0:
        return 8 * k
    if i == 2 * k - 1:
        return k
    if i == 2 * k:
        return 5 * k
    if i == 4 * k - 1:
        return 4 * k - 1
    if i % 2 == 0:
        return 6 * k - i // 2 if i <= 2 * k - 2 else 8 * k - i // 2
    return 2 * k + (i - 1) // 2 if i <= 2 * k - 3 else (i + 1) // 2


def _sun(k: int) -> Tuple[Graph, Labelling, Tuple[str, ...], Tuple[str, ...]]:
    vs = vertex_names('v', 4 * k)
    us = vertex_names('u', 4 * k)
    g = Graph(vs + us, cycle_edges(vs) + tuple(zip(vs, us)))
    labels = {v: _cycle_label(k, i) for i, v in enumerate(vs)}
    labels.update({u: _pendant_label(k, i) for i, u in enumerate(us)})
    return g, Labelling(labels), vs, us


def sun_alpha(k: int) -> Tuple[Graph, Labelling]:
    if k < 1:
        raise ConstructionError(f'k must be positive, got {k}')
    g, b, _, _ = _sun(k)
    return certified(g, b, ValuationKind.alpha)


def _candidate_arcs(vs, us, forward: bool, outward_first: bool) -> List[Tuple[str, str]]:
    n = len(vs)
    arcs = [(vs[i], vs[(i + 1) % n]) if forward else (vs[(i + 1) % n], vs[i]) for i in range(n)]
    for i in range(n):
        outward = (i % 2 == 0) == outward_first
        arcs.append((vs[i], us[i]) if outward else (us[i], vs[i]))
    return arcs


def find_sun_orientation(k: int) -> SunOrientation:
    """Search the cycle direction and pendant phase for a semi-directed sun reachable by label flips."""
    g, b = sun_alpha(k)
    _, _, vs, us = _sun(k)
    natural = natural_orientation(g, b)
    for forward in (True, False):
        for outward_first in (True, False):
            try:
                d, flips = orient_by_flips(natural, b, _candidate_arcs(vs, us, forward, outward_first))
            except ValuationError:
                continue
            log.debug('S*_%d: forward=%s outward_first=%s flips=%s', 8 * k, forward, outward_first, flips)
            return SunOrientation(d, b, flips, forward, outward_first)
    raise ConstructionError(f'no semi-directed orientation of S_{8 * k} is reachable by flips')


def sun_semi_directed(k: int) -> Tuple[Digraph, Labelling]:
    found = find_sun_orientation(k)
    return certified(found.digraph, found.labelling, ValuationKind.oriented_near_alpha)
