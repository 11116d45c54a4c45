from typing import Tuple

from edfforge.families import ConstructionError, certified, orient_by_flips
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.graph.ops import natural_orientation
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationError, ValuationKind


def ladder_alpha(k: int) -> Tuple[Graph, Labelling]:
    """Ladder L_{2k+1}: top rail ``u_0..u_2k``, bottom rail ``v_0..v_2k``, rungs ``v_i - u_i``."""
    if k < 1:
        raise ConstructionError(f'k must be positive, got {k}')
    us = vertex_names('u', 2 * k + 1)
    vs = vertex_names('v', 2 * k + 1)
    labels = {}
    for i in range(k + 1):
        labels[us[2 * i]] = 2 * k + i
        labels[vs[2 * i]] = 6 * k + 1 - i
    for i in range(k):
        labels[us[2 * i + 1]] = 4 * k - i
        labels[vs[2 * i + 1]] = i
    edges = tuple(zip(us, us[1:])) + tuple(zip(vs, vs[1:])) + tuple(zip(vs, us))
    return certified(Graph(us + vs, edges), Labelling(labels), ValuationKind.alpha)


def ladder_oriented(k: int) -> Tuple[Digraph, Labelling]:
    """Rails left to right, rungs bottom to top; an oriented near-α valuation mod 6k+2."""
    g, b = ladder_alpha(k)
    try:
        d, _ = orient_by_flips(natural_orientation(g, b), b, g.edges)
    except ValuationError as e:
        raise ConstructionError(f'ladder orientation failed for k={k}: {e}') from e
    return certified(d, b, ValuationKind.oriented_near_alpha)
