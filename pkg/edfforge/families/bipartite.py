from typing import Tuple

from edfforge.families import ConstructionError, certified
from edfforge.graph import Graph, Labelling
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationKind


def complete_bipartite_alpha(p: int, q: int) -> Tuple[Graph, Labelling]:
    """K_{p,q} with ``v_i -> i-1`` and ``u_j -> j*p``; the threshold is ``p-1``."""
    if p < 1 or q < 1:
        raise ConstructionError(f'K_{{p,q}} needs p, q >= 1, got {p}, {q}')
    vs = vertex_names('v', p, 1)
    us = vertex_names('u', q, 1)
    g = Graph(vs + us, tuple((v, u) for v in vs for u in us))
    labels = {v: i for i, v in enumerate(vs)}
    labels.update({u: j * p for j, u in enumerate(us, 1)})
    return certified(g, Labelling(labels), ValuationKind.alpha)
