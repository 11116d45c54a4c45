from typing import Tuple

from edfforge.edf import SetFamily
from edfforge.families import ConstructionError, certified
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationKind
from edfforge.zmod import ZSubset


def _path_labels(m: int):
    return [(i - 1) // 2 if i % 2 else m - i // 2 for i in range(1, m + 1)]


def path_alpha(m: int) -> Tuple[Graph, Labelling]:
    """P_m on ``v1..vm`` with the zig-zag labels ``0, m-1, 1, m-2, ...``."""
    if m < 2:
        raise ConstructionError(f'path needs m >= 2, got {m}')
    names = vertex_names('v', m, 1)
    g = Graph(names, tuple(zip(names, names[1:])))
    return certified(g, Labelling(dict(zip(names, _path_labels(m)))), ValuationKind.alpha)


def path_unidirectional(m: int) -> Tuple[Digraph, Labelling]:
    """P*_m, every arc ``v_i -> v_{i+1}``, with the zig-zag labels; an oriented near-α valuation mod m."""
    if m < 2 or m % 2:
        raise ConstructionError(f'unidirectional path needs even m >= 2, got {m}')
    g, b = path_alpha(m)
    return certified(Digraph(g.vertices, g.edges), b, ValuationKind.oriented_near_alpha)


def unidirectional_path_family(m: int, l: int) -> SetFamily:
    """Sets ``A_0..A_{m-1}`` in Z_{(m-1)l²+1} whose consecutive differences Δ(A_{i+1}, A_i) cover once."""
    if m < 2 or m % 2:
        raise ConstructionError(f'm must be even and at least 2, got {m}')
    if l < 1:
        raise ConstructionError(f'l must be positive, got {l}')
    n = (m - 1) * l * l + 1
    sets = []
    for i in range(m):
        if i % 2 == 0:
            sets.append(ZSubset(n, tuple(i * l * l // 2 + j * l for j in range(l))))
        else:
            sets.append(ZSubset(n, tuple((m - (i + 1) // 2) * l * l - j for j in range(l))))
    return SetFamily(n, tuple(sets))
