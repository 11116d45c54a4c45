"""Label-carrying blow-ups of near-α valued graphs and oriented near-α valued digraphs.

Expanding the small side sends a small vertex ``x`` to ``l*b(x) + i`` and a large vertex ``y`` to ``l*b(y)``;
expanding the large side sends ``y`` to ``l*b(y) - i`` and ``x`` to ``l*b(x)``, for ``0 <= i < l``. The result
is again (oriented) near-α for ``l*n`` edges.
"""
from typing import Tuple, Union

from edfforge.graph import BipartiteWitness, Digraph, Graph, Labelling
from edfforge.graph.ops import Replacement, blow_up, digraph_blow_up
from edfforge.types import Side
from edfforge.valuation import ValuationError
from edfforge.valuation.check import check_near_alpha, check_oriented_near_alpha

Target = Union[Graph, Digraph]


def near_alpha_witness(target: Target, b: Labelling) -> BipartiteWitness:
    if isinstance(target, Digraph):
        witness = check_oriented_near_alpha(target, b)
    else:
        witness = check_near_alpha(target, b)
    if witness is None:
        kind = 'oriented near-alpha' if isinstance(target, Digraph) else 'near-alpha'
        raise ValuationError(f'labelling is not {kind}')
    return witness


def _blow(target: Target, b: Labelling, l: int, expand: Side) -> Tuple[Target, Labelling, Replacement]:
    if l < 1:
        raise ValuationError(f'blow-up factor must be positive, got {l}')
    sides = near_alpha_witness(target, b).sides()
    sizes = {v: l if sides[v] == expand else 1 for v in target.vertices}
    if isinstance(target, Digraph):
        blown, replacement = digraph_blow_up(target, sizes)
    else:
        blown, replacement = blow_up(target, sizes)
    sign = 1 if expand == Side.small else -1
    labels, child_sides = {}, {}
    for v, children in replacement.items():
        for i, child in enumerate(children):
            labels[child] = l * b[v] + sign * i
            child_sides[child] = sides[v]
    out = Labelling(labels, child_sides)
    near_alpha_witness(blown, out)
    return blown, out, replacement


def blow_up_labelled_small(target: Target, b: Labelling, l: int) -> Tuple[Target, Labelling, Replacement]:
    """Expand every small vertex into the ascending run ``l*b(x), ..., l*b(x) + l - 1``."""
    return _blow(target, b, l, Side.small)


def blow_up_labelled_large(target: Target, b: Labelling, l: int) -> Tuple[Target, Labelling, Replacement]:
    """Expand every large vertex into the descending run ``l*b(y), ..., l*b(y) - l + 1``."""
    return _blow(target, b, l, Side.large)
