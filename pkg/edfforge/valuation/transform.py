"""Transforms that move between valuations: arc flips, affine maps and the weak tensor product."""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from edfforge.graph import Digraph, Graph, Labelling, require_labelling
from edfforge.graph.ops import weak_tensor_product
from edfforge.helper import is_unit
from edfforge.types import Side
from edfforge.valuation import ValuationError
from edfforge.valuation.check import arc_labels, check_near_alpha, check_oriented_beta

log = logging.getLogger(__name__)


def flip_arcs(d: Digraph, b: Labelling, labels_to_flip: Iterable[int]) -> Digraph:
    """Reverse the arcs carrying the given labels (mod n+1).

    A label carried by one arc flips that arc. A label carried by several arcs, which only happens before
    the labelling is a cover, flips the last of them. The result must be an oriented β-valuation.

    :raises ValuationError: if a label is absent or the flipped digraph is not covered exactly once.
    """
    require_labelling(d.vertices, b)
    mod = d.arc_count + 1
    labels = arc_labels(d, b)
    positions: Dict[int, List[int]] = {}
    for i, e in enumerate(labels):
        positions.setdefault(e, []).append(i)
    flip = set()
    for e in {e % mod for e in labels_to_flip}:
        if e not in positions:
            raise ValuationError(f'no arc carries label {e} mod {mod}')
        flip.add(positions[e][-1])
    flipped = d.reverse(flip)
    if not check_oriented_beta(flipped, b):
        raise ValuationError(f'flipping {sorted(labels[i] for i in flip)} breaks the difference cover mod {mod}')
    return flipped


def negation_classes(n: int) -> List[FrozenSet[int]]:
    """The classes ``{e, -e}`` of Z_{n+1} without zero, ordered by smallest member."""
    mod = n + 1
    classes = {frozenset((e, (-e) % mod)) for e in range(1, mod)}
    return sorted(classes, key=min)


def enumerate_flip_family(d: Digraph, b: Labelling) -> List[Digraph]:
    """Every digraph reachable by flipping whole negation classes; the empty flip comes first."""
    if not check_oriented_beta(d, b):
        raise ValuationError('labelling is not an oriented beta-valuation')
    classes = negation_classes(d.arc_count)
    family = []
    for mask in range(2 ** len(classes)):
        chosen = [e for bit, cls in enumerate(classes) if mask >> bit & 1 for e in cls]
        family.append(flip_arcs(d, b, chosen) if chosen else d)
    log.debug('flip family of %d arcs has %d members', d.arc_count, len(family))
    return family


def affine_transform(b: Labelling, k: int, m: int, modulus: int, d: Optional[Digraph] = None) -> Labelling:
    """``b'(x) = k*b(x) + m mod n+1``.

    :param d: When given and ``b`` is an oriented β-valuation of it, the result is checked to be one too.
    """
    if not is_unit(k, modulus):
        raise ValuationError(f'{k} is not invertible mod {modulus}')
    out = Labelling({v: (k * x + m) % modulus for v, x in b.assignment.items()})
    if d is not None and check_oriented_beta(d, b) and not check_oriented_beta(d, out):
        raise ValuationError('affine map broke the oriented beta-valuation')
    return out


def near_alpha_weak_tensor(g: Graph, gamma: Labelling, h: Graph, delta: Labelling) -> Tuple[Graph, Labelling]:
    """Near-α valuation of the weak tensor product built from near-α valuations of both factors."""
    gw = check_near_alpha(g, gamma)
    hw = check_near_alpha(h, delta)
    if gw is None or hw is None:
        raise ValuationError('both factors need near-alpha valuations')
    product = weak_tensor_product(g, gw, h, hw)
    m = g.edge_count
    sigma = {}
    sides = {}
    for x, y in product.vertices:
        if x in gw.side_s:
            sigma[(x, y)] = m * delta[y] + gamma[x]
            sides[(x, y)] = Side.small
        else:
            sigma[(x, y)] = m * (delta[y] - 1) + gamma[x]
            sides[(x, y)] = Side.large
    out = Labelling(sigma, sides)
    if check_near_alpha(product, out) is None:
        raise ValuationError('product labelling is not near-alpha')
    return product, out


def selfflip_labels(d: Digraph, b: Labelling) -> List[int]:
    """Labels carried twice whose negation is carried by no arc; flipping one copy of each repairs the cover."""
    mod = d.arc_count + 1
    labels = arc_labels(d, b)
    present = set(labels)
    return sorted(e for e in present if labels.count(e) == 2 and (-e) % mod not in present)

