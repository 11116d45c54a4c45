"""Membership tests for the valuation classes."""
from typing import Dict, List, Optional, Union

from edfforge.graph import BipartiteWitness, Digraph, Graph, Labelling, Vertex, require_labelling
from edfforge.types import Side
from edfforge.valuation import ValuationClass, ValuationKind


def _in_range(vertices, b: Labelling, n: int) -> bool:
    return all(0 <= b[v] <= n for v in vertices)


def edge_labels(g: Graph, b: Labelling) -> List[int]:
    return [abs(b[v] - b[u]) for u, v in g.edges]


def arc_labels(d: Digraph, b: Labelling) -> List[int]:
    """Arc differences ``b(v) - b(u) mod n+1`` in arc order."""
    mod = d.arc_count + 1
    return [(b[v] - b[u]) % mod for u, v in d.arcs]


def check_beta(g: Graph, b: Labelling) -> bool:
    require_labelling(g.vertices, b)
    n = g.edge_count
    return _in_range(g.vertices, b, n) and sorted(edge_labels(g, b)) == list(range(1, n + 1))


def check_alpha(g: Graph, b: Labelling) -> Optional[int]:
    """Smallest threshold ``x`` with ``min <= x < max`` on every edge, or ``None``."""
    if not check_beta(g, b):
        return None
    x = max(min(b[u], b[v]) for u, v in g.edges)
    if all(max(b[u], b[v]) > x for u, v in g.edges):
        return x
    return None


def local_sides(neighbours: Dict[Vertex, List[Vertex]], b: Labelling) -> Optional[Dict[Vertex, Side]]:
    """Side of every vertex when each is a strict local minimum or maximum, else ``None``."""
    sides = {}
    for v, adj in neighbours.items():
        if all(b[v] < b[u] for u in adj):
            sides[v] = Side.small
        elif all(b[v] > b[u] for u in adj):
            sides[v] = Side.large
        else:
            return None
    return sides


def check_near_alpha(g: Graph, b: Labelling) -> Optional[BipartiteWitness]:
    if not check_beta(g, b):
        return None
    sides = local_sides(g.neighbours(), b)
    return None if sides is None else BipartiteWitness.from_sides(sides)


def check_oriented_beta(d: Digraph, b: Labelling) -> bool:
    require_labelling(d.vertices, b)
    n = d.arc_count
    return _in_range(d.vertices, b, n) and sorted(arc_labels(d, b)) == list(range(1, n + 1))


def check_oriented_near_alpha(d: Digraph, b: Labelling) -> Optional[BipartiteWitness]:
    if not check_oriented_beta(d, b):
        return None
    sides = local_sides(d.neighbours(), b)
    return None if sides is None else BipartiteWitness.from_sides(sides)


def classify(target: Union[Graph, Digraph], b: Labelling) -> ValuationClass:
    """Strongest class ``b`` belongs to on ``target``."""
    if isinstance(target, Digraph):
        witness = check_oriented_near_alpha(target, b)
        if witness is not None:
            return ValuationClass(ValuationKind.oriented_near_alpha, witness=witness)
        if check_oriented_beta(target, b):
            return ValuationClass(ValuationKind.oriented_beta)
        return ValuationClass(ValuationKind.none)
    x = check_alpha(target, b)
    if x is not None:
        small = frozenset(v for v in target.vertices if b[v] <= x)
        return ValuationClass(ValuationKind.alpha, threshold=x,
                              witness=BipartiteWitness(small, frozenset(target.vertices) - small))
    witness = check_near_alpha(target, b)
    if witness is not None:
        return ValuationClass(ValuationKind.near_alpha, witness=witness)
    if check_beta(target, b):
        return ValuationClass(ValuationKind.beta)
    return ValuationClass(ValuationKind.none)


def satisfies(target: Union[Graph, Digraph], b: Labelling, kind: ValuationKind) -> bool:
    """True iff ``b`` is in class ``kind``; the classes nest alpha < near-alpha < beta."""
    if kind is ValuationKind.beta:
        return isinstance(target, Graph) and check_beta(target, b)
    if kind is ValuationKind.alpha:
        return isinstance(target, Graph) and check_alpha(target, b) is not None
    if kind is ValuationKind.near_alpha:
        return isinstance(target, Graph) and check_near_alpha(target, b) is not None
    if kind is ValuationKind.oriented_beta:
        return isinstance(target, Digraph) and check_oriented_beta(target, b)
    if kind is ValuationKind.oriented_near_alpha:
        return isinstance(target, Digraph) and check_oriented_near_alpha(target, b) is not None
    return classify(target, b).kind is ValuationKind.none
