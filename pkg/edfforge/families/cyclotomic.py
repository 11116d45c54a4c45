"""Constructions driven by the squares and non-squares of a prime field."""
import logging
from typing import List, Optional, Tuple

import networkx as nx
from sympy import isprime
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import is_primitive_root, primitive_root, quadratic_residues

from edfforge.families import ConstructionError, certified
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.valuation import ValuationKind

log = logging.getLogger(__name__)


def _strip_leaves(t: nx.Graph) -> nx.Graph:
    return t.subgraph([v for v in t if t.degree(v) > 1]).copy()


def in_rosa_class(tree: Graph) -> bool:
    """Diameter-4 trees whose leaf-stripped tree is not a path but strips to a single vertex.

    None of these trees has an α-valuation.
    """
    t = tree.to_networkx()
    if not nx.is_tree(t) or nx.diameter(t) != 4:
        return False
    inner = _strip_leaves(t)
    if max(d for _, d in inner.degree()) <= 2:
        return False
    return _strip_leaves(inner).number_of_nodes() == 1


def squares(p: int) -> List[int]:
    return [r for r in quadratic_residues(p) if r]


def _node(label: int) -> str:
    return f'x{label}'


def cyclotomic_near_alpha_tree(p: int) -> Tuple[Graph, Labelling]:
    """Tree on Z_p rooted at 0.

    Level 1 holds the non-squares and the squares above p/2; each square ``s`` below p/2 hangs off ``2s``.
    For p = ±3 mod 8 the number 2 is a non-square, so ``2s`` is always on level 1.
    """
    if p < 11 or not isprime(p):
        raise ConstructionError(f'need a prime p >= 11, got {p}')
    if p % 8 in (1, 7):
        raise ConstructionError(f'p must not be +-1 mod 8, got {p} = {p % 8} mod 8')
    s = set(squares(p))
    level1 = sorted(x for x in range(1, p) if x not in s or 2 * x > p)
    level2 = sorted(x for x in s if 2 * x < p)
    log.debug('p=%d: level 1 %s, level 2 %s', p, level1, level2)
    edges = [(_node(0), _node(x)) for x in level1] + [(_node(2 * x), _node(x)) for x in level2]
    g = Graph.from_edges(edges)
    tree, b = certified(g, Labelling({_node(x): x for x in range(p)}), ValuationKind.near_alpha)
    if len(level2) < 3 or not in_rosa_class(tree):
        raise ConstructionError(f'tree for p={p} is not in the diameter-4 class without alpha-valuations')
    return tree, b


def star_path_oriented_beta(p: int, alpha: Optional[int] = None) -> Tuple[Digraph, Labelling]:
    """S_{(p-1)/2,2}: root ``r`` with ``(p-1)/2`` two-arc branches ``r - u_i - v_i``, labelled by powers of
    a primitive element.

    When ``alpha - 1`` is a square the ``u_i`` get the odd powers and the arcs run ``v_i -> u_i``; otherwise the
    ``u_i`` get the even powers and the arcs run ``u_i -> v_i``.
    """
    if p < 3 or not isprime(p):
        raise ConstructionError(f'need an odd prime, got {p}')
    if alpha is None:
        alpha = primitive_root(p)
    if alpha % p == 0 or not is_primitive_root(alpha % p, p):
        raise ConstructionError(f'{alpha} is not a primitive element mod {p}')
    square_step = legendre_symbol((alpha - 1) % p, p) == 1
    half = (p - 1) // 2
    labels = {'r': 0}
    arcs = []
    for i in range(half):
        even, odd = pow(alpha, 2 * i, p), pow(alpha, 2 * i + 1, p)
        u, v = f'u{i}', f'v{i}'
        arcs.append(('r', u))
        if square_step:
            labels[u], labels[v] = odd, even
            arcs.append((v, u))
        else:
            labels[u], labels[v] = even, odd
            arcs.append((u, v))
    return certified(Digraph.from_arcs(arcs), Labelling(labels), ValuationKind.oriented_beta)
