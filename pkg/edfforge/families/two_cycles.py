"""Two disjoint cycles of equal even length, α-valued and clockwise-oriented."""
from typing import Dict, List, Sequence, Tuple

from edfforge.families import ConstructionError, certified, cycle_edges, orient_by_flips
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.graph.ops import natural_orientation
from edfforge.helper import vertex_names
from edfforge.valuation import ValuationError, ValuationKind

# 2C_{4k} for k = 1, 2, 3
SMALL_4K: Dict[int, Tuple[Sequence[int], Sequence[int]]] = {
    1: ((0, 8, 1, 6), (3, 7, 4, 5)),
    2: ((0, 15, 1, 11, 2, 14, 3, 16), (5, 12, 6, 10, 7, 9, 8, 13)),
    3: ((0, 23, 1, 22, 2, 16, 3, 21, 4, 20, 5, 24), (7, 18, 8, 17, 9, 15, 10, 14, 11, 13, 12, 19)),
}

# 2C_6
SMALL_4K2: Dict[int, Tuple[Sequence[int], Sequence[int]]] = {
    1: ((0, 11, 1, 10, 4, 12), (5, 9, 2, 7, 6, 8)),
}


def _closed_form_4k(k: int) -> Tuple[List[int], List[int]]:
    v, u = [], []
    for i in range(4 * k):
        if i % 2 == 0 and i <= 2 * k - 2:
            v.append(8 * k - i // 2)
            u.append(6 * k + 1 - i // 2)
        elif i % 2 == 1:
            v.append((i - 1) // 2)
            u.append(2 * k + 1 + (i - 1) // 2)
        elif i == 2 * k:
            v.append(5 * k + 1)
            u.append(5 * k)
        else:
            v.append(8 * k - i // 2 + 1)
            u.append(6 * k - i // 2)
    return v, u


def _closed_form_4k2(k: int) -> Tuple[List[int], List[int]]:
    v, u = [], []
    for i in range(4 * k + 2):
        if i % 2 == 0:
            v.append(2 * k + 2 + i // 2 if i <= 2 * k - 2 else 2 * k - i // 2)
            u.append(5 * k + 4 - i // 2 if i <= 2 * k + 2 else 5 * k + 2 + i // 2)
        else:
            v.append(6 * k + 3 - (i - 1) // 2 if i <= 2 * k - 3 else 6 * k + 3 + (i + 1) // 2)
            u.append(3 * k + 2 + (i - 1) // 2 if i <= 2 * k + 1 else 3 * k + 1 - (i - 1) // 2)
    return v, u


def _two_cycles(first: Sequence[int], second: Sequence[int]) -> Tuple[Graph, Labelling]:
    vs = vertex_names('v', len(first))
    us = vertex_names('u', len(second))
    g = Graph(vs + us, cycle_edges(vs) + cycle_edges(us))
    labels = dict(zip(vs, first))
    labels.update(zip(us, second))
    return g, Labelling(labels)


def two_cycles_alpha(k: int) -> Tuple[Graph, Labelling]:
    """2C_{4k}; tabulated for k <= 3, closed form beyond."""
    if k < 1:
        raise ConstructionError(f'k must be positive, got {k}')
    first, second = SMALL_4K[k] if k in SMALL_4K else _closed_form_4k(k)
    return certified(*_two_cycles(first, second), ValuationKind.alpha)


def two_cycles_alpha_4k2(k: int) -> Tuple[Graph, Labelling]:
    """2C_{4k+2}; tabulated for k = 1, closed form beyond."""
    if k < 1:
        raise ConstructionError(f'k must be positive, got {k}')
    first, second = SMALL_4K2[k] if k in SMALL_4K2 else _closed_form_4k2(k)
    return certified(*_two_cycles(first, second), ValuationKind.alpha)


def two_cycles_clockwise(k: int, length_class: str = '4k') -> Tuple[Digraph, Labelling]:
    """Both cycles oriented ``v_i -> v_{i+1}`` and ``u_i -> u_{i+1}``, reached from the natural orientation
    by label flips."""
    if length_class == '4k':
        g, b = two_cycles_alpha(k)
    elif length_class == '4k+2':
        g, b = two_cycles_alpha_4k2(k)
    else:
        raise ConstructionError(f"length class must be '4k' or '4k+2', got {length_class!r}")
    try:
        d, _ = orient_by_flips(natural_orientation(g, b), b, g.edges)
    except ValuationError as e:
        raise ConstructionError(f'no clockwise orientation for 2C with k={k}: {e}') from e
    return certified(d, b, ValuationKind.oriented_near_alpha)


def cycle_length_family(length: int) -> Tuple[int, str]:
    """``(k, length_class)`` producing cycles of the given even length >= 4."""
    if length < 4 or length % 2:
        raise ConstructionError(f'cycle length must be even and at least 4, got {length}')
    return (length // 4, '4k') if length % 4 == 0 else ((length - 2) // 4, '4k+2')
