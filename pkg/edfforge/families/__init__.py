from typing import Tuple, TypeVar

from edfforge import EdfForgeError
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.valuation import ValuationKind
from edfforge.valuation.check import arc_labels, satisfies
from edfforge.valuation.transform import flip_arcs

T = TypeVar('T', Graph, Digraph)


class ConstructionError(EdfForgeError):
    ...


def certified(target: T, b: Labelling, kind: ValuationKind) -> Tuple[T, Labelling]:
    """Return ``(target, b)`` after checking ``b`` is in class ``kind``."""
    if not satisfies(target, b, kind):
        raise ConstructionError(f'construction failed its {kind.value} check')
    return target, b


def cycle_edges(names) -> Tuple[Tuple[str, str], ...]:
    return tuple((names[i], names[(i + 1) % len(names)]) for i in range(len(names)))


def orient_by_flips(natural: Digraph, b: Labelling, target_arcs) -> Tuple[Digraph, Tuple[int, ...]]:
    """Reach ``target_arcs`` from ``natural`` by flipping labels; returns the digraph and the flipped labels.

    :raises ValuationError: if the flips do not keep an oriented β-valuation.
    """
    wanted = set(target_arcs)
    labels = arc_labels(natural, b)
    flips = tuple(sorted(labels[i] for i, a in enumerate(natural.arcs) if a not in wanted))
    return flip_arcs(natural, b, flips), flips
