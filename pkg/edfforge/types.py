from enum import Enum, IntEnum
from typing import NamedTuple, Optional, Tuple


class Side(IntEnum):
    small = 0
    large = 1


class BlowUpOrder(Enum):
    small_first = 'small-first'
    large_first = 'large-first'


class EdfParams(NamedTuple):
    n: int
    m: int
    l: int
    lam: int = 1
    c: Optional[int] = None


class ArcReport(NamedTuple):
    """Differences contributed by one arc ``(i, j)``, i.e. the multiset Δ(A_j, A_i)."""
    arc: Tuple[int, int]
    size: int
    interval: Optional[Tuple[int, int]] = None
    residues: Tuple[int, ...] = ()


class SearchLimits(NamedTuple):
    max_vertices: int = 12
    max_tree_order: int = 10
    workers: int = 1
