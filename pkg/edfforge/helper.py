from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple


def is_unit(k: int, modulus: int) -> bool:
    return gcd(k % modulus, modulus) == 1


@lru_cache(None)
def vertex_names(prefix: str, count: int, start: int = 0) -> Tuple[str, ...]:
    return tuple(f'{prefix}{i}' for i in range(start, start + count))


def as_interval(values: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Return ``(low, high)`` when ``values`` is exactly the run ``low, low+1, ..., high`` with no repeats."""
    if not values:
        return None
    ordered = sorted(values)
    low, high = ordered[0], ordered[-1]
    if high - low + 1 != len(ordered) or len(set(ordered)) != len(ordered):
        return None
    return low, high
