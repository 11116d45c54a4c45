from enum import Enum
from typing import NamedTuple, Optional

from edfforge import EdfForgeError
from edfforge.graph import BipartiteWitness


class ValuationError(EdfForgeError):
    ...


class ValuationKind(Enum):
    beta = 'beta'
    alpha = 'alpha'
    near_alpha = 'near-alpha'
    oriented_beta = 'oriented-beta'
    oriented_near_alpha = 'oriented-near-alpha'
    none = 'none'

    @property
    def oriented(self) -> bool:
        return self in (ValuationKind.oriented_beta, ValuationKind.oriented_near_alpha)


class ValuationClass(NamedTuple):
    """The strongest class a labelling was found to belong to.

    ``threshold`` is set for :attr:`ValuationKind.alpha`; ``witness`` holds the small/large partition for the
    near-α kinds and for α.
    """
    kind: ValuationKind
    threshold: Optional[int] = None
    witness: Optional[BipartiteWitness] = None
