from dataclasses import dataclass
from typing import Hashable, Sequence, Tuple

from edfforge import EdfForgeError
from edfforge.graph import Digraph
from edfforge.types import ArcReport, EdfParams
from edfforge.zmod import ZSubset


class EdfStructureError(EdfForgeError):
    ...


@dataclass(frozen=True)
class SetFamily:
    """Ordered, pairwise disjoint subsets of Z_n of one common size."""
    modulus: int
    sets: Tuple[ZSubset, ...]

    def __post_init__(self):
        object.__setattr__(self, 'sets', tuple(self.sets))
        if not self.sets:
            raise EdfStructureError('set family is empty')
        size = len(self.sets[0])
        seen = set()
        for i, s in enumerate(self.sets):
            if s.modulus != self.modulus:
                raise EdfStructureError(f'set {i} lives mod {s.modulus}, family mod {self.modulus}')
            if len(s) != size:
                raise EdfStructureError(f'set {i} has size {len(s)}, expected {size}')
            if seen.intersection(s.elements):
                raise EdfStructureError(f'set {i} meets an earlier set')
            seen.update(s.elements)

    @classmethod
    def of(cls, modulus: int, sets: Sequence[Sequence[int]]) -> 'SetFamily':
        return cls(modulus, tuple(ZSubset(modulus, tuple(s)) for s in sets))

    def __len__(self):
        return len(self.sets)

    def __getitem__(self, i: int) -> ZSubset:
        return self.sets[i]

    @property
    def set_size(self) -> int:
        return len(self.sets[0])

    def as_lists(self):
        return [list(s.elements) for s in self.sets]


@dataclass(frozen=True)
class EdfWitness:
    """An ``(n, m, l, λ; H)`` claim.

    ``vertices`` names H's vertices in family order and ``arcs`` are index pairs ``(i, j)`` standing for
    Δ(A_j, A_i). Arcs may repeat, which is how the λ = 2 doubling is held.
    """
    params: EdfParams
    vertices: Tuple[Hashable, ...]
    arcs: Tuple[Tuple[int, int], ...]
    family: SetFamily
    transcript: Tuple[ArcReport, ...] = ()
    verified: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'arcs', tuple((int(i), int(j)) for i, j in self.arcs))
        object.__setattr__(self, 'transcript', tuple(self.transcript))

    @property
    def digraph(self) -> Digraph:
        """H itself; a repeated or reversed copy of an arc collapses onto its first occurrence."""
        seen, arcs = set(), []
        for i, j in self.arcs:
            if frozenset((i, j)) not in seen:
                seen.add(frozenset((i, j)))
                arcs.append((self.vertices[i], self.vertices[j]))
        return Digraph(self.vertices, tuple(arcs))

    def sets_by_vertex(self):
        return dict(zip(self.vertices, self.family.sets))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    transcript: Tuple[ArcReport, ...] = ()
    defects: Tuple[Tuple[int, int], ...] = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class CyclicVerdict:
    """Outcome of a c-CEDF check: the direct union, its split into gcd(c, m) index cycles, and agreement."""
    ok: bool
    c: int
    blocks: Tuple[Tuple[int, ...], ...]
    agrees: bool
    defects: Tuple[Tuple[int, int], ...] = ()
    transcript: Tuple[ArcReport, ...] = ()

    def __bool__(self):
        return self.ok
