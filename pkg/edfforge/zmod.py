"""Residue arithmetic and multiset bookkeeping over Z_n."""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from edfforge import EdfForgeError


class ResidueError(EdfForgeError):
    ...


@dataclass(frozen=True)
class ZSubset:
    """A set of distinct residues mod ``modulus``; elements are reduced and sorted on construction."""
    modulus: int
    elements: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.modulus < 1:
            raise ResidueError(f'modulus must be positive, got {self.modulus}')
        reduced = sorted(e % self.modulus for e in self.elements)
        if len(set(reduced)) != len(reduced):
            raise ResidueError(f'repeated residue in subset mod {self.modulus}')
        object.__setattr__(self, 'elements', tuple(reduced))

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, r: int):
        return r % self.modulus in self.elements

    def isdisjoint(self, other: 'ZSubset') -> bool:
        return set(self.elements).isdisjoint(other.elements)


@dataclass(frozen=True, eq=False)
class ZMultiset:
    """Sparse multiset of residues mod ``modulus``.

    Keys are reduced into ``{0, ..., n-1}`` and zero multiplicities are dropped, so two multisets compare equal
    exactly when they count every residue the same.
    """
    modulus: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 1:
            raise ResidueError(f'modulus must be positive, got {self.modulus}')
        merged: Dict[int, int] = {}
        for r, c in self.counts.items():
            if c < 0:
                raise ResidueError(f'negative multiplicity {c} at residue {r}')
            if c:
                key = r % self.modulus
                merged[key] = merged.get(key, 0) + c
        object.__setattr__(self, 'counts', dict(sorted(merged.items())))

    @classmethod
    def from_residues(cls, modulus: int, residues: Iterable[int]) -> 'ZMultiset':
        counts: Dict[int, int] = {}
        for r in residues:
            key = r % modulus
            counts[key] = counts.get(key, 0) + 1
        return cls(modulus, counts)

    def __getitem__(self, r: int) -> int:
        return self.counts.get(r % self.modulus, 0)

    def __eq__(self, other):
        if not isinstance(other, ZMultiset):
            return NotImplemented
        return self.modulus == other.modulus and self.counts == other.counts

    def __hash__(self):
        return hash((self.modulus, tuple(self.counts.items())))

    def __repr__(self):
        return f'ZMultiset({self.modulus}, {self.counts})'

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def support(self) -> List[int]:
        return list(self.counts)

    def elements(self) -> List[int]:
        """Residues in ascending order, each repeated by its multiplicity."""
        return [r for r, c in self.counts.items() for _ in range(c)]

    def dense(self) -> np.ndarray:
        out = np.zeros(self.modulus, dtype=np.int64)
        for r, c in self.counts.items():
            out[r] = c
        return out


def external_difference(a: ZSubset, b: ZSubset) -> ZMultiset:
    """Δ(a, b) = {x - y : x in a, y in b} as a multiset mod n."""
    if a.modulus != b.modulus:
        raise ResidueError(f'modulus mismatch: {a.modulus} != {b.modulus}')
    n = a.modulus
    diffs = np.subtract.outer(np.asarray(a.elements, dtype=np.int64), np.asarray(b.elements, dtype=np.int64)) % n
    residues, counts = np.unique(diffs, return_counts=True)
    return ZMultiset(n, dict(zip(residues.tolist(), counts.tolist())))


def is_lambda_cover(m: ZMultiset, lam: int) -> bool:
    """True iff ``m`` is λ copies of Z_n without zero."""
    if lam < 1:
        raise ResidueError(f'lambda must be positive, got {lam}')
    if m.modulus < 2:
        raise ResidueError('a cover needs modulus at least 2')
    return m[0] == 0 and len(m.counts) == m.modulus - 1 and all(c == lam for c in m.counts.values())


def cover_defects(m: ZMultiset, lam: int) -> List[Tuple[int, int]]:
    """Residues whose count differs from a λ-cover, as ``(residue, count)`` in ascending residue order."""
    dense = m.dense()
    expected = np.full(m.modulus, lam, dtype=np.int64)
    expected[0] = 0
    bad = np.nonzero(dense != expected)[0]
    return [(int(r), int(dense[r])) for r in bad]


def multiset_union(ms: Sequence[ZMultiset], modulus: Optional[int] = None) -> ZMultiset:
    if not ms:
        if modulus is None:
            raise ResidueError('empty union needs an explicit modulus')
        return ZMultiset(modulus)
    n = ms[0].modulus if modulus is None else modulus
    counts: Dict[int, int] = {}
    for part in ms:
        if part.modulus != n:
            raise ResidueError(f'modulus mismatch: {part.modulus} != {n}')
        for r, c in part.counts.items():
            counts[r] = counts.get(r, 0) + c
    return ZMultiset(n, counts)


def subset(modulus: int, elements: Iterable[int]) -> ZSubset:
    return ZSubset(modulus, tuple(elements))
