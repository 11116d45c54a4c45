"""Exact verification of H-defined EDFs and circular EDFs."""
import logging
from concurrent import futures
from math import gcd
from typing import List, Sequence, Tuple

from edfforge.edf import CyclicVerdict, EdfStructureError, EdfWitness, SetFamily, Verdict
from edfforge.helper import as_interval
from edfforge.types import ArcReport
from edfforge.zmod import ZMultiset, cover_defects, external_difference, is_lambda_cover, multiset_union

log = logging.getLogger(__name__)


def arc_report(arc: Tuple[int, int], diff: ZMultiset) -> ArcReport:
    residues = tuple(diff.elements())
    interval = as_interval(residues)
    return ArcReport(arc, len(residues), interval, () if interval else residues)


def _differences(family: SetFamily, arcs: Sequence[Tuple[int, int]], workers: int = 1) -> List[ZMultiset]:
    m = len(family)
    for i, j in arcs:
        if not (0 <= i < m and 0 <= j < m):
            raise EdfStructureError(f'arc {(i, j)} indexes outside a family of {m} sets')
    if workers > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda a: external_difference(family[a[1]], family[a[0]]), arcs))
    return [external_difference(family[j], family[i]) for i, j in arcs]


def verify_edf(w: EdfWitness, workers: int = 1) -> Verdict:
    """Check ⋃ Δ(A_j, A_i) over the arcs ``(i, j)`` of H is λ copies of Z_n without zero."""
    n, m, l, lam, _ = w.params
    if w.family.modulus != n:
        raise EdfStructureError(f'family lives mod {w.family.modulus}, params say {n}')
    if len(w.family) != m or len(w.vertices) != m:
        raise EdfStructureError(f'expected {m} sets and vertices, got {len(w.family)} and {len(w.vertices)}')
    if w.family.set_size != l:
        raise EdfStructureError(f'expected sets of size {l}, got {w.family.set_size}')
    diffs = _differences(w.family, w.arcs, workers)
    transcript = tuple(arc_report(a, d) for a, d in zip(w.arcs, diffs))
    union = multiset_union(diffs, modulus=n)
    defects = tuple(cover_defects(union, lam))
    if defects:
        log.debug('(%d,%d,%d,%d) fails at residues %s', n, m, l, lam, defects[:5])
    return Verdict(is_lambda_cover(union, lam), transcript, defects)


def cyclic_blocks(m: int, c: int) -> Tuple[Tuple[int, ...], ...]:
    """The gcd(c, m) index cycles ``j, j+c, j+2c, ...`` of Z_m."""
    d = gcd(c, m)
    return tuple(tuple((j + t * c) % m for t in range(m // d)) for j in range(d))


def verify_ccedf(family: SetFamily, c: int, lam: int = 1) -> CyclicVerdict:
    """Check ⋃_i Δ(A_{i+c}, A_i) is a λ-cover, directly and block by block."""
    m = len(family)
    if m < 2:
        raise EdfStructureError('a circular family needs at least two sets')
    if not 1 <= c <= m - 1:
        raise EdfStructureError(f'c must lie in [1, {m - 1}], got {c}')
    arcs = [(i, (i + c) % m) for i in range(m)]
    diffs = _differences(family, arcs)
    direct = multiset_union(diffs, modulus=family.modulus)
    blocks = cyclic_blocks(m, c)
    grouped = multiset_union([
        multiset_union([external_difference(family[block[(t + 1) % len(block)]], family[block[t]])
                        for t in range(len(block))], modulus=family.modulus)
        for block in blocks
    ], modulus=family.modulus)
    agrees = grouped == direct
    defects = tuple(cover_defects(direct, lam))
    transcript = tuple(arc_report(a, d) for a, d in zip(arcs, diffs))
    return CyclicVerdict(is_lambda_cover(direct, lam) and agrees, c, blocks, agrees, defects, transcript)

