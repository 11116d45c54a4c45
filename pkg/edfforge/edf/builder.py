"""From labelled (di)graphs to EDFs and 2-CEDFs."""
import dataclasses
import logging
from typing import Tuple, Union

from edfforge.edf import EdfWitness, SetFamily
from edfforge.edf.blowup import blow_up_labelled_large, blow_up_labelled_small, near_alpha_witness
from edfforge.edf.verify import verify_ccedf, verify_edf
from edfforge.families import ConstructionError
from edfforge.families.two_cycles import cycle_length_family, two_cycles_clockwise
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.graph.ops import Replacement, compose, natural_orientation
from edfforge.types import BlowUpOrder, EdfParams
from edfforge.valuation.check import check_oriented_beta
from edfforge.zmod import ZSubset

log = logging.getLogger(__name__)


def blow_up_both_sides(target: Union[Graph, Digraph], b: Labelling, l: int,
                       order: BlowUpOrder = BlowUpOrder.small_first) -> Tuple[Labelling, Replacement]:
    """Balanced blow-up by ``l`` in two passes; returns the final labelling and original -> copies map."""
    passes = (blow_up_labelled_small, blow_up_labelled_large)
    if order is BlowUpOrder.large_first:
        passes = passes[::-1]
    t1, b1, r1 = passes[0](target, b, l)
    _, b2, r2 = passes[1](t1, b1, l)
    return b2, compose(r1, r2)


def _witness(h: Digraph, target: Union[Graph, Digraph], b: Labelling, l: int, order: BlowUpOrder) -> EdfWitness:
    labels, replacement = blow_up_both_sides(target, b, l, order)
    n = h.arc_count * l * l + 1
    family = SetFamily(n, tuple(ZSubset(n, tuple(labels[c] for c in replacement[v])) for v in h.vertices))
    index = {v: i for i, v in enumerate(h.vertices)}
    w = EdfWitness(EdfParams(n, len(h.vertices), l), h.vertices, tuple((index[u], index[v]) for u, v in h.arcs),
                   family)
    verdict = verify_edf(w)
    if not verdict:
        raise ConstructionError(f'blown-up family is not an EDF, first defect {verdict.defects[0]}')
    log.debug('built (%d,%d,%d,1)-EDF', n, len(h.vertices), l)
    return dataclasses.replace(w, transcript=verdict.transcript, verified=True)


def edf_from_near_alpha(g: Graph, b: Labelling, l: int,
                        order: BlowUpOrder = BlowUpOrder.small_first) -> EdfWitness:
    """``(|E| l² + 1, |V|, l, 1)`` EDF defined by the natural orientation of ``g``."""
    near_alpha_witness(g, b)
    return _witness(natural_orientation(g, b), g, b, l, order)


def edf_from_oriented_near_alpha(d: Digraph, b: Labelling, l: int,
                                 order: BlowUpOrder = BlowUpOrder.small_first) -> EdfWitness:
    near_alpha_witness(d, b)
    return _witness(d, d, b, l, order)


def edf_from_oriented_beta(d: Digraph, b: Labelling) -> EdfWitness:
    """``(n+1, m, 1, 1)`` EDF of singletons ``{b(v)}``; needs only an oriented β-valuation."""
    if not check_oriented_beta(d, b):
        raise ConstructionError('labelling is not an oriented beta-valuation')
    n = d.arc_count + 1
    family = SetFamily(n, tuple(ZSubset(n, (b[v],)) for v in d.vertices))
    index = {v: i for i, v in enumerate(d.vertices)}
    w = EdfWitness(EdfParams(n, len(d.vertices), 1), d.vertices, tuple((index[u], index[v]) for u, v in d.arcs),
                   family)
    verdict = verify_edf(w)
    if not verdict:
        raise ConstructionError(f'singleton family is not an EDF, first defect {verdict.defects[0]}')
    return dataclasses.replace(w, transcript=verdict.transcript, verified=True)


def double_witness(w: EdfWitness) -> EdfWitness:
    """Add the reverse of every arc; the result covers every non-zero residue twice."""
    arcs = w.arcs + tuple((j, i) for i, j in w.arcs)
    doubled = dataclasses.replace(w, params=w.params._replace(lam=2 * w.params.lam), arcs=arcs,
                                  transcript=(), verified=False)
    verdict = verify_edf(doubled)
    if not verdict:
        raise ConstructionError('doubled arcs do not give a lambda=2 EDF')
    return dataclasses.replace(doubled, transcript=verdict.transcript, verified=True)


def build_2cedf(k: int, l: int) -> EdfWitness:
    """2-CEDF from two clockwise cycles of length ``2k``, blown up by ``l`` and interleaved.

    The family is ``(A_0, B_0, A_1, B_1, ...)`` where ``A_i``, ``B_i`` are the sets of ``v_i``, ``u_i``; it is a
    ``(4k l² + 1, 4k, l, 1)`` 2-CEDF.
    """
    if l < 1:
        raise ConstructionError(f'l must be positive, got {l}')
    length = 2 * k
    d, b = two_cycles_clockwise(*cycle_length_family(length))
    sets = edf_from_oriented_near_alpha(d, b, l).sets_by_vertex()
    names = tuple(name for i in range(length) for name in (f'v{i}', f'u{i}'))
    m = len(names)
    n = sets[names[0]].modulus
    family = SetFamily(n, tuple(sets[name] for name in names))
    verdict = verify_ccedf(family, 2)
    if not verdict:
        raise ConstructionError(f'interleaved family is not a 2-CEDF for k={k}, l={l}')
    return EdfWitness(EdfParams(n, m, l, 1, c=2), names, tuple((i, (i + 2) % m) for i in range(m)), family,
                      verdict.transcript, True)
