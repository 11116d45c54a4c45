"""
Unit tests for set families, EDF / c-CEDF verification and the blow-up builders.
"""
import dataclasses

import pytest
import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from edfforge import catalog
from edfforge.edf import EdfStructureError, EdfWitness, SetFamily
from edfforge.edf.blowup import blow_up_labelled_large, blow_up_labelled_small
from edfforge.edf.builder import (blow_up_both_sides, build_2cedf, double_witness, edf_from_near_alpha,
                                  edf_from_oriented_beta, edf_from_oriented_near_alpha)
from edfforge.edf.verify import cyclic_blocks, verify_ccedf, verify_edf
from edfforge.families import ConstructionError
from edfforge.families.cycle import cycle_oriented_near_alpha
from edfforge.families.cyclotomic import cyclotomic_near_alpha_tree
from edfforge.families.path import path_alpha
from edfforge.graph import Graph, Labelling
from edfforge.types import BlowUpOrder, EdfParams
from edfforge.valuation import ValuationError
from edfforge.valuation.check import check_near_alpha

FIVE_VERTEX_SETS = [[0, 1, 2], [21, 24, 27], [18, 19, 20], [30, 33, 36], [39, 42, 45]]
ORALP_SETS = [[0, 3, 6], [36, 39, 42], [9, 12, 15], [61, 62, 63], [70, 71, 72], [43, 44, 45]]
CEDF_73 = [[0, 3, 6], [27, 30, 33], [70, 71, 72], [61, 62, 63], [9, 12, 15], [36, 39, 42], [52, 53, 54],
           [43, 44, 45]]


def five_vertex_witness(sets=None):
    w = edf_from_near_alpha(*catalog.five_vertex_near_alpha(), 3, BlowUpOrder.large_first)
    if sets is None:
        return w
    return dataclasses.replace(w, family=SetFamily.of(46, sets), transcript=(), verified=False)


class TestSetFamily:
    """Test family structure checks."""

    def test_overlap_rejected(self):
        """Sets must be pairwise disjoint."""
        with pytest.raises(EdfStructureError):
            SetFamily.of(7, [[0, 1], [1, 2]])

    def test_unequal_sizes_rejected(self):
        """Every set has the same size."""
        with pytest.raises(EdfStructureError):
            SetFamily.of(7, [[0, 1], [2]])

    def test_empty_rejected(self):
        """A family needs at least one set."""
        with pytest.raises(EdfStructureError):
            SetFamily(7, ())

    def test_accessors(self):
        """Length, set size and sorted lists."""
        family = SetFamily.of(9, [[3, 0], [4, 5]])
        assert len(family) == 2
        assert family.set_size == 2
        assert family.as_lists() == [[0, 3], [4, 5]]


class TestVerifyEdf:
    """Test the H-defined EDF verifier."""

    def test_swap_in_z3(self):
        """Both arcs between {0} and {1} cover Z_3 once."""
        w = EdfWitness(EdfParams(3, 2, 1), ('a', 'b'), ((0, 1), (1, 0)), SetFamily.of(3, [[0], [1]]))
        assert verify_edf(w)

    def test_single_arc_in_z3_misses_a_residue(self):
        """With one arc residue 2 is reported missing."""
        w = EdfWitness(EdfParams(3, 2, 1), ('a', 'b'), ((0, 1),), SetFamily.of(3, [[0], [1]]))
        verdict = verify_edf(w)
        assert not verdict
        assert verdict.defects == ((2, 0),)

    def test_five_vertex_transcript(self):
        """Each arc of the five-vertex EDF gives nine consecutive differences."""
        verdict = verify_edf(five_vertex_witness(FIVE_VERTEX_SETS))
        assert verdict.ok
        assert [r.interval for r in verdict.transcript] == [(19, 27), (1, 9), (10, 18), (28, 36), (37, 45)]
        assert all(r.size == 9 for r in verdict.transcript)

    def test_perturbed_set_fails(self):
        """Changing one element breaks the cover."""
        sets = [[3, 1, 2]] + FIVE_VERTEX_SETS[1:]
        verdict = verify_edf(five_vertex_witness(sets))
        assert not verdict
        assert verdict.defects

    def test_workers_agree(self):
        """A worker pool gives the same transcript."""
        w = five_vertex_witness()
        assert verify_edf(w, workers=3).transcript == verify_edf(w).transcript

    def test_wrong_modulus(self):
        """The family modulus must match the parameters."""
        w = five_vertex_witness()
        with pytest.raises(EdfStructureError):
            verify_edf(dataclasses.replace(w, params=w.params._replace(n=47)))

    def test_wrong_set_size(self):
        """The set size must match l."""
        w = five_vertex_witness()
        with pytest.raises(EdfStructureError):
            verify_edf(dataclasses.replace(w, params=w.params._replace(l=2)))

    def test_arc_out_of_range(self):
        """Arcs must index existing sets."""
        w = EdfWitness(EdfParams(3, 2, 1), ('a', 'b'), ((0, 2),), SetFamily.of(3, [[0], [1]]))
        with pytest.raises(EdfStructureError):
            verify_edf(w)


class TestVerifyCcedf:
    """Test circular EDF verification."""

    def test_73_example(self):
        """The Z_73 family is a 2-CEDF and both unions agree."""
        verdict = verify_ccedf(SetFamily.of(73, CEDF_73), 2)
        assert verdict.ok and verdict.agrees
        assert verdict.blocks == ((0, 2, 4, 6), (1, 3, 5, 7))

    def test_not_a_1cedf(self):
        """The same family is not a 1-CEDF."""
        assert not verify_ccedf(SetFamily.of(73, CEDF_73), 1)

    def test_blocks_coprime(self):
        """A step coprime to m gives one cycle."""
        assert cyclic_blocks(5, 2) == ((0, 2, 4, 1, 3),)

    @pytest.mark.parametrize('c', [0, 8])
    def test_c_out_of_range(self, c):
        """c must lie strictly between 0 and m."""
        with pytest.raises(EdfStructureError):
            verify_ccedf(SetFamily.of(73, CEDF_73), c)

    def test_single_set(self):
        """One set leaves no valid c."""
        with pytest.raises(EdfStructureError):
            verify_ccedf(SetFamily.of(5, [[0]]), 1)


class TestLabelledBlowUp:
    """Test one-sided blow-ups that carry labels."""

    def test_small_side(self):
        """Small vertices become ascending runs, large ones are scaled."""
        g, b = catalog.five_vertex_near_alpha()
        blown, labels, rep = blow_up_labelled_small(g, b, 2)
        assert blown.edge_count == 10
        assert labels.values_for(rep['v1']) == [0, 1]
        assert labels.values_for(rep['v3']) == [4, 5]
        assert labels.values_for(rep['v2']) == [6]
        assert check_near_alpha(blown, labels) is not None

    def test_large_side(self):
        """Large vertices become descending runs."""
        g, b = catalog.five_vertex_near_alpha()
        _, labels, rep = blow_up_labelled_large(g, b, 2)
        assert labels.values_for(rep['v4']) == [8, 7]
        assert labels.values_for(rep['v1']) == [0]

    def test_digraph(self):
        """Digraphs blow up arc by arc."""
        d, b = catalog.oralp_digraph()
        blown, _, _ = blow_up_labelled_small(d, b, 3)
        assert blown.arc_count == 24

    def test_needs_near_alpha(self):
        """A labelling that is not near-α is refused."""
        g = Graph.from_edges([('a', 'b'), ('b', 'c'), ('c', 'd')])
        with pytest.raises(ValuationError):
            blow_up_labelled_small(g, Labelling({'a': 0, 'b': 1, 'c': 3, 'd': 2}), 2)

    def test_bad_factor(self):
        """l must be positive."""
        with pytest.raises(ValuationError):
            blow_up_labelled_small(*catalog.five_vertex_near_alpha(), 0)

    def test_both_sides_balanced(self):
        """Two passes give every vertex l copies."""
        g, b = catalog.five_vertex_near_alpha()
        labels, rep = blow_up_both_sides(g, b, 3)
        assert all(len(c) == 3 for c in rep.values())
        assert sorted(labels.values_for(rep['v1'])) == [0, 3, 6]


class TestEdfFromNearAlpha:
    """Test the near-α to EDF pipeline."""

    def test_five_vertex_large_first(self):
        """Large-first order reproduces the (46,5,3,1) sets."""
        w = five_vertex_witness()
        assert w.params == EdfParams(46, 5, 3)
        assert w.family.as_lists() == FIVE_VERTEX_SETS
        assert w.verified
        assert [r.interval for r in w.transcript] == [(19, 27), (1, 9), (10, 18), (28, 36), (37, 45)]

    def test_five_vertex_small_first_differs_but_verifies(self):
        """Small-first order gives other sets that still verify."""
        w = edf_from_near_alpha(*catalog.five_vertex_near_alpha(), 3)
        assert w.family.as_lists() != FIVE_VERTEX_SETS
        assert verify_edf(w)

    def test_cyclotomic_tree(self):
        """The p = 11 tree with l = 2 gives a (41,11,2,1)-EDF."""
        w = edf_from_near_alpha(*cyclotomic_near_alpha_tree(11), 2)
        assert w.params == EdfParams(41, 11, 2)
        assert verify_edf(w)

    def test_l1_is_the_labelling(self):
        """With l = 1 the sets are the labels."""
        g, b = catalog.rosa_star_near_alpha()
        w = edf_from_near_alpha(g, b, 1)
        assert [s.elements for s in w.family.sets] == [(b[v],) for v in w.vertices]

    def test_rejects_non_near_alpha(self):
        """The input must be near-α."""
        g = Graph.from_edges([('a', 'b'), ('b', 'c'), ('c', 'd')])
        with pytest.raises(ValuationError):
            edf_from_near_alpha(g, Labelling({'a': 0, 'b': 1, 'c': 3, 'd': 2}), 2)


class TestEdfFromOriented:
    """Test the oriented pipelines."""

    def test_oralp(self):
        """The oriented example gives the (73,6,3,1) sets."""
        w = edf_from_oriented_near_alpha(*catalog.oralp_digraph(), 3)
        assert w.params == EdfParams(73, 6, 3)
        assert w.family.as_lists() == ORALP_SETS
        assert [r.interval for r in w.transcript] == [(1 + 9 * i, 9 + 9 * i) for i in range(8)]

    def test_c6(self):
        """Oriented C_6 with l = 2 lives in Z_25."""
        w = edf_from_oriented_near_alpha(*cycle_oriented_near_alpha(6), 2)
        assert w.params.n == 25
        assert verify_edf(w)

    def test_orbeta_singletons(self):
        """An oriented β-valuation gives singleton sets."""
        d, b = catalog.orbeta_digraph()
        w = edf_from_oriented_beta(d, b)
        assert w.params == EdfParams(8, 6, 1)
        assert w.family.as_lists() == [[0], [5], [3], [6], [4], [2]]
        assert w.verified

    def test_oriented_beta_required(self):
        """The unidirectional C_3 labelling is not oriented β."""
        with pytest.raises(ConstructionError):
            edf_from_oriented_beta(catalog.unidirectional_cycle(3), Labelling({'v1': 0, 'v2': 1, 'v3': 2}))

    def test_orbeta_is_not_oriented_near_alpha(self):
        """Blowing up needs oriented near-α."""
        with pytest.raises(ValuationError):
            edf_from_oriented_near_alpha(*catalog.orbeta_digraph(), 2)


class TestDoubling:
    """Test λ = 2 by reversing every arc."""

    def test_five_vertex(self):
        """Adding reversed arcs gives λ = 2."""
        doubled = double_witness(five_vertex_witness())
        assert doubled.params.lam == 2
        assert len(doubled.arcs) == 10
        assert doubled.verified
        assert verify_edf(doubled)

    def test_original_is_not_a_double_cover(self):
        """The undoubled witness does not cover twice."""
        w = five_vertex_witness()
        assert not verify_edf(dataclasses.replace(w, params=w.params._replace(lam=2)))

    def test_doubled_digraph_is_the_original(self):
        """Reversed copies collapse, so a doubled witness still names H."""
        w = edf_from_near_alpha(*path_alpha(3), 2)
        assert double_witness(w).digraph == w.digraph
        assert double_witness(w).digraph.arc_count == 2


class TestBuild2Cedf:
    """Test interleaved two-cycle 2-CEDFs."""

    def test_k2_l3(self):
        """k = 2, l = 3 gives the Z_73 family."""
        w = build_2cedf(2, 3)
        assert w.params == EdfParams(73, 8, 3, 1, 2)
        assert w.vertices == ('v0', 'u0', 'v1', 'u1', 'v2', 'u2', 'v3', 'u3')
        assert w.family.as_lists() == CEDF_73
        assert w.arcs == tuple((i, (i + 2) % 8) for i in range(8))
        assert w.verified

    @pytest.mark.parametrize('k,l,n', [(2, 1, 9), (3, 2, 49), (4, 1, 17), (5, 1, 21)])
    def test_sizes(self, k, l, n):
        """n = 4kl² + 1 and m = 4k."""
        w = build_2cedf(k, l)
        assert (w.params.n, w.params.m) == (n, 4 * k)
        assert verify_ccedf(w.family, 2)

    def test_k1_rejected(self):
        """Cycles of length 2 do not exist."""
        with pytest.raises(ConstructionError):
            build_2cedf(1, 2)

    def test_l0_rejected(self):
        """l must be positive."""
        with pytest.raises(ConstructionError):
            build_2cedf(2, 0)
