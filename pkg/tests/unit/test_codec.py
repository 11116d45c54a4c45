"""
Unit tests for the JSON witness format and DOT export.
"""
import json

import pytest
import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from edfforge import catalog
from edfforge.codec import (SCHEMA_VERSION, LabelledGraph, WitnessFormatError, dumps, from_dict, labelled_to_dict,
                            load, loads, save, to_dot, witness_to_dict)
from edfforge.edf.builder import build_2cedf, edf_from_near_alpha
from edfforge.graph import Graph, Labelling
from edfforge.types import BlowUpOrder, EdfParams
from edfforge.valuation import ValuationKind
from edfforge.valuation.transform import near_alpha_weak_tensor


def five_vertex_witness():
    return edf_from_near_alpha(*catalog.five_vertex_near_alpha(), 3, BlowUpOrder.large_first)


class TestWitnessJson:
    """Test EDF witness documents."""

    def test_2cedf_document(self):
        """A 2-CEDF document carries version, c and its sets."""
        d = witness_to_dict(build_2cedf(2, 3))
        assert d['version'] == SCHEMA_VERSION
        assert d['params'] == {'n': 73, 'm': 8, 'l': 3, 'lambda': 1, 'c': 2}
        assert d['digraph']['vertices'][:2] == ['v0', 'u0']
        assert d['digraph']['arcs'][0] == [0, 2]
        assert d['family'][1] == [27, 30, 33]
        assert d['verified'] is True

    def test_transcript_entries(self):
        """Transcript entries record arc, size and interval."""
        d = witness_to_dict(five_vertex_witness())
        assert d['transcript'][0] == {'arc': [0, 1], 'size': 9, 'interval': [19, 27]}
        assert 'c' not in d['params']

    def test_reload(self):
        """Dumping and loading keep the witness."""
        w = five_vertex_witness()
        back = loads(dumps(w))
        assert back == w
        assert back.params == EdfParams(46, 5, 3)

    def test_text_is_indented(self):
        """Output is indented and ends with a newline."""
        text = dumps(five_vertex_witness())
        assert text.endswith('}\n')
        assert '\n  "params"' in text

    def test_file(self, tmp_path):
        """save and load go through a file."""
        path = tmp_path / 'w.json'
        save(path, build_2cedf(2, 1))
        assert load(path).params.c == 2


class TestLabelledJson:
    """Test labelled-graph documents."""

    def test_undirected(self):
        """A labelled graph keeps labels, sides and class."""
        g, b = catalog.five_vertex_near_alpha()
        d = labelled_to_dict(LabelledGraph(g, b, ValuationKind.near_alpha))
        assert d['digraph']['directed'] is False
        assert d['labels'] == [0, 3, 2, 4, 5]
        assert d['class'] == 'near-alpha'
        assert d['params'] == {'n': 5}
        assert 'sides' not in d

    def test_tuple_vertices_and_sides(self):
        """Product vertices are written as lists and read back as tuples."""
        p2 = Graph.from_edges([('a', 'b')])
        b = Labelling({'a': 0, 'b': 1})
        product, sigma = near_alpha_weak_tensor(p2, b, p2, b)
        d = labelled_to_dict(LabelledGraph(product, sigma))
        assert d['digraph']['vertices'] == [['a', 'a'], ['b', 'b']]
        assert d['sides'] == [0, 1]
        back = from_dict(json.loads(json.dumps(d)))
        assert back.target == product
        assert back.labelling.assignment == sigma.assignment
        assert back.kind is None

    def test_directed(self):
        """Digraphs keep their arcs and class."""
        d, b = catalog.orbeta_digraph()
        back = loads(dumps(LabelledGraph(d, b, ValuationKind.oriented_beta)))
        assert back.target == d
        assert back.kind is ValuationKind.oriented_beta


class TestMalformed:
    """Test rejection of bad documents."""

    def base(self):
        return witness_to_dict(build_2cedf(2, 1))

    def test_not_json(self):
        """Truncated text is rejected."""
        with pytest.raises(WitnessFormatError):
            loads('{"version": ')

    def test_top_level_list(self):
        """The top level must be an object."""
        with pytest.raises(WitnessFormatError):
            loads('[]')

    def test_version(self):
        """An unknown version is rejected."""
        d = self.base()
        d['version'] = 2
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_missing_params(self):
        """A witness needs params."""
        d = self.base()
        del d['params']
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_arc_out_of_range(self):
        """Arcs must index listed vertices."""
        d = self.base()
        d['digraph']['arcs'][0] = [0, 99]
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_overlapping_sets(self):
        """Overlapping sets are rejected on load."""
        d = self.base()
        d['family'][1] = list(d['family'][0])
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_boolean_element(self):
        """Booleans are not residues."""
        d = self.base()
        d['family'][0][0] = True
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_unknown_class(self):
        """An unknown class name is rejected."""
        g, b = catalog.five_vertex_near_alpha()
        d = labelled_to_dict(LabelledGraph(g, b))
        d['class'] = 'gamma'
        with pytest.raises(WitnessFormatError):
            from_dict(d)

    def test_missing_file(self, tmp_path):
        """A missing file is a format error."""
        with pytest.raises(WitnessFormatError):
            load(tmp_path / 'absent.json')


class TestDot:
    """Test Graphviz export."""

    def test_witness_is_blown_up(self):
        """A witness is drawn one node per element."""
        text = to_dot(five_vertex_witness())
        lines = text.splitlines()
        assert lines[0] == 'digraph edf {'
        assert sum(1 for x in lines if '->' in x) == 45
        assert sum(1 for x in lines if '[label=' in x and '->' not in x) == 15
        assert '  "0:0" -> "1:21" [label="21"];' in lines

    def test_undirected_labelled(self):
        """Edges carry their label differences."""
        g, b = catalog.five_vertex_near_alpha()
        text = to_dot(LabelledGraph(g, b))
        assert text.startswith('graph labelled {')
        assert '  "v1" -- "v2" [label="3"];' in text.splitlines()

    def test_directed_labelled(self):
        """Arcs carry head minus tail."""
        d, b = catalog.orbeta_digraph()
        lines = to_dot(LabelledGraph(d, b)).splitlines()
        assert '  "a" -> "b" [label="5"];' in lines
        assert '  "f" -> "c" [label="1"];' in lines
