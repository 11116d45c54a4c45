"""JSON and DOT encodings of witnesses and labelled (di)graphs.

Both payloads share one schema::

    {"version": 1,
     "params": {"n": .., "m": .., "l": .., "lambda": .., "c": ..},
     "digraph": {"vertices": [..], "arcs": [[i, j], ..], "directed": true},
     "family": [[..], ..],            # EDF witnesses
     "transcript": [..],              # optional
     "labels": [..], "sides": [..],   # labelled graphs
     "class": "near-alpha"}           # optional

Arcs are index pairs into ``vertices``; every number is a plain integer.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Union

from edfforge import EdfForgeError
from edfforge.edf import EdfWitness, SetFamily
from edfforge.graph import Digraph, Graph, Labelling, Vertex
from edfforge.types import ArcReport, EdfParams, Side
from edfforge.valuation import ValuationKind

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class WitnessFormatError(EdfForgeError):
    ...


class LabelledGraph(NamedTuple):
    target: Union[Graph, Digraph]
    labelling: Labelling
    kind: Optional[ValuationKind] = None

    @property
    def n(self) -> int:
        return self.target.arc_count if isinstance(self.target, Digraph) else self.target.edge_count


Payload = Union[EdfWitness, LabelledGraph]


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise WitnessFormatError(f'{what} must be an integer, got {value!r}')
    return value


def _field(d: Dict[str, Any], key: str, kind: type, where: str):
    if not isinstance(d, dict) or key not in d:
        raise WitnessFormatError(f'{where} is missing "{key}"')
    if not isinstance(d[key], kind):
        raise WitnessFormatError(f'{where}.{key} has the wrong type')
    return d[key]


def _vertex_out(v: Vertex):
    if isinstance(v, tuple):
        return [_vertex_out(x) for x in v]
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return v
    raise WitnessFormatError(f'vertex {v!r} cannot be written as JSON')


def _vertex_in(v) -> Vertex:
    if isinstance(v, list):
        return tuple(_vertex_in(x) for x in v)
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise WitnessFormatError(f'vertex {v!r} is neither a string, an integer nor a list')
    return v


def _pairs_in(raw: List, count: int, where: str):
    pairs = []
    for pair in raw:
        if not isinstance(pair, list) or len(pair) != 2:
            raise WitnessFormatError(f'{where} entries must be [i, j] pairs')
        i, j = (_int(x, where) for x in pair)
        if not (0 <= i < count and 0 <= j < count):
            raise WitnessFormatError(f'{where} index out of range in {pair}')
        pairs.append((i, j))
    return tuple(pairs)


def _report_out(r: ArcReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {'arc': list(r.arc), 'size': r.size}
    if r.interval is not None:
        out['interval'] = list(r.interval)
    else:
        out['residues'] = list(r.residues)
    return out


def _report_in(d) -> ArcReport:
    arc = _field(d, 'arc', list, 'transcript entry')
    interval = d.get('interval')
    return ArcReport(tuple(_int(x, 'arc') for x in arc), _int(_field(d, 'size', int, 'transcript entry'), 'size'),
                     None if interval is None else tuple(_int(x, 'interval') for x in interval),
                     tuple(_int(x, 'residues') for x in d.get('residues', ())))


def witness_to_dict(w: EdfWitness) -> Dict[str, Any]:
    params = {'n': w.params.n, 'm': w.params.m, 'l': w.params.l, 'lambda': w.params.lam}
    if w.params.c is not None:
        params['c'] = w.params.c
    out = {
        'version': SCHEMA_VERSION,
        'params': params,
        'digraph': {'vertices': [_vertex_out(v) for v in w.vertices], 'arcs': [list(a) for a in w.arcs],
                    'directed': True},
        'family': w.family.as_lists(),
        'verified': w.verified,
    }
    if w.transcript:
        out['transcript'] = [_report_out(r) for r in w.transcript]
    return out


def labelled_to_dict(lg: LabelledGraph) -> Dict[str, Any]:
    directed = isinstance(lg.target, Digraph)
    vertices = lg.target.vertices
    index = {v: i for i, v in enumerate(vertices)}
    pairs = lg.target.arcs if directed else lg.target.edges
    out = {
        'version': SCHEMA_VERSION,
        'params': {'n': lg.n},
        'digraph': {'vertices': [_vertex_out(v) for v in vertices], 'arcs': [[index[u], index[v]] for u, v in pairs],
                    'directed': directed},
        'labels': lg.labelling.values_for(vertices),
    }
    if lg.labelling.bipartition is not None:
        out['sides'] = [int(lg.labelling.bipartition[v]) for v in vertices]
    if lg.kind is not None:
        out['class'] = lg.kind.value
    return out


def to_dict(payload: Payload) -> Dict[str, Any]:
    return witness_to_dict(payload) if isinstance(payload, EdfWitness) else labelled_to_dict(payload)


def _witness_from(d: Dict[str, Any], vertices, arcs) -> EdfWitness:
    params = d['params']
    c = params.get('c')
    p = EdfParams(_int(_field(params, 'n', int, 'params'), 'n'), _int(_field(params, 'm', int, 'params'), 'm'),
                  _int(_field(params, 'l', int, 'params'), 'l'), _int(params.get('lambda', 1), 'lambda'),
                  None if c is None else _int(c, 'c'))
    raw = _field(d, 'family', list, 'witness')
    if not all(isinstance(s, list) for s in raw):
        raise WitnessFormatError('family must be a list of integer lists')
    family = SetFamily.of(p.n, [[_int(x, 'family element') for x in s] for s in raw])
    if len(family) != len(vertices):
        raise WitnessFormatError(f'{len(family)} sets for {len(vertices)} vertices')
    transcript = tuple(_report_in(r) for r in d.get('transcript', ()))
    return EdfWitness(p, vertices, arcs, family, transcript, bool(d.get('verified', False)))


def _labelled_from(d: Dict[str, Any], vertices, arcs, directed: bool) -> LabelledGraph:
    labels = [_int(x, 'label') for x in _field(d, 'labels', list, 'labelled graph')]
    if len(labels) != len(vertices):
        raise WitnessFormatError(f'{len(labels)} labels for {len(vertices)} vertices')
    pairs = tuple((vertices[i], vertices[j]) for i, j in arcs)
    target = Digraph(vertices, pairs) if directed else Graph(vertices, pairs)
    sides = None
    if 'sides' in d:
        raw = [_int(s, 'side') for s in _field(d, 'sides', list, 'labelled graph')]
        if len(raw) != len(vertices) or any(s not in (0, 1) for s in raw):
            raise WitnessFormatError('sides must hold one 0/1 entry per vertex')
        sides = {v: Side(s) for v, s in zip(vertices, raw)}
    kind = None
    if 'class' in d:
        try:
            kind = ValuationKind(d['class'])
        except ValueError:
            raise WitnessFormatError(f'unknown valuation class {d["class"]!r}') from None
    return LabelledGraph(target, Labelling(dict(zip(vertices, labels)), sides), kind)


def from_dict(d: Dict[str, Any]) -> Payload:
    """Rebuild a payload; structural errors from the model types surface as :class:`WitnessFormatError`."""
    version = _field(d, 'version', int, 'document')
    if version != SCHEMA_VERSION:
        raise WitnessFormatError(f'unsupported schema version {version}')
    _field(d, 'params', dict, 'document')
    graph = _field(d, 'digraph', dict, 'document')
    vertices = tuple(_vertex_in(v) for v in _field(graph, 'vertices', list, 'digraph'))
    arcs = _pairs_in(_field(graph, 'arcs', list, 'digraph'), len(vertices), 'digraph.arcs')
    try:
        if 'family' in d:
            return _witness_from(d, vertices, arcs)
        return _labelled_from(d, vertices, arcs, bool(graph.get('directed', True)))
    except WitnessFormatError:
        raise
    except EdfForgeError as e:
        raise WitnessFormatError(str(e)) from e


def dumps(payload: Payload) -> str:
    return json.dumps(to_dict(payload), indent=2) + '\n'


def loads(text: str) -> Payload:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise WitnessFormatError(f'not JSON: {e.msg} at line {e.lineno}') from None
    if not isinstance(d, dict):
        raise WitnessFormatError('top level must be an object')
    return from_dict(d)


def save(path: Union[str, Path], payload: Payload):
    Path(path).write_text(dumps(payload), encoding='utf_8')
    log.debug('wrote %s', path)


def load(path: Union[str, Path]) -> Payload:
    try:
        text = Path(path).read_text(encoding='utf_8')
    except OSError as e:
        raise WitnessFormatError(f'cannot read {path}: {e.strerror}') from None
    log.debug('read %s', path)
    return loads(text)


def _quote(v) -> str:
    return '"' + str(v).replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(payload: Payload) -> str:
    """Graphviz source with vertex labels on nodes and differences on edges.

    A witness is drawn blown up: one node per family element, one edge per element pair of every arc.
    """
    lines = []
    if isinstance(payload, EdfWitness):
        n = payload.params.n
        lines.append('digraph edf {')
        for i, s in enumerate(payload.family.sets):
            for x in s:
                lines.append(f'  {_quote(f"{i}:{x}")} [label="{x}"];')
        for i, j in payload.arcs:
            for x in payload.family[i]:
                for y in payload.family[j]:
                    lines.append(f'  {_quote(f"{i}:{x}")} -> {_quote(f"{j}:{y}")} [label="{(y - x) % n}"];')
    else:
        target, b = payload.target, payload.labelling
        directed = isinstance(target, Digraph)
        lines.append('digraph labelled {' if directed else 'graph labelled {')
        for v in target.vertices:
            lines.append(f'  {_quote(v)} [label="{b[v]}"];')
        if directed:
            for u, v in target.arcs:
                lines.append(f'  {_quote(u)} -> {_quote(v)} [label="{(b[v] - b[u]) % (payload.n + 1)}"];')
        else:
            for u, v in target.edges:
                lines.append(f'  {_quote(u)} -- {_quote(v)} [label="{abs(b[v] - b[u])}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
