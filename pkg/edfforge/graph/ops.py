"""Orientation and product constructions on :class:`Graph` and :class:`Digraph`."""
import itertools
from typing import Dict, Mapping, Tuple, Union

from edfforge.graph import (BipartiteWitness, Digraph, Graph, GraphError, Labelling, Vertex,
                            require_labelling)

Replacement = Dict[Vertex, Tuple[Vertex, ...]]


def natural_orientation(g: Graph, b: Labelling) -> Digraph:
    """Orient every edge towards its larger label."""
    require_labelling(g.vertices, b)
    return Digraph(g.vertices, tuple((u, v) if b[u] < b[v] else (v, u) for u, v in g.edges))


def _replacement(vertices, sizes: Mapping[Vertex, int]) -> Replacement:
    out: Replacement = {}
    for v in vertices:
        if v not in sizes:
            raise GraphError(f'no blow-up size for {v!r}')
        k = sizes[v]
        if k < 1:
            raise GraphError(f'blow-up size for {v!r} must be positive, got {k}')
        out[v] = tuple((v, i) for i in range(k))
    return out


def _blow_pairs(pairs, replacement: Replacement):
    return tuple((x, y) for s, t in pairs for x in replacement[s] for y in replacement[t])


def blow_up(g: Graph, sizes: Mapping[Vertex, int]) -> Tuple[Graph, Replacement]:
    """Replace each vertex ``s`` by ``sizes[s]`` independent copies ``(s, i)`` joined completely along edges.

    :return: The blown-up graph and the map from each original vertex to its copies.
    """
    replacement = _replacement(g.vertices, sizes)
    vertices = tuple(c for v in g.vertices for c in replacement[v])
    return Graph(vertices, _blow_pairs(g.edges, replacement)), replacement


def digraph_blow_up(d: Digraph, sizes: Mapping[Vertex, int]) -> Tuple[Digraph, Replacement]:
    replacement = _replacement(d.vertices, sizes)
    vertices = tuple(c for v in d.vertices for c in replacement[v])
    return Digraph(vertices, _blow_pairs(d.arcs, replacement)), replacement


def lexicographic_with_empty(g: Graph, l: int) -> Graph:
    """G · K^c_l: vertex set V(G) x {0..l-1}, (x, i) ~ (y, j) iff x ~ y in G."""
    if l < 1:
        raise GraphError(f'l must be positive, got {l}')
    vertices = tuple(itertools.product(g.vertices, range(l)))
    position = {v: i for i, v in enumerate(g.vertices)}
    adjacent = {frozenset(e) for e in g.edges}
    edges = []
    for a, b in itertools.combinations(vertices, 2):
        if frozenset((a[0], b[0])) in adjacent:
            edges.append((a, b) if position[a[0]] <= position[b[0]] else (b, a))
    return Graph(vertices, tuple(edges))


def weak_tensor_product(g: Graph, gw: BipartiteWitness, h: Graph, hw: BipartiteWitness) -> Graph:
    """Vertices (V1 x W1) + (V2 x W2); (x, y) ~ (u, v) iff x ~ u in G and y ~ v in H."""
    gw.validate(g)
    hw.validate(h)
    left = [(x, y) for x in g.vertices if x in gw.side_s for y in h.vertices if y in hw.side_s]
    right = [(u, v) for u in g.vertices if u in gw.side_t for v in h.vertices if v in hw.side_t]
    edges = []
    for x, u in _oriented(g, gw):
        for y, v in _oriented(h, hw):
            edges.append(((x, y), (u, v)))
    return Graph(tuple(left + right), tuple(edges))


def _oriented(g: Graph, w: BipartiteWitness):
    return [(u, v) if u in w.side_s else (v, u) for u, v in g.edges]


def compose(first: Replacement, second: Replacement) -> Replacement:
    """Replacement map of a blow-up of a blow-up, original vertex to its final copies."""
    return {v: tuple(c2 for c1 in children for c2 in second[c1]) for v, children in first.items()}


def edge_set(g: Union[Graph, Digraph]) -> set:
    if isinstance(g, Graph):
        return {frozenset(e) for e in g.edges}
    return set(g.arcs)
