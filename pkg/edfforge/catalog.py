"""Small labelled instances that the constructions are checked against."""
from typing import Tuple

from edfforge.families import cycle_edges
from edfforge.graph import Digraph, Graph, Labelling
from edfforge.helper import vertex_names


def five_vertex_near_alpha() -> Tuple[Graph, Labelling]:
    """Five vertices, five edges: a 4-cycle ``v1 v2 v3 v4`` with a pendant ``v5`` on ``v1``."""
    g = Graph.from_edges([('v1', 'v2'), ('v2', 'v3'), ('v3', 'v4'), ('v1', 'v4'), ('v1', 'v5')])
    return g, Labelling({'v1': 0, 'v2': 3, 'v3': 2, 'v4': 4, 'v5': 5})


def rosa_star_graph() -> Graph:
    """S_{3,2}: a root joined to three paths of length two."""
    return Graph.from_edges([('r', 'm1'), ('r', 'm2'), ('r', 'm3'), ('m1', 'w1'), ('m2', 'w2'), ('m3', 'w3')])


def rosa_star_near_alpha() -> Tuple[Graph, Labelling]:
    return rosa_star_graph(), Labelling({'r': 0, 'm1': 5, 'm2': 3, 'm3': 6, 'w1': 4, 'w2': 1, 'w3': 2})


def orbeta_digraph() -> Tuple[Digraph, Labelling]:
    """Seven arcs whose differences cover Z_8 once although the undirected differences repeat 1 and 2."""
    d = Digraph(('a', 'b', 'c', 'd', 'e', 'f'),
                (('a', 'b'), ('a', 'c'), ('a', 'e'), ('d', 'b'), ('d', 'e'), ('f', 'e'), ('f', 'c')))
    return d, Labelling({'a': 0, 'b': 5, 'c': 3, 'd': 6, 'e': 4, 'f': 2})


def oralp_digraph() -> Tuple[Digraph, Labelling]:
    """Eight arcs, oriented near-α mod 9 but not near-α undirected (7 repeats)."""
    d = Digraph(('a', 'b', 'c', 'd', 'e', 'f'),
                (('b', 'f'), ('e', 'c'), ('b', 'd'), ('b', 'e'), ('a', 'f'), ('c', 'd'), ('a', 'd'), ('a', 'e')))
    return d, Labelling({'a': 0, 'b': 4, 'c': 1, 'd': 7, 'e': 8, 'f': 5})


def two_disjoint_edges() -> Graph:
    return Graph.from_edges([('a', 'b'), ('c', 'd')])


def path_graph(m: int) -> Graph:
    names = vertex_names('v', m, 1)
    return Graph(names, tuple(zip(names, names[1:])))


def cycle_graph(m: int) -> Graph:
    names = vertex_names('v', m, 1)
    return Graph(names, cycle_edges(names))


def unidirectional_cycle(m: int) -> Digraph:
    names = vertex_names('v', m, 1)
    return Digraph(names, cycle_edges(names))
