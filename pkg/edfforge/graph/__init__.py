from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from edfforge import EdfForgeError
from edfforge.types import Side

Vertex = Hashable
Pair = Tuple[Vertex, Vertex]


class GraphError(EdfForgeError):
    ...


def _vertex_order(pairs: Iterable[Pair]) -> Tuple[Vertex, ...]:
    seen: Dict[Vertex, None] = {}
    for u, v in pairs:
        seen.setdefault(u)
        seen.setdefault(v)
    return tuple(seen)


def _check_pairs(vertices: Sequence[Vertex], pairs: Sequence[Pair], what: str):
    if len(set(vertices)) != len(vertices):
        raise GraphError('repeated vertex')
    known = set(vertices)
    touched = set()
    for u, v in pairs:
        if u not in known or v not in known:
            raise GraphError(f'{what} {(u, v)!r} has an unknown endpoint')
        if u == v:
            raise GraphError(f'loop at {u!r}')
        touched.add(u)
        touched.add(v)
    isolated = known - touched
    if isolated:
        raise GraphError(f'isolated vertex {next(iter(isolated))!r}')


@dataclass(frozen=True)
class Graph:
    """Finite simple graph without isolated vertices; vertex and edge order is creation order."""
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'edges', tuple((u, v) for u, v in self.edges))
        _check_pairs(self.vertices, self.edges, 'edge')
        if len({frozenset(e) for e in self.edges}) != len(self.edges):
            raise GraphError('duplicate edge')

    @classmethod
    def from_edges(cls, edges: Iterable[Pair], vertices: Optional[Iterable[Vertex]] = None) -> 'Graph':
        edges = tuple(edges)
        return cls(tuple(vertices) if vertices is not None else _vertex_order(edges), edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbours(self) -> Dict[Vertex, List[Vertex]]:
        adj: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: Vertex) -> int:
        return sum(v in e for e in self.edges)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return frozenset((u, v)) in {frozenset(e) for e in self.edges}

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Digraph:
    """Oriented graph: no loops, and at most one of ``(u, v)``, ``(v, u)``."""
    vertices: Tuple[Vertex, ...]
    arcs: Tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'arcs', tuple((u, v) for u, v in self.arcs))
        _check_pairs(self.vertices, self.arcs, 'arc')
        if len({frozenset(a) for a in self.arcs}) != len(self.arcs):
            raise GraphError('arc repeated or present in both directions')

    @classmethod
    def from_arcs(cls, arcs: Iterable[Pair], vertices: Optional[Iterable[Vertex]] = None) -> 'Digraph':
        arcs = tuple(arcs)
        return cls(tuple(vertices) if vertices is not None else _vertex_order(arcs), arcs)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def edge_count(self) -> int:
        return len(self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.vertices, self.arcs)

    def neighbours(self) -> Dict[Vertex, List[Vertex]]:
        return self.underlying().neighbours()

    def reverse(self, indices: Iterable[int]) -> 'Digraph':
        """Reverse the arcs at the given positions; positions are kept."""
        flip = set(indices)
        return Digraph(self.vertices, tuple((v, u) if i in flip else (u, v) for i, (u, v) in enumerate(self.arcs)))

    def to_networkx(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(self.vertices)
        d.add_edges_from(self.arcs)
        return d


@dataclass(frozen=True, eq=False)
class Labelling:
    """Injective vertex labelling, optionally carrying a small/large partition."""
    assignment: Mapping[Vertex, int]
    bipartition: Optional[Mapping[Vertex, Side]] = None

    def __post_init__(self):
        object.__setattr__(self, 'assignment', dict(self.assignment))
        values = list(self.assignment.values())
        if len(set(values)) != len(values):
            raise GraphError('labelling is not injective')
        if self.bipartition is not None:
            sides = {v: Side(s) for v, s in self.bipartition.items()}
            if set(sides) != set(self.assignment):
                raise GraphError('bipartition does not partition the labelled vertices')
            object.__setattr__(self, 'bipartition', sides)

    def __getitem__(self, v: Vertex) -> int:
        return self.assignment[v]

    def __eq__(self, other):
        if not isinstance(other, Labelling):
            return NotImplemented
        return self.assignment == other.assignment and self.bipartition == other.bipartition

    def __hash__(self):
        return hash(tuple(sorted(self.assignment.values())))

    def values_for(self, vertices: Iterable[Vertex]) -> List[int]:
        return [self.assignment[v] for v in vertices]


@dataclass(frozen=True)
class BipartiteWitness:
    side_s: FrozenSet[Vertex]
    side_t: FrozenSet[Vertex] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'side_s', frozenset(self.side_s))
        object.__setattr__(self, 'side_t', frozenset(self.side_t))
        if self.side_s & self.side_t:
            raise GraphError('bipartition sides overlap')

    def validate(self, g: Graph):
        if self.side_s | self.side_t != set(g.vertices):
            raise GraphError('bipartition does not cover the vertex set')
        for u, v in g.edges:
            if (u in self.side_s) == (v in self.side_s):
                raise GraphError(f'edge {(u, v)!r} does not cross the bipartition')

    def sides(self) -> Dict[Vertex, Side]:
        sides = {v: Side.small for v in self.side_s}
        sides.update((v, Side.large) for v in self.side_t)
        return sides

    @classmethod
    def from_sides(cls, sides: Mapping[Vertex, Side]) -> 'BipartiteWitness':
        return cls(frozenset(v for v, s in sides.items() if s == Side.small),
                   frozenset(v for v, s in sides.items() if s == Side.large))


def require_labelling(vertices: Iterable[Vertex], b: Labelling):
    missing = [v for v in vertices if v not in b.assignment]
    if missing:
        raise GraphError(f'vertex {missing[0]!r} is not labelled')
