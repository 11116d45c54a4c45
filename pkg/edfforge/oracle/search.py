"""Exhaustive valuation search for small graphs and digraphs.

Vertices are labelled in order of descending degree, labels are tried in ascending order, and a branch is cut
as soon as two edges share a difference or a side constraint breaks. The first labelling found is returned,
so results are reproducible.
"""
import itertools
import logging
from concurrent import futures
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from edfforge.config import search_limits
from edfforge.graph import Digraph, Graph, Labelling, Vertex
from edfforge.oracle import OracleError, SearchLimitExceeded
from edfforge.types import SearchLimits, Side
from edfforge.valuation import ValuationKind
from edfforge.valuation.check import satisfies

log = logging.getLogger(__name__)

_SIDED = (ValuationKind.alpha, ValuationKind.near_alpha, ValuationKind.oriented_near_alpha)


class _Backtracker:
    """One search branch: the first vertex is pinned to ``start`` and the rest are filled depth-first."""

    def __init__(self, order: Sequence[Vertex], earlier: Dict[Vertex, List[Tuple[Vertex, bool]]], n: int,
                 oriented: bool, sides: Optional[Dict[Vertex, Side]], global_split: bool):
        self.order = order
        self.earlier = earlier
        self.n = n
        self.oriented = oriented
        self.sides = sides
        self.global_split = global_split
        self.labels: Dict[Vertex, int] = {}
        self.used = [False] * (n + 1)
        self.seen = [False] * (n + 1)
        self.small: List[int] = []
        self.large: List[int] = []
        self.nodes = 0

    def _difference(self, other: int, x: int, outgoing: bool) -> int:
        # outgoing: the arc runs from the earlier vertex to the one being placed
        if not self.oriented:
            return abs(x - other)
        return (x - other) % (self.n + 1) if outgoing else (other - x) % (self.n + 1)

    def _side_ok(self, v: Vertex, x: int) -> bool:
        if self.sides is None:
            return True
        if self.global_split:
            if self.sides[v] == Side.small:
                return not self.large or x < min(self.large)
            return not self.small or x > max(self.small)
        small = self.sides[v] == Side.small
        return all((x < self.labels[u]) == small for u, _ in self.earlier[v])

    def run(self, start: int) -> Optional[Dict[Vertex, int]]:
        return dict(self.labels) if self._place(0, start) else None

    def _place(self, idx: int, start: int) -> bool:
        if idx == len(self.order):
            return True
        v = self.order[idx]
        for x in ((start,) if idx == 0 else range(self.n + 1)):
            if self.used[x] or not self._side_ok(v, x):
                continue
            self.nodes += 1
            fresh: List[int] = []
            for u, outgoing in self.earlier[v]:
                e = self._difference(self.labels[u], x, outgoing)
                if e == 0 or self.seen[e] or e in fresh:
                    break
                fresh.append(e)
            else:
                self._push(v, x, fresh)
                if self._place(idx + 1, start):
                    return True
                self._pop(v, x, fresh)
        return False

    def _push(self, v, x, fresh):
        self.labels[v] = x
        self.used[x] = True
        for e in fresh:
            self.seen[e] = True
        if self.sides is not None:
            (self.small if self.sides[v] == Side.small else self.large).append(x)

    def _pop(self, v, x, fresh):
        del self.labels[v]
        self.used[x] = False
        for e in fresh:
            self.seen[e] = False
        if self.sides is not None:
            (self.small if self.sides[v] == Side.small else self.large).pop()


def _side_options(g: Graph) -> List[Dict[Vertex, Side]]:
    """Every small/large assignment that properly 2-colours ``g``, one choice per component."""
    nxg = g.to_networkx()
    if not nx.is_bipartite(nxg):
        return []
    colour = nx.bipartite.color(nxg)
    position = {v: i for i, v in enumerate(g.vertices)}
    components = sorted((sorted(c, key=position.get) for c in nx.connected_components(nxg)),
                        key=lambda c: position[c[0]])
    options = []
    for swaps in itertools.product((False, True), repeat=len(components)):
        sides = {}
        for comp, swap in zip(components, swaps):
            base = colour[comp[0]]
            for v in comp:
                sides[v] = Side.small if (colour[v] == base) != swap else Side.large
        options.append(sides)
    return options


def _search(target: Union[Graph, Digraph], kind: ValuationKind, limits: Optional[SearchLimits]) -> Optional[Labelling]:
    limits = limits or search_limits()
    if len(target.vertices) > limits.max_vertices:
        raise SearchLimitExceeded(f'{len(target.vertices)} vertices exceeds the search bound {limits.max_vertices}'
                                  f' (raise EDF_FORGE_MAX_SEARCH)')
    oriented = isinstance(target, Digraph)
    pairs = target.arcs if oriented else target.edges
    n = len(pairs)
    if n + 1 < len(target.vertices):
        return None
    degree = {v: 0 for v in target.vertices}
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    order = sorted(target.vertices, key=lambda v: -degree[v])
    position = {v: i for i, v in enumerate(order)}
    earlier: Dict[Vertex, List[Tuple[Vertex, bool]]] = {v: [] for v in order}
    for u, v in pairs:
        if position[u] < position[v]:
            earlier[v].append((u, True))
        else:
            earlier[u].append((v, False))

    underlying = target.underlying() if isinstance(target, Digraph) else target
    side_options: List[Optional[Dict[Vertex, Side]]] = [None]
    if kind in _SIDED:
        side_options = list(_side_options(underlying))
    global_split = kind is ValuationKind.alpha

    def branch(args):
        sides, start = args
        bt = _Backtracker(order, earlier, n, oriented, sides, global_split)
        found = bt.run(start)
        return found, bt.nodes

    for sides in side_options:
        jobs = [(sides, start) for start in range(n + 1)]
        if limits.workers > 1:
            with futures.ThreadPoolExecutor(max_workers=limits.workers) as pool:
                results = list(pool.map(branch, jobs))
        else:
            results = []
            for job in jobs:
                results.append(branch(job))
                if results[-1][0] is not None:
                    break
        log.debug('%s search on %d vertices visited %d nodes', kind.value, len(order), sum(r[1] for r in results))
        for found, _ in results:
            if found is not None:
                out = Labelling(found, sides)
                if not satisfies(target, out, kind):
                    raise OracleError(f'search returned a labelling outside {kind.value}')
                return out
    return None


def search_beta(g: Graph, kind: ValuationKind = ValuationKind.beta,
                limits: Optional[SearchLimits] = None) -> Optional[Labelling]:
    """Find a β, α or near-α valuation of ``g``, or ``None`` when none exists.

    :raises SearchLimitExceeded: if ``g`` has more vertices than the configured bound.
    """
    if kind not in (ValuationKind.beta, ValuationKind.alpha, ValuationKind.near_alpha):
        raise OracleError(f'{kind.value} is not an undirected class')
    return _search(g, kind, limits)


def search_oriented_beta(d: Digraph, kind: ValuationKind = ValuationKind.oriented_beta,
                         limits: Optional[SearchLimits] = None) -> Optional[Labelling]:
    if kind not in (ValuationKind.oriented_beta, ValuationKind.oriented_near_alpha):
        raise OracleError(f'{kind.value} is not an oriented class')
    return _search(d, kind, limits)
