"""Simple undirected graphs on vertex ids ``0..n-1``.

Edges are stored canonically as ``(min, max)`` pairs and indexed in
lexicographic order; every coloring array in the package uses that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    pass


class _Infinity:
    """Distance between vertices in different components.

    Comparable with integers, but arithmetic on it raises.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("rainbowrc.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def _no_arith(self, *args):
        raise TypeError("arithmetic on infinite distance")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arith


INF = _Infinity()


@dataclass(frozen=True)
class Bipartition:
    class_a: frozenset
    class_b: frozenset


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple  # sorted tuple of (u, v) with u < v
    adjacency: tuple = field(repr=False)  # tuple of frozensets
    edge_index: dict = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def build_graph(n: int, edge_list: Iterable) -> Graph:
    """Build a graph, collapsing duplicate edges. Loops and bad ids raise."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    pairs = set()
    for e in edge_list:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        pairs.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(pairs))
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(
        n=n,
        edges=edges,
        adjacency=tuple(frozenset(a) for a in adj),
        edge_index={e: i for i, e in enumerate(edges)},
    )


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise GraphError("min_degree of empty graph")
    return min(g.degrees())


def sigma2(g: Graph) -> int:
    """Minimum of d(u) + d(v) over non-adjacent pairs u != v."""
    deg = g.degrees()
    best = None
    for u, v in combinations(range(g.n), 2):
        if v not in g.adjacency[u]:
            s = deg[u] + deg[v]
            if best is None or s < best:
                best = s
    if best is None:
        raise GraphError("sigma2 undefined: no non-adjacent pair")
    return best


def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] is INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int):
    """Shortest-path length, or ``INF`` if u and v are disconnected."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return bfs_distances(g, u)[v]


def diameter(g: Graph):
    if g.n < 1:
        raise GraphError("diameter of empty graph")
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if any(d is INF for d in dist):
            return INF
        best = max(best, max(dist))
    return best


def common_neighbors(g: Graph, u: int, v: int) -> frozenset:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return g.adjacency[u] & g.adjacency[v]


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise GraphError("connectivity of empty graph")
    return len(components(g)) == 1


def bipartition(g: Graph) -> Bipartition | None:
    """2-color by BFS layers; the lowest id of each component goes to class_a."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return Bipartition(
        class_a=frozenset(v for v in range(g.n) if side[v] == 0),
        class_b=frozenset(v for v in range(g.n) if side[v] == 1),
    )


def is_complete_bipartite(g: Graph, parts: Bipartition) -> bool:
    return g.m == len(parts.class_a) * len(parts.class_b)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
