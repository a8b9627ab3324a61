"""Simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import SelfLoopError, VertexRangeError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``; ``adjacency``
    holds sorted neighbour tuples and is derived from ``edges``.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edge_list: Iterable[Edge]) -> "Graph":
        return build_graph(n, edge_list)[0]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Apply a vertex permutation ``v -> perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Bipartition:
    """Two-colouring of a bipartite graph; ``side[v]`` is 0 or 1."""

    side: tuple[int, ...]

    def part(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.side) if c == color)


def build_graph(n: int, edge_list: Iterable[Edge]) -> tuple[Graph, int]:
    """Normalise an edge list into a :class:`Graph`.

    Returns the graph together with the number of duplicate edges that were
    collapsed. Self-loops and out-of-range endpoints raise.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    duplicates = 0
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            duplicates += 1
        seen.add(e)
    edges = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, edges, adjacency), duplicates


def _two_color(g: Graph) -> tuple[list[int] | None, list[int] | None]:
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, _odd_cycle_from_conflict(u, w, parent, depth)
    return color, None


def _odd_cycle_from_conflict(u, w, parent, depth) -> list[int]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left and right both end at the common ancestor
    return left + right[-2::-1]


def is_bipartite(g: Graph) -> Bipartition | None:
    """BFS two-colouring per component, or ``None`` when an odd cycle exists."""
    color, _ = _two_color(g)
    return None if color is None else Bipartition(tuple(color))


def find_odd_cycle(g: Graph) -> list[int] | None:
    """An odd cycle as a vertex sequence, or ``None`` if ``g`` is bipartite."""
    return _two_color(g)[1]


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the complement of ``s``, relabelled contiguously.

    The returned map sends each surviving old vertex to its new label.
    """
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise VertexRangeError(f"vertex {v} outside [0, {g.n})")
    relabel = {}
    for v in range(g.n):
        if v not in removed:
            relabel[v] = len(relabel)
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return build_graph(len(relabel), edges)[0], relabel


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return build_graph(g1.n + g2.n, edges)[0]


def empty_graph(n: int = 0) -> Graph:
    return build_graph(n, ())[0]
