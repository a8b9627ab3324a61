"""Deterministic test graphs: named families, exhaustive enumeration, the worked-example graph."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations, product
from typing import Iterator

from .errors import GraphError
from .graph import Graph, build_graph, find_odd_cycle

MAX_EXHAUSTIVE_N = 8


@dataclass(frozen=True)
class FamilySpec:
    """``family`` is one of path, cycle, star, complete_bipartite,
    tree_random, bipartite_random; ``params`` are its integers in order
    (for the random families, the seed comes first)."""

    family: str
    params: tuple[int, ...] = ()


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def random_tree(seed: int, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a seeded Prufer sequence."""
    if n <= 1:
        return Graph.from_edges(max(n, 0), ())
    rng = random.Random(seed)
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_bipartite(seed: int, n: int, m: int) -> Graph:
    """``m`` distinct edges across a random bipartition of ``n`` vertices."""
    rng = random.Random(seed)
    side = [rng.randrange(2) for _ in range(n)]
    cross = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]
    if m > len(cross):
        raise GraphError(f"cannot place {m} edges across this bipartition ({len(cross)} available)")
    return Graph.from_edges(n, rng.sample(cross, m))


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "tree_random": (random_tree, 2),
    "bipartite_random": (random_bipartite, 3),
}


def generate(spec: FamilySpec) -> Graph:
    try:
        fn, arity = _FAMILIES[spec.family]
    except KeyError:
        raise GraphError(f"unknown family {spec.family!r}") from None
    if len(spec.params) != arity or any(p < 0 for p in spec.params):
        raise GraphError(f"{spec.family} takes {arity} nonnegative integer parameters, got {spec.params}")
    return fn(*spec.params)


# -- exhaustive enumeration ---------------------------------------------------

def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    if n > 7:
        raise GraphError(f"exhaustive labelled enumeration of all graphs is capped at n=7, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (e for k, e in enumerate(pairs) if mask >> k & 1))


def all_bipartite_graphs(n: int) -> Iterator[Graph]:
    """Every bipartite graph on ``n`` labelled vertices, each exactly once.

    Iterates over 2-colourings and subsets of the cross edges; a graph is
    emitted only under the colouring that gives the smallest vertex of each
    component colour 0, which makes the colouring unique.
    """
    if n > MAX_EXHAUSTIVE_N:
        raise GraphError(f"exhaustive bipartite enumeration is capped at n={MAX_EXHAUSTIVE_N}, got {n}")
    if n == 0:
        yield Graph.from_edges(0, ())
        return
    for rest in product((0, 1), repeat=n - 1):
        side = (0,) + rest
        cross = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]
        for mask in range(1 << len(cross)):
            edges = [e for k, e in enumerate(cross) if mask >> k & 1]
            if _canonical_coloring(n, edges, side):
                yield Graph.from_edges(n, edges)


def _canonical_coloring(n, edges, side) -> bool:
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    # union by minimum keeps each root at its component's smallest vertex
    return all(side[find(v)] == 0 for v in range(n))


def _nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _from_nx(h) -> Graph:
    index = {v: k for k, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def bipartite_graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of bipartite graphs on ``n`` vertices.

    Built edge by edge (deleting an edge never breaks bipartiteness, so every
    class is reachable), deduplicating with a Weisfeiler-Lehman hash and an
    exact isomorphism test. n <= 10 is stored as graph6 data and loaded.
    """
    stored = _load_classes(n)
    if stored is not None:
        return stored
    return _build_bipartite_classes(n)


def _build_bipartite_classes(n: int) -> list[Graph]:
    import networkx as nx

    level = [Graph.from_edges(n, ())]
    out = list(level)
    pairs = list(combinations(range(n), 2))
    while level:
        buckets: dict[str, list] = {}
        nxt = []
        for g in level:
            for u, v in pairs:
                if g.has_edge(u, v):
                    continue
                h = Graph.from_edges(n, g.edges + ((u, v),))
                if find_odd_cycle(h) is not None:
                    continue
                hx = _nx(h)
                key = nx.weisfeiler_lehman_graph_hash(hx, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(hx, other) for other in bucket):
                    continue
                bucket.append(hx)
                nxt.append(h)
        out.extend(nxt)
        level = nxt
    return out


@lru_cache(maxsize=None)
def _load_classes_cached(n: int):
    from .formats import parse_graph6

    name = f"bipartite_classes_n{n}.g6"
    try:
        text = resources.files("permpoly.data").joinpath(name).read_text()
    except FileNotFoundError:
        return None
    return tuple(parse_graph6(line) for line in text.split())


def _load_classes(n: int) -> list[Graph] | None:
    stored = _load_classes_cached(n)
    return None if stored is None else list(stored)


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of all graphs on ``n <= 7`` vertices."""
    import networkx as nx

    if n > 7:
        raise GraphError("the graph atlas covers n <= 7 only")
    return [_from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


# -- worked-example graph -----------------------------------------------------------------

FIGURE1_PHI_P = (1, 0, 18, 0, 47, 0, 40, 0, 12, 0, 1)
FIGURE1_PI = (9, 0, 58, 0, 91, 0, 52, 0, 12, 0, 1)
FIGURE1_DELETION_PHI_P = (
    (0, 0, 3, 0, 4, 0, 1),  # P5 u K1
    (1, 0, 4, 0, 4, 0, 1),  # P4 u K2
    (0, 0, 1, 0, 3, 0, 1),  # P4 u K1 u K1
    (1, 0, 1),  # K2
    (0, 0, 1),  # K1 u K1
)


def figure1_fingerprint_ok(g: Graph) -> bool:
    """All worked-example constraints at once: size, K_{2,3}, cycles, polynomials."""
    from .cycles import classify, Verdict
    from .graph import delete_vertices
    from .spectra import modified_char_poly

    if g.n != 10 or g.m != 12 or find_odd_cycle(g) is not None:
        return False
    if modified_char_poly(g).coeffs != FIGURE1_PHI_P:
        return False
    cls = classify(g)
    if cls.verdict is not Verdict.FOUR_K_INTERCYCLIC or cls.length_counts() != {4: 3, 8: 2}:
        return False
    got = sorted(
        modified_char_poly(delete_vertices(g, c.vertex_set)[0]).coeffs
        for c in cls.four_k_cycles
    )
    return got == sorted(FIGURE1_DELETION_PHI_P) and contains_k23(g)


def contains_k23(g: Graph) -> bool:
    for a, b in combinations(range(g.n), 2):
        if len(set(g.adjacency[a]) & set(g.adjacency[b])) >= 3:
            return True
    return False


def search_figure1(first_only: bool = False) -> list[Graph]:
    """Constrained search for graphs matching the worked-example fingerprint.

    K_{2,3} sits on vertices 0..4 (sides {0,1} and {2,3,4}); six more edges
    are placed among all ten vertices. Since the search graph already holds
    the K_{2,3}, new vertices 5..9 are interchangeable, so only edge sets whose
    new-vertex degrees are non-increasing are examined. Cheap necessary
    conditions prune before the exact polynomial checks:

    * 46 pairs of disjoint edges (the x^6 coefficient 40 of phi_p is the
      number of 2-matchings minus twice the number of 4-cycles, here 3),
      i.e. the sum of C(deg, 2) over vertices is 66 - 46 = 20;
    * exactly three 4-cycles.
    """
    base = [(a, b) for a in (0, 1) for b in (2, 3, 4)]
    forbidden = {(0, 1), (2, 3), (2, 4), (3, 4)} | set(base)
    candidates = [e for e in combinations(range(10), 2) if e not in forbidden]
    found = []
    for extra in combinations(candidates, 6):
        deg = [0] * 10
        for u, v in base + list(extra):
            deg[u] += 1
            deg[v] += 1
        if any(deg[k] < deg[k + 1] for k in range(5, 9)):
            continue
        if sum(d * (d - 1) // 2 for d in deg) != 20:
            continue
        g, _ = build_graph(10, base + list(extra))
        if _count_4_cycles(g) != 3:
            continue
        if figure1_fingerprint_ok(g):
            found.append(g)
            if first_only:
                break
    return found


def _count_4_cycles(g: Graph) -> int:
    total = 0
    nb = [set(a) for a in g.adjacency]
    for a, b in combinations(range(g.n), 2):
        c = len(nb[a] & nb[b])
        total += c * (c - 1) // 2
    return total // 2


def reconstruct_figure1() -> Graph:
    """The frozen worked-example graph (see ``tools/search_figure1.py``)."""
    from .formats import parse_edge_list

    text = resources.files("permpoly.data").joinpath("figure1.edges").read_text()
    g = parse_edge_list(text)
    if not figure1_fingerprint_ok(g):
        raise GraphError("stored figure1 fixture no longer matches its fingerprint")
    return g
