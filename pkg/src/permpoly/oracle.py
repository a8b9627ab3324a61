"""Brute-force reference computations for small graphs.

Everything here is exponential and deliberately literal: polynomials are read
off an explicit enumeration of Sachs subgraphs (subgraphs in which every
component is a single edge or a cycle), or off a term-by-term expansion of
``det``/``per`` of ``xI - A``. No code is shared with :mod:`permpoly.spectra`
or :mod:`permpoly.cycles`.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import NotBipartiteError, OracleCapExceeded
from .graph import Graph, find_odd_cycle
from .polynomial import IntPolynomial

DEFAULT_ORACLE_CAP = 14
CAP_ENV = "PERMPOLY_ORACLE_CAP"
EXPANSION_CAP = 9


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_ORACLE_CAP))


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise OracleCapExceeded(
            f"oracle limited to {cap} vertices, graph has {g.n} (set {CAP_ENV} to override)"
        )


@dataclass(frozen=True)
class SachsSubgraph:
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def i(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def p(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def c(self) -> int:
        return len(self.cycles)

    @property
    def s(self) -> int:
        return sum(1 for c in self.cycles if len(c) % 4 == 0)

    @property
    def t(self) -> int:
        return sum(1 for c in self.cycles if len(c) % 4 == 2)


def _cycles_rooted_at(adj, v: int, avail: int) -> Iterator[tuple[int, ...]]:
    # cycles whose minimum vertex is v, using only vertices in avail (all > v)
    path = [v]
    used = 1 << v

    def extend(u):
        nonlocal used
        for w in adj[u]:
            if w == v:
                if len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
            elif avail >> w & 1 and not used >> w & 1:
                path.append(w)
                used |= 1 << w
                yield from extend(w)
                used &= ~(1 << w)
                path.pop()

    yield from extend(v)


def _sachs(adj, avail: int, edges: list, cycles: list):
    if not avail:
        yield tuple(edges), tuple(cycles)
        return
    v = (avail & -avail).bit_length() - 1
    rest = avail & ~(1 << v)
    # v left uncovered
    yield from _sachs(adj, rest, edges, cycles)
    # v covered by an edge
    for w in adj[v]:
        if rest >> w & 1:
            edges.append((v, w))
            yield from _sachs(adj, rest & ~(1 << w), edges, cycles)
            edges.pop()
    # v covered by a cycle
    for cyc in _cycles_rooted_at(adj, v, rest):
        cycles.append(cyc)
        mask = avail
        for u in cyc:
            mask &= ~(1 << u)
        yield from _sachs(adj, mask, edges, cycles)
        cycles.pop()


def sachs_subgraphs(g: Graph, cap: int | None = None) -> Iterator[SachsSubgraph]:
    """Every Sachs subgraph of ``g``, the empty one included, exactly once."""
    _check_cap(g, cap)
    adj = [sorted(set(a)) for a in g.adjacency]
    for edges, cycles in _sachs(adj, (1 << g.n) - 1, [], []):
        yield SachsSubgraph(edges, cycles)


def _tally(g: Graph, cap: int | None) -> Counter:
    # (i, p, cycles by length class: 0 mod 4, 2 mod 4, odd) -> multiplicity
    _check_cap(g, cap)
    adj = [sorted(set(a)) for a in g.adjacency]
    tally: Counter = Counter()
    for edges, cycles in _sachs(adj, (1 << g.n) - 1, [], []):
        s = t = o = 0
        size = 2 * len(edges)
        for c in cycles:
            size += len(c)
            r = len(c) % 4
            if r == 0:
                s += 1
            elif r == 2:
                t += 1
            else:
                o += 1
        tally[size, len(edges) + len(cycles), s, t, o] += 1
    return tally


def _from_codegree(n: int, by_i: dict[int, int]) -> IntPolynomial:
    return IntPolynomial(by_i.get(n - k, 0) for k in range(n + 1))


def oracle_char_poly(g: Graph, cap: int | None = None) -> IntPolynomial:
    """``a_i = sum over Sachs subgraphs on i vertices of (-1)^p 2^c``."""
    a: dict[int, int] = {}
    for (i, p, s, t, o), mult in _tally(g, cap).items():
        a[i] = a.get(i, 0) + mult * (-1) ** p * 2 ** (s + t + o)
    return _from_codegree(g.n, a)


def oracle_perm_poly(g: Graph, cap: int | None = None) -> IntPolynomial:
    """``b_i = (-1)^i times the sum over Sachs subgraphs on i vertices of 2^c``."""
    b: dict[int, int] = {}
    for (i, p, s, t, o), mult in _tally(g, cap).items():
        b[i] = b.get(i, 0) + mult * (-1) ** i * 2 ** (s + t + o)
    return _from_codegree(g.n, b)


def oracle_f_poly(g: Graph, cap: int | None = None, include_even: bool = False) -> IntPolynomial:
    """``f_i`` summed over Sachs subgraphs holding an odd number of 4k-cycles.

    Each such subgraph contributes ``2^(s+1) * 2^t``. With ``include_even``
    every subgraph is summed with weight ``(1 - (-1)^s) * 2^(s+t)`` instead;
    the even-``s`` terms vanish, so the result is identical.
    Valid for every bipartite graph, intercyclic or not.
    """
    odd = find_odd_cycle(g)
    if odd is not None:
        raise NotBipartiteError(f"graph has an odd cycle of length {len(odd)}", odd)
    f: dict[int, int] = {}
    for (i, p, s, t, o), mult in _tally(g, cap).items():
        if include_even:
            term = (1 - (-1) ** s) * 2 ** (s + t)
        elif s % 2:
            term = 2 ** (s + 1) * 2 ** t
        else:
            continue
        f[i] = f.get(i, 0) + mult * term
    return _from_codegree(g.n, f)


# -- term-by-term expansion of det / per (xI - A) ------------------------------

def _expand(g: Graph, signed: bool, cap: int | None) -> IntPolynomial:
    cap = EXPANSION_CAP if cap is None else cap
    if g.n > cap:
        raise OracleCapExceeded(f"permutation expansion limited to {cap} vertices")
    n = g.n
    a = g.adjacency_matrix()
    # each row i maps either to itself (entry x) or to a neighbour (entry -1)
    choices = [[i] + [j for j in range(n) if a[i][j]] for i in range(n)]
    by_fixed = [0] * (n + 1)
    perm = [0] * n
    used = [False] * n

    def sign_of(p):
        seen = [False] * n
        cycles = 0
        for st in range(n):
            if not seen[st]:
                cycles += 1
                k = st
                while not seen[k]:
                    seen[k] = True
                    k = p[k]
        return -1 if (n - cycles) % 2 else 1

    def rec(i, fixed):
        if i == n:
            term = (-1) ** (n - fixed)
            if signed:
                term *= sign_of(perm)
            by_fixed[fixed] += term
            return
        for j in choices[i]:
            if not used[j]:
                used[j] = True
                perm[i] = j
                rec(i + 1, fixed + (j == i))
                used[j] = False

    rec(0, 0)
    return IntPolynomial(by_fixed)


def expansion_char_poly(g: Graph, cap: int | None = None) -> IntPolynomial:
    """``det(xI - A)`` by the Leibniz expansion over permutations."""
    return _expand(g, True, cap)


def expansion_perm_poly(g: Graph, cap: int | None = None) -> IntPolynomial:
    """``per(xI - A)`` by expansion over permutations."""
    return _expand(g, False, cap)
