"""Simple-cycle listing and the 4k-intercyclic classification."""

from __future__ import annotations

import enum
import os
from collections import Counter
from dataclasses import dataclass

from .errors import CycleBudgetExceeded
from .graph import Graph

DEFAULT_CYCLE_BUDGET = 10**6
BUDGET_ENV = "PERMPOLY_CYCLE_BUDGET"


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_CYCLE_BUDGET))


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle in canonical form.

    ``vertices`` starts at the smallest vertex and continues towards its
    smaller cycle neighbour, so each cycle has exactly one representation.
    Ordering is by length, then lexicographic.
    """

    length: int
    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq) -> "Cycle":
        seq = list(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError(f"not a simple cycle: {seq}")
        k = seq.index(min(seq))
        rot = seq[k:] + seq[:k]
        if rot[1] > rot[-1]:
            rot = [rot[0]] + rot[:0:-1]
        return cls(len(rot), tuple(rot))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(
            (min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])
        )

    def is_4k(self) -> bool:
        return self.length % 4 == 0

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (
            len(vs) >= 3
            and len(set(vs)) == len(vs)
            and all(g.has_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1]))
        )


def enumerate_cycles(
    g: Graph, max_len: int | None = None, budget: int | None = None
) -> list[Cycle]:
    """Every simple cycle of length at most ``max_len``, each exactly once.

    Backtracking from each start vertex ``s`` through vertices larger than
    ``s`` only, restricted to the component of ``s`` in that subgraph. A cycle
    is emitted when the path closes at ``s`` and its second vertex is smaller
    than its last, which is precisely the canonical orientation.

    Raises :class:`CycleBudgetExceeded` once more than ``budget`` cycles have
    been found.
    """
    if budget is None:
        budget = default_budget()
    limit = g.n if max_len is None else min(max_len, g.n)
    adj = g.adjacency
    found: list[Cycle] = []
    for s in range(g.n):
        reach = _reachable_above(g, s)
        if len(reach) < 3:
            continue
        path = [s]
        on_path = {s}
        # explicit stack of neighbour iterators
        stack = [iter(adj[s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(Cycle(len(path), tuple(path)))
                        if len(found) > budget:
                            raise CycleBudgetExceeded(
                                f"more than {budget} cycles; raise the budget "
                                f"(--budget or {BUDGET_ENV}) to continue"
                            )
                    continue
                if w in on_path or w not in reach or len(path) >= limit:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
    found.sort()
    return found


def _reachable_above(g: Graph, s: int) -> set[int]:
    seen = {s}
    todo = [s]
    while todo:
        u = todo.pop()
        for w in g.adjacency[u]:
            if w > s and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def four_k_cycles(g: Graph, budget: int | None = None) -> list[Cycle]:
    return [c for c in enumerate_cycles(g, budget=budget) if c.is_4k()]


class Verdict(str, enum.Enum):
    C4K_FREE = "C4kFree"
    FOUR_K_INTERCYCLIC = "FourKIntercyclic"
    NOT_INTERCYCLIC = "NotIntercyclic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    four_k_cycles: tuple[Cycle, ...]
    witness: tuple[Cycle, Cycle] | None = None

    def length_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(c.length for c in self.four_k_cycles).items()))

    def summary(self) -> str:
        """One-line verdict, e.g. ``FourKIntercyclic, 5 four-k-cycles (3×C4, 2×C8)``."""
        if not self.four_k_cycles:
            return str(self.verdict)
        parts = ", ".join(f"{cnt}×C{length}" for length, cnt in self.length_counts().items())
        return f"{self.verdict}, {len(self.four_k_cycles)} four-k-cycles ({parts})"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "four_k_cycles": [list(c.vertices) for c in self.four_k_cycles],
            "witness": None if self.witness is None else [list(c.vertices) for c in self.witness],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Classification":
        cycles = tuple(Cycle.from_sequence(v) for v in obj["four_k_cycles"])
        w = obj.get("witness")
        witness = None if w is None else tuple(Cycle.from_sequence(v) for v in w)
        return cls(Verdict(obj["verdict"]), cycles, witness)


def classify(g: Graph, budget: int | None = None) -> Classification:
    """Decide C4k-free / 4k-intercyclic / neither by pairwise disjointness."""
    cycles = four_k_cycles(g, budget=budget)
    if not cycles:
        return Classification(Verdict.C4K_FREE, ())
    # distinct vertex sets as bitmasks; the first cycle per mask is kept as witness
    by_mask: dict[int, Cycle] = {}
    for c in cycles:
        by_mask.setdefault(sum(1 << v for v in c.vertices), c)
    masks = list(by_mask)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if not a & b:
                return Classification(
                    Verdict.NOT_INTERCYCLIC, tuple(cycles), (by_mask[a], by_mask[b])
                )
    return Classification(Verdict.FOUR_K_INTERCYCLIC, tuple(cycles))
