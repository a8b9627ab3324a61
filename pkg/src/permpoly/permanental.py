"""Permanental polynomial of 4k-intercyclic bipartite graphs.

For such a graph ``G``::

    pi(G, x) = phi_p(G, x) + 4 * sum(phi_p(G - R, x) for R in 4k-cycles of G)

where ``phi_p`` is the sign-modified characteristic polynomial and ``G - R``
deletes the vertices of ``R``. Without any 4k-cycle the sum is empty and
``pi = phi_p``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cycles import Classification, Cycle, Verdict, classify
from .errors import NotBipartiteError, NotIntercyclicError
from .graph import Graph, delete_vertices, find_odd_cycle
from .polynomial import (
    IntPolynomial,
    ZERO,
    poly_add,
    poly_from_strings,
    poly_scale,
    poly_sum,
    poly_to_strings,
)
from .spectra import char_poly, modified_char_poly, sign_modify


class Path(str, enum.Enum):
    COROLLARY_C4KFREE = "corollary_c4kfree"
    THEOREM_INTERCYCLIC = "theorem_intercyclic"
    ORACLE_FALLBACK = "oracle_fallback"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PolyReport:
    n: int
    phi: IntPolynomial
    phi_p: IntPolynomial
    f: IntPolynomial
    pi: IntPolynomial
    path: Path
    classification: Classification

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "phi": poly_to_strings(self.phi),
            "phi_p": poly_to_strings(self.phi_p),
            "f": poly_to_strings(self.f),
            "pi": poly_to_strings(self.pi),
            "path": self.path.value,
            "classification": self.classification.to_json(),
            "four_k_cycles": [list(c.vertices) for c in self.classification.four_k_cycles],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PolyReport":
        return cls(
            n=int(obj["n"]),
            phi=poly_from_strings(obj["phi"]),
            phi_p=poly_from_strings(obj["phi_p"]),
            f=poly_from_strings(obj["f"]),
            pi=poly_from_strings(obj["pi"]),
            path=Path(obj["path"]),
            classification=Classification.from_json(obj["classification"]),
        )


def _require_bipartite(g: Graph) -> None:
    odd = find_odd_cycle(g)
    if odd is not None:
        raise NotBipartiteError(
            f"graph is not bipartite (odd cycle of length {len(odd)}: {odd})", odd
        )


def _require_intercyclic(cls: Classification) -> None:
    if cls.verdict is Verdict.NOT_INTERCYCLIC:
        a, b = cls.witness
        raise NotIntercyclicError(
            "graph is not 4k-intercyclic: 4k-cycles "
            f"{list(a.vertices)} and {list(b.vertices)} are vertex-disjoint; "
            "the deletion formula does not apply (use the oracle instead)",
            cls.witness,
        )


def deletion_sum(g: Graph, cycles: list[Cycle] | tuple[Cycle, ...]) -> IntPolynomial:
    """``sum(phi_p(g - R))`` over ``cycles``, memoised by vertex set."""
    memo: dict[frozenset[int], IntPolynomial] = {}
    total = ZERO
    for r in cycles:
        key = r.vertex_set
        if key not in memo:
            memo[key] = modified_char_poly(delete_vertices(g, key)[0])
        total = poly_add(total, memo[key])
    return total


def _f_from(g: Graph, cls: Classification) -> IntPolynomial:
    if cls.verdict is Verdict.C4K_FREE:
        return ZERO
    return poly_scale(deletion_sum(g, cls.four_k_cycles), 4)


def f_poly(g: Graph, budget: int | None = None) -> IntPolynomial:
    """``pi - phi_p`` for a bipartite 4k-intercyclic graph, via cycle deletions."""
    _require_bipartite(g)
    cls = classify(g, budget=budget)
    _require_intercyclic(cls)
    return _f_from(g, cls)


def perm_poly(g: Graph, budget: int | None = None) -> PolyReport:
    """Permanental polynomial of a bipartite 4k-intercyclic graph.

    Raises :class:`NotBipartiteError` or :class:`NotIntercyclicError` outside
    that class; use :func:`oracle_report` for small graphs there.
    """
    _require_bipartite(g)
    cls = classify(g, budget=budget)
    _require_intercyclic(cls)
    phi = char_poly(g)
    phi_p = sign_modify(phi, g.n)
    f = _f_from(g, cls)
    path = Path.COROLLARY_C4KFREE if cls.verdict is Verdict.C4K_FREE else Path.THEOREM_INTERCYCLIC
    return PolyReport(g.n, phi, phi_p, f, poly_add(phi_p, f), path, cls)


def oracle_report(g: Graph, budget: int | None = None, cap: int | None = None) -> PolyReport:
    """Same report computed by Sachs-subgraph enumeration; any bipartite graph."""
    from .oracle import oracle_perm_poly

    _require_bipartite(g)
    cls = classify(g, budget=budget)
    phi = char_poly(g)
    phi_p = sign_modify(phi, g.n)
    pi = oracle_perm_poly(g, cap=cap)
    return PolyReport(g.n, phi, phi_p, pi - phi_p, pi, Path.ORACLE_FALLBACK, cls)


@dataclass(frozen=True)
class CospectralReport:
    same_f: bool
    cospectral: bool
    per_cospectral: bool

    def to_json(self) -> dict:
        return {
            "same_f": self.same_f,
            "cospectral": self.cospectral,
            "per_cospectral": self.per_cospectral,
        }


def per_cospectral_check(g1: Graph, g2: Graph, budget: int | None = None) -> CospectralReport:
    """Compare characteristic and permanental polynomials of two graphs.

    When the f-polynomials agree, equal characteristic polynomials and equal
    permanental polynomials must coincide; this is asserted.
    """
    r1, r2 = perm_poly(g1, budget), perm_poly(g2, budget)
    report = CospectralReport(r1.f == r2.f, r1.phi == r2.phi, r1.pi == r2.pi)
    if report.same_f:
        assert report.cospectral == report.per_cospectral, (r1, r2)
    return report


@dataclass(frozen=True)
class GpClass:
    """Membership tag: ``zero`` (f = 0), ``4l_xn4`` (f = 4l x^(n-4)), or ``other``."""

    tag: str
    l: int | None = None
    f: IntPolynomial | None = None

    def __str__(self):
        if self.tag == "zero":
            return "G_zero"
        if self.tag == "4l_xn4":
            return f"G_4l_xn4(l={self.l})"
        return f"other({self.f})"


def classify_G_p(g: Graph, budget: int | None = None) -> GpClass:
    f = f_poly(g, budget)
    if f.is_zero():
        return GpClass("zero", f=f)
    n = g.n
    if n >= 4 and f.degree == n - 4 and f.coeffs[n - 4] > 0 and f.coeffs[n - 4] % 4 == 0 \
            and all(c == 0 for c in f.coeffs[: n - 4]):
        return GpClass("4l_xn4", l=f.coeffs[n - 4] // 4, f=f)
    return GpClass("other", f=f)
