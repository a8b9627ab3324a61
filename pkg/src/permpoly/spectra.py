"""Characteristic polynomial and its sign-modified bipartite variant."""

from __future__ import annotations

from .errors import NotBipartiteError
from .graph import Graph, find_odd_cycle
from .polynomial import IntPolynomial


def berkowitz(a: list[list[int]]) -> list[int]:
    """Coefficients of ``det(xI - a)``, highest degree first.

    Division-free Berkowitz recurrence: the characteristic polynomial of the
    leading ``(k+1) x (k+1)`` block is a lower-triangular Toeplitz matrix
    applied to that of the leading ``k x k`` block. O(n^4) integer operations.
    """
    n = len(a)
    if n == 0:
        return [1]
    poly = [1, -a[0][0]]
    for k in range(1, n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        # toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^(k-1) C
        toep = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            toep.append(-sum(r * v for r, v in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(min(i, k) + 1):
                s += toep[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly


def char_poly(g: Graph) -> IntPolynomial:
    """Exact ``det(xI - A(g))``; equals 1 for the empty graph."""
    return IntPolynomial.from_descending(berkowitz(g.adjacency_matrix()))


def sign_modify(phi: IntPolynomial, n: int) -> IntPolynomial:
    """Multiply the coefficient of ``x^(n-i)`` by ``(-1)^(i/2)`` for even ``i``.

    Raises ``ArithmeticError`` if a coefficient at odd co-degree is nonzero.
    The map is an involution.
    """
    out = [0] * (n + 1)
    for i in range(n + 1):
        c = phi[n - i]
        if i % 2:
            if c:
                raise ArithmeticError(f"coefficient of x^{n - i} is {c}, expected 0")
            continue
        out[n - i] = -c if (i // 2) % 2 else c
    return IntPolynomial(out)


def modified_char_poly(g: Graph) -> IntPolynomial:
    """Sign-modified characteristic polynomial of a bipartite graph."""
    odd = find_odd_cycle(g)
    if odd is not None:
        raise NotBipartiteError(f"graph has an odd cycle of length {len(odd)}", odd)
    return sign_modify(char_poly(g), g.n)
