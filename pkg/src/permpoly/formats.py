"""Graph text formats: the ``n m`` edge list and graph6."""

from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    ``#`` starts a comment; blank lines are ignored. Duplicate edges are
    collapsed; self-loops and out-of-range endpoints raise :class:`ParseError`.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input: expected header line 'n m'")
    lineno, head = rows[0]
    n, m = _ints(head, 2, lineno, "header 'n m'")
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative vertex or edge count")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = [_ints(tok, 2, ln, "edge 'u v'") for ln, tok in body]
    try:
        return build_graph(n, edges)[0]
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def _ints(tokens, count, lineno, what):
    if len(tokens) != count:
        raise ParseError(f"line {lineno}: expected {what}, got {' '.join(tokens)!r}")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers in {what}, got {' '.join(tokens)!r}") from None


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, start = data[2:8], 8
        if len(chunk) != 6:
            raise ParseError("truncated graph6 size field")
    else:
        chunk, start = data[1:4], 4
        if len(chunk) != 3:
            raise ParseError("truncated graph6 size field")
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, start


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be printable ASCII") from None
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"bad graph6 byte {chr(b)!r} at offset {k}")
    n, start = _decode_n(data)
    need = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise ParseError("nonzero graph6 padding bits")
    return build_graph(n, edges)[0]


def format_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        sum(bit << (5 - k) for k, bit in enumerate(bits[p:p + 6])) + 63
        for p in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def parse_graph(payload: str, fmt: str = "auto") -> Graph:
    """Parse ``payload`` as ``edge_list`` or ``graph6``; ``auto`` sniffs it."""
    if fmt == "auto":
        fmt = sniff_format(payload)
    if fmt == "edge_list":
        return parse_edge_list(payload)
    if fmt == "graph6":
        return parse_graph6(payload)
    raise ParseError(f"unknown graph format {fmt!r}")


def sniff_format(payload: str) -> str:
    lines = [ln.split("#", 1)[0].strip() for ln in payload.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return "graph6"
    return "edge_list"
