"""Edge-list text and graph6 readers/writers."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Input text that does not parse as the expected graph format."""


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise FormatError("empty edge list: expected a header line 'n m'")
    lineno, head = rows[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must hold two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex") from None
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise FormatError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph, header: bool = False) -> bytes:
    """graph6 encoding: upper triangle column by column, 6 bits per byte."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    if header:
        return GRAPH6_HEADER.encode() + bytes(out)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    s = data.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    raw = s.encode("ascii", errors="replace")
    if not raw:
        raise FormatError("empty graph6 string")
    if any(b < 63 or b > 126 for b in raw):
        raise FormatError(f"graph6 string {s!r} has bytes outside 63..126")
    if raw[0] != 126:
        n, pos = raw[0] - 63, 1
    elif len(raw) >= 4 and raw[1] != 126:
        n = (raw[1] - 63) << 12 | (raw[2] - 63) << 6 | (raw[3] - 63)
        pos = 4
    else:
        raise FormatError("graph6 sizes beyond 258047 vertices are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = raw[pos:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("graph6 padding bits must be zero")
    return Graph(n, tuple(adj))


def read_graph(path: str | Path) -> Graph:
    """Read an edge list, or graph6 when the content looks like graph6."""
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER) or (
        stripped and "\n" not in stripped and " " not in stripped
        and all(63 <= ord(ch) <= 126 for ch in stripped)
    ):
        return from_graph6(stripped)
    return parse_edgelist(text)


def graph6_str(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


__all__ = [
    "FormatError",
    "parse_edgelist",
    "format_edgelist",
    "to_graph6",
    "from_graph6",
    "graph6_str",
    "read_graph",
]
