"""graph6 and edge-list text formats."""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import MAX_VERTICES, Graph, GraphError, upper_triangle_bits

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6LengthError(Graph6Error):
    """Fewer data bytes than the vertex count requires, or a bad size field."""


class Graph6ByteError(Graph6Error):
    """A byte outside the printable range 63..126."""


class Graph6TrailingError(Graph6Error):
    """Extra bytes after the edge data, or nonzero padding bits."""


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    # n = 63, 64 need the 4-byte form
    return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = upper_triangle_bits(g)
    bits += [0] * (-len(bits) % 6)
    out = [_size_field(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"byte {ord(ch)!r} at offset {pos} outside 63..126")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise Graph6LengthError("8-byte size field: graphs beyond 64 vertices are unsupported")
        if len(s) < 4:
            raise Graph6LengthError("truncated 4-byte size field")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n <= 62:
            raise Graph6LengthError(f"4-byte size field used for n={n} <= 62")
        body = s[4:]
    if n < 1 or n > MAX_VERTICES:
        raise Graph6LengthError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} trailing bytes after edge data")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6TrailingError("nonzero padding bits")
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line_number, Graph | Graph6Error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield lineno, graph6_decode(stripped)
        except Graph6Error as exc:
            yield lineno, exc


class EdgeListError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines (0-indexed, ``#`` comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListError(f"line {lineno}: expected header 'n <count>'")
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v'")
        edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    if n is None:
        raise EdgeListError("missing header 'n <count>'")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from exc


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EdgeListError(f"line {lineno}: not an integer: {tok!r}") from None


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(graph6_encode(g) + "\n")
