"""Edge-list documents and read-only graph6 import.

Edge-list format::

    # comment lines start with '#'
    n m
    u v        (m lines, 0-indexed endpoints)
"""

from __future__ import annotations

from .graph import Graph, new_graph

__all__ = ["ParseError", "parse_edge_list", "format_edge_list", "parse_graph6", "read_graph"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>") -> None:
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok: str, lineno: int, col: int, source: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno, col, source)
    return int(tok)


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.lstrip().startswith("#") or not line.strip():
            continue
        toks = _tokens(line)
        last = lineno
        if len(toks) != 2:
            col = toks[2][1] if len(toks) > 2 else len(line) + 1
            raise ParseError(f"expected 2 fields, got {len(toks)}", lineno, col, source)
        a, b = (_int(t, lineno, c, source) for t, c in toks)
        if header is None:
            header = (a, b)
            continue
        n = header[0]
        for val, (_, col) in zip((a, b), toks):
            if val >= n:
                raise ParseError(f"endpoint {val} outside [0, {n})", lineno, col, source)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno, 1, source)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b}", lineno, 1, source)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header", 1, 1, source)
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}", last, 1, source)
    return new_graph(header[0], edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str, source: str = "<input>") -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header, n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = []
    for i, ch in enumerate(s, start=1):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"invalid graph6 character {ch!r}", 1, i, source)
        data.append(v)
    if not data:
        raise ParseError("empty graph6 string", 1, 1, source)
    n = data[0]
    if n == 63:
        raise ParseError("graph6 input with more than 62 vertices is not supported", 1, 1, source)
    body = data[1:]
    m = n * (n - 1) // 2
    if len(body) != (m + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(m + 5) // 6}", 1, 2, source)
    bits = [(b >> (5 - k)) & 1 for b in body for k in range(6)]
    edges = []
    i = 0
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return new_graph(n, edges)


def read_graph(path: str, graph6: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if graph6:
        return parse_graph6(text, path)
    return parse_edge_list(text, path)
