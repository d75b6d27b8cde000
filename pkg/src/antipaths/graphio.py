"""Graph file format, content digests, and DOT export.

The on-disk format is a header line ``oriented <n> <m>`` or
``digraph <n> <m>`` followed by m lines ``u v`` (0-based).  Emission sorts
edges lexicographically, so the canonical bytes (and their digest) are
independent of construction order.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .graphs import Digraph, OrientedGraph


class GraphParseError(ValueError):
    def __init__(self, source: str, line: int, column: int, message: str):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.source = source
        self.line = line
        self.column = column
        self.reason = message


def format_graph(d: Digraph) -> str:
    lines = [f"{d.kind} {d.n} {len(d.edges)}"]
    lines.extend(f"{u} {v}" for u, v in d.edges)
    return "\n".join(lines) + "\n"


def _int_token(tokens: list[str], idx: int, line_text: str, lineno: int, source: str, what: str) -> int:
    if idx >= len(tokens):
        raise GraphParseError(source, lineno, len(line_text) + 1, f"missing {what}")
    tok = tokens[idx]
    col = line_text.index(tok) + 1
    try:
        value = int(tok)
    except ValueError:
        raise GraphParseError(source, lineno, col, f"{what} must be an integer, got {tok!r}") from None
    if value < 0:
        raise GraphParseError(source, lineno, col, f"{what} must be non-negative, got {value}")
    return value


def parse_graph(text: str, source: str = "<graph>") -> Digraph:
    """Parse the edge-list format; diagnostics carry line and column."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError(source, 1, 1, "missing header line")
    header = lines[0].split()
    if header[0] not in ("oriented", "digraph"):
        raise GraphParseError(source, 1, 1, f"header must start with 'oriented' or 'digraph', got {header[0]!r}")
    kind = header[0]
    if len(header) != 3:
        raise GraphParseError(source, 1, 1, f"header needs 'kind n m', got {len(header)} tokens")
    n = _int_token(header, 1, lines[0], 1, source, "vertex count")
    m = _int_token(header, 2, lines[0], 1, source, "edge count")

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        tokens = raw.split()
        if len(tokens) != 2:
            raise GraphParseError(source, lineno, 1, f"edge line needs 'u v', got {len(tokens)} tokens")
        u = _int_token(tokens, 0, raw, lineno, source, "edge tail")
        v = _int_token(tokens, 1, raw, lineno, source, "edge head")
        col = 1
        if not (u < n and v < n):
            raise GraphParseError(source, lineno, col, f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise GraphParseError(source, lineno, col, f"loop at vertex {u}")
        if (u, v) in seen:
            raise GraphParseError(source, lineno, col, f"duplicate edge ({u}, {v})")
        if kind == "oriented" and (v, u) in seen:
            raise GraphParseError(source, lineno, col, f"two-cycle: both ({v}, {u}) and ({u}, {v}) present")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise GraphParseError(source, lineno, 1, f"header promised {m} edges, found {len(edges)}")
    cls = OrientedGraph if kind == "oriented" else Digraph
    return cls(n, edges)


def load_graph(path: str | Path) -> Digraph:
    p = Path(path)
    return parse_graph(p.read_text(), source=str(p))


def save_graph(d: Digraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(d))


def graph_digest(d: Digraph) -> str:
    """Hex digest of the canonical file bytes."""
    return hashlib.sha256(format_graph(d).encode("ascii")).hexdigest()


def to_dot(d: Digraph) -> str:
    lines = [f"digraph G {{"]
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v in d.edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
