"""Plain-text edge-list format shared by every CLI command.

The first non-comment line is the vertex count ``n``; every following
non-comment line holds one edge as two whitespace-separated 0-based ids.
Blank lines and lines starting with ``#`` are ignored.  Duplicate edges are
rejected so a file round-trips to exactly one graph.
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError, build_graph


class EdgeListError(GraphError):
    """Malformed edge-list text; the message carries the 1-based line number."""


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListError(f"line {lineno}: expected the vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListError(f"line {lineno}: vertex count {fields[0]!r} is not an integer") from None
            if n < 1:
                raise EdgeListError(f"line {lineno}: vertex count must be positive")
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise EdgeListError("no vertex count found (empty input)")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
