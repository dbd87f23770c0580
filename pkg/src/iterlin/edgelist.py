"""Plain-text edge-list format.

One edge per line as two whitespace-separated tokens; ``v <token>`` declares
an isolated vertex; ``#`` starts a comment.  Tokens are arbitrary
non-whitespace strings and become vertex labels; dense integer ids are
assigned in first-appearance order.
"""

from __future__ import annotations

from .graph import Graph, validate_graph


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_edge_list(text: str) -> Graph:
    ids: dict[str, int] = {}
    labels: list[str] = []

    def vid(token: str) -> int:
        if token not in ids:
            ids[token] = len(labels)
            labels.append(token)
        return ids[token]

    raw_edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError(line_no, "isolated vertex line must be 'v <token>'")
            vid(tokens[1])
            continue
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected two tokens, got {len(tokens)}")
        u, v = vid(tokens[0]), vid(tokens[1])
        if u == v:
            raise ParseError(line_no, f"self-loop at {tokens[0]!r}")
        if (min(u, v), max(u, v)) in seen:
            raise ParseError(line_no, f"duplicate edge {tokens[0]} {tokens[1]}")
        seen.add((min(u, v), max(u, v)))
        raw_edges.append((u, v))
    return validate_graph(raw_edges, len(labels), labels=labels)


def write_edge_list(g: Graph, relabel: bool = False) -> str:
    lines: list[str] = []
    if relabel or g.labels is None:
        on_edge = set()
        for u, v in g.edges:
            on_edge.add(u)
            on_edge.add(v)
            lines.append(f"{u} {v}")
        for v in range(g.n):
            if v not in on_edge:
                lines.append(f"v {v}")
        if relabel and g.labels is not None:
            lines.append("# labels:")
            for v in range(g.n):
                lines.append(f"#   {v} = {g.labels[v]}")
    else:
        on_edge = set()
        for u, v in g.edges:
            on_edge.add(u)
            on_edge.add(v)
            lines.append(f"{g.labels[u]} {g.labels[v]}")
        for v in range(g.n):
            if v not in on_edge:
                lines.append(f"v {g.labels[v]}")
    return "\n".join(lines)
