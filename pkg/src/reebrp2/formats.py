"""Edge-list documents and DOT export.

Edge-list format (ASCII, one record per line)::

    reeb v1
    vertices 3
    edge 0 1
    edge 1 2

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from collections import deque

from .core import ExplicitGraph
from .errors import ParseError

HEADER = "reeb v1"


def parse_edgelist(text: str) -> ExplicitGraph:
    """Parse an edge-list document.

    Raises
    ------
    ParseError
        With 1-based ``line`` and ``column`` of the offending token.
    """
    n = None
    seen_header = False
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        tokens = stripped.split()
        if not seen_header:
            if tokens != ["reeb", "v1"]:
                raise ParseError(f"expected header {HEADER!r}", line=lineno, column=col)
            seen_header = True
            continue
        if n is None:
            if tokens[0] != "vertices" or len(tokens) != 2:
                raise ParseError("expected 'vertices N'", line=lineno, column=col)
            n = _natural(tokens[1], raw, lineno)
            if n < 1:
                raise ParseError("vertex count must be at least 1", line=lineno, column=_col(raw, 1))
            continue
        if tokens[0] != "edge":
            raise ParseError(f"expected 'edge U V', found {tokens[0]!r}", line=lineno, column=col)
        if len(tokens) != 3:
            raise ParseError("expected exactly two vertex indices after 'edge'", line=lineno, column=col)
        u = _natural(tokens[1], raw, lineno, 1)
        v = _natural(tokens[2], raw, lineno, 2)
        for idx, x in ((1, u), (2, v)):
            if x >= n:
                raise ParseError(f"vertex {x} out of range (vertices {n})", line=lineno, column=_col(raw, idx))
        edges.append((u, v))
    if not seen_header:
        raise ParseError(f"missing header {HEADER!r}", line=1, column=1)
    if n is None:
        raise ParseError("missing 'vertices N' line", line=max(1, len(text.splitlines())), column=1)
    return ExplicitGraph(n, tuple(edges))


def _col(raw, token_index):
    pos = 0
    for i, tok in enumerate(raw.split()):
        pos = raw.index(tok, pos)
        if i == token_index:
            return pos + 1
        pos += len(tok)
    return len(raw) + 1


def _natural(token, raw, lineno, token_index=1):
    if not token.isdigit():
        raise ParseError(f"expected a non-negative integer, found {token!r}", line=lineno, column=_col(raw, token_index))
    return int(token)


def format_edgelist(g: ExplicitGraph, comments=()) -> str:
    lines = [HEADER]
    lines.extend(f"# {c}" for c in comments)
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def longest_path_levels(g: ExplicitGraph):
    """Level of each vertex: length of the longest directed path reaching it from a source.

    Vertices on a directed cycle (never the case for valid graphs) get level 0.
    """
    indeg = g.in_degrees()
    succ = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        succ[u].append(v)
    level = [0] * g.vertex_count
    queue = deque(v for v in range(g.vertex_count) if indeg[v] == 0)
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            level[v] = max(level[v], level[u] + 1)
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return level


def to_dot(g: ExplicitGraph, name="reeb", label=None) -> str:
    """Render as a DOT digraph with increasing function value drawn upward.

    Extrema are ellipses, degree-3 saddles points, the degree-2 saddle a double
    circle.  Output depends only on ``g`` (and ``name``/``label``).
    """
    indeg, outdeg = g.in_degrees(), g.out_degrees()
    level = longest_path_levels(g)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    if label is not None:
        lines.append(f'  label="{label}";')
    for v in range(g.vertex_count):
        deg = indeg[v] + outdeg[v]
        if deg == 1:
            role = "min" if outdeg[v] else "max"
            attrs = f'shape=ellipse, label="{role}"'
        elif deg == 2:
            attrs = 'shape=doublecircle, label="", width=0.2'
        elif deg == 3:
            attrs = 'shape=point, width=0.12'
        else:
            attrs = f'shape=box, label="{v}"'
        lines.append(f"  {v} [{attrs}];")
    by_level = {}
    for v in range(g.vertex_count):
        by_level.setdefault(level[v], []).append(v)
    for lv in sorted(by_level):
        members = " ".join(f"{v};" for v in by_level[lv])
        lines.append(f"  {{ rank=same; {members} }}")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
