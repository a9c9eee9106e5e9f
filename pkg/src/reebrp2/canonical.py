"""Canonical string encodings, parsing and isomorphism of RP^2 Reeb graphs.

Grammar (alphabet ``* ( ) ^ v [ ] |``)::

    rooted := "*" | "(" rooted "^" rooted "^" ")" | "(" rooted "^" rooted "v" ")"
    full   := "[" rooted "|" rooted "]"

In the up-up production the two children appear in canonical order: the
shorter encoding first, ties broken bytewise.  Two graphs are isomorphic as
oriented graphs exactly when their encodings are equal, and for simple Morse
functions on RP^2 that is the same as fiber equivalence.
"""

from __future__ import annotations

from .core import (
    FullReebGraph,
    RootedReebTree,
    attach_mixed,
    attach_up_up,
    canon_key,
    glue,
    leaf,
)
from .errors import InvalidStructureError, ParseError
from .validate import check_theorem1

__all__ = [
    "canon_key",
    "encode",
    "encode_full",
    "encode_rooted",
    "full_from_explicit",
    "is_isomorphic",
    "parse",
    "parse_full",
    "parse_rooted",
]


def encode_rooted(t: RootedReebTree) -> str:
    return t.code


def encode_full(g: FullReebGraph) -> str:
    return f"[{g.lower.code}|{g.upper.code}]"


def encode(obj) -> str:
    if isinstance(obj, FullReebGraph):
        return encode_full(obj)
    return encode_rooted(obj)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected):
        if self.pos >= len(self.text):
            found = "end of input"
        else:
            found = repr(self.text[self.pos])
        raise ParseError(f"expected {expected}, found {found}", offset=self.pos)

    def expect(self, ch):
        if self.pos < len(self.text) and self.text[self.pos] == ch:
            self.pos += 1
        else:
            self.error(repr(ch))

    def rooted(self):
        # Explicit stack so deep inputs do not hit the recursion limit.
        stack = []  # frames: [first_child_or_None]
        while True:
            if self.pos < len(self.text) and self.text[self.pos] == "*":
                self.pos += 1
                node = leaf()
            elif self.pos < len(self.text) and self.text[self.pos] == "(":
                self.pos += 1
                stack.append([None])
                continue
            else:
                self.error("'*' or '('")
            while True:
                if not stack:
                    return node
                frame = stack[-1]
                if frame[0] is None:
                    self.expect("^")
                    frame[0] = node
                    break
                if self.pos < len(self.text) and self.text[self.pos] in "^v":
                    tag = self.text[self.pos]
                    self.pos += 1
                else:
                    self.error("'^' or 'v'")
                self.expect(")")
                stack.pop()
                node = attach_up_up(frame[0], node) if tag == "^" else attach_mixed(frame[0], node)

    def finish(self):
        if self.pos != len(self.text):
            self.error("end of input")


def parse_rooted(s: str) -> RootedReebTree:
    """Parse a rooted encoding.

    Up-up children given in non-canonical order are accepted and normalized.

    Raises
    ------
    ParseError
        With the offending 0-based ``offset``.
    """
    p = _Parser(s)
    t = p.rooted()
    p.finish()
    return t


def parse_full(s: str) -> FullReebGraph:
    p = _Parser(s)
    p.expect("[")
    lower = p.rooted()
    p.expect("|")
    upper = p.rooted()
    p.expect("]")
    p.finish()
    return glue(lower, upper)


def parse(s: str):
    """Parse either kind of encoding, dispatching on the leading character."""
    if s.startswith("["):
        return parse_full(s)
    return parse_rooted(s)


def _rooted_from(adj, out, parent, v, flip):
    # Build the tree hanging from `v`, reached from `parent`.  In the current
    # frame (reversed when `flip`) the root edge points into `v`.
    children = [w for w in adj[v] if w != parent]
    if not children:
        return leaf()
    ups, downs = [], []
    for w in children:
        goes_up = (w in out[v]) != flip
        (ups if goes_up else downs).append(w)
    if len(ups) == 2:
        return attach_up_up(*(_rooted_from(adj, out, v, w, flip) for w in ups))
    up, down = ups[0], downs[0]
    return attach_mixed(_rooted_from(adj, out, v, up, flip), _rooted_from(adj, out, v, down, not flip))


def full_from_explicit(g) -> FullReebGraph:
    """Recover the :class:`FullReebGraph` represented by an explicit graph.

    The graph is split at its unique degree-2 vertex: the part entered from
    below becomes ``lower``, the part left upward becomes ``upper``.

    Raises
    ------
    InvalidStructureError
        If ``g`` fails :func:`~reebrp2.validate.check_theorem1`.
    """
    report = check_theorem1(g)
    if not report.is_valid:
        raise InvalidStructureError(report)
    adj = [[] for _ in range(g.vertex_count)]
    out = [set() for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
        out[u].add(v)
    mid = next(v for v in range(g.vertex_count) if len(adj[v]) == 2)
    (high,) = out[mid]
    (low,) = [w for w in adj[mid] if w != high]
    return glue(_rooted_from(adj, out, mid, low, True), _rooted_from(adj, out, mid, high, False))


def is_isomorphic(g1, g2) -> bool:
    """Decide whether two explicit RP^2 Reeb graphs are isomorphic as oriented graphs."""
    return encode_full(full_from_explicit(g1)) == encode_full(full_from_explicit(g2))
