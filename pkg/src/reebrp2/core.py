"""Recursive data model for rooted and full Reeb graphs on RP^2.

A rooted tree is what remains on one side of a saddle once that saddle is cut
out: either a single extremum (a leaf) or a degree-3 saddle with two further
rooted trees hanging off it.  The implicit root half-edge always points *into*
the tree; a subtree hanging from a downward edge is stored in that same normal
form and only flipped when the graph is flattened.

A full graph is an ordered pair ``(lower, upper)`` glued at the unique
degree-2 saddle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

LEAF = "leaf"
UP_UP = "upup"
MIXED = "mixed"


def canon_key(code):
    """Sort key for canonical strings: shorter first, then bytewise."""
    return (len(code), code)


@dataclass(frozen=True, eq=False, slots=True)
class RootedReebTree:
    """Normalized rooted oriented Reeb tree.

    Do not instantiate directly; use :func:`leaf`, :func:`attach_up_up` and
    :func:`attach_mixed`.  Equality and hashing go through the canonical
    encoding, so two trees compare equal exactly when they are isomorphic.
    """

    kind: str
    children: tuple = ()
    saddles: int = 0
    code: str = field(default="*", repr=False)

    def __eq__(self, other):
        if not isinstance(other, RootedReebTree):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f"RootedReebTree({self.code!r})"

    @property
    def leaves(self):
        return self.saddles + 1


@dataclass(frozen=True, eq=False, slots=True)
class FullReebGraph:
    """Reeb graph of a simple Morse function on RP^2.

    ``lower`` hangs below the degree-2 saddle, ``upper`` above it.  The pair is
    ordered: swapping the parts gives a different graph in general.
    """

    lower: RootedReebTree
    upper: RootedReebTree

    @property
    def saddles(self):
        return self.lower.saddles + self.upper.saddles + 1

    @property
    def code(self):
        return f"[{self.lower.code}|{self.upper.code}]"

    def __eq__(self, other):
        if not isinstance(other, FullReebGraph):
            return NotImplemented
        return self.lower == other.lower and self.upper == other.upper

    def __hash__(self):
        return hash((self.lower.code, self.upper.code))

    def __repr__(self):
        return f"FullReebGraph({self.code!r})"


@dataclass(frozen=True, slots=True)
class ExplicitGraph:
    """Flat oriented graph; edge ``(u, v)`` means the function increases from u to v.

    Self-loops and repeated edges are representable so that arbitrary input can
    be held until it is validated.
    """

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
        object.__setattr__(self, "edges", edges)

    def in_degrees(self):
        deg = [0] * self.vertex_count
        for _, v in self.edges:
            deg[v] += 1
        return deg

    def out_degrees(self):
        deg = [0] * self.vertex_count
        for u, _ in self.edges:
            deg[u] += 1
        return deg

    def degrees(self):
        return [i + o for i, o in zip(self.in_degrees(), self.out_degrees())]

    def relabel(self, perm):
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of range(vertex_count)")
        return ExplicitGraph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))


def saddle_count(t):
    return t.saddles


def leaf_count(t):
    if t.kind == LEAF:
        return 1
    return sum(leaf_count(c) for c in t.children)


_LEAF = RootedReebTree(LEAF)


def leaf():
    """Return the tree with no saddles (a single extremum)."""
    return _LEAF


def attach_up_up(a, b):
    """Saddle whose two children both hang from upward edges.

    The pair is unordered; children are stored in canonical order.
    """
    if canon_key(b.code) < canon_key(a.code):
        a, b = b, a
    return RootedReebTree(UP_UP, (a, b), 1 + a.saddles + b.saddles, f"({a.code}^{b.code}^)")


def attach_mixed(up_child, down_child):
    """Saddle with one child above it and one below it (ordered)."""
    return RootedReebTree(
        MIXED,
        (up_child, down_child),
        1 + up_child.saddles + down_child.saddles,
        f"({up_child.code}^{down_child.code}v)",
    )


def glue(lower, upper):
    """Join two rooted trees at a degree-2 saddle, ``lower`` below and ``upper`` above."""
    return FullReebGraph(lower, upper)


def _flatten(t, flip, edges, counter):
    # `flip` is True when the frame is orientation-reversed relative to t's normal form.
    v = counter[0]
    counter[0] += 1
    if t.kind == LEAF:
        return v
    a, b = t.children
    for child, down in ((a, False), (b, t.kind == MIXED)):
        c = _flatten(child, flip ^ down, edges, counter)
        src, dst = (c, v) if down else (v, c)
        edges.append((dst, src) if flip else (src, dst))
    return v


def to_explicit(g):
    """Flatten a rooted tree or full graph to an :class:`ExplicitGraph`.

    Vertices are numbered in preorder.  For a full graph the lower tree comes
    first (with its edges reversed), then the degree-2 vertex, then the upper
    tree.  A rooted tree gets an extra source vertex 0 standing in for the root
    half-edge.
    """
    edges = []
    counter = [0]
    if isinstance(g, FullReebGraph):
        low = _flatten(g.lower, True, edges, counter)
        mid = counter[0]
        counter[0] += 1
        edges.append((low, mid))
        high = _flatten(g.upper, False, edges, counter)
        edges.append((mid, high))
    elif isinstance(g, RootedReebTree):
        counter[0] = 1
        root = _flatten(g, False, edges, counter)
        edges.append((0, root))
    else:
        raise TypeError(f"expected RootedReebTree or FullReebGraph, got {type(g).__name__}")
    return ExplicitGraph(counter[0], tuple(edges))


def reverse(g):
    """Reverse every edge of an explicit graph."""
    return ExplicitGraph(g.vertex_count, tuple((v, u) for u, v in g.edges))
