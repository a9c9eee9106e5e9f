"""Structural checks for RP^2 Reeb graphs.

A valid graph is a tree with exactly one vertex of degree 2 and all others of
degree 1 or 3, whose extrema are exactly its degree-1 vertices.  The
orientation refinements (degree-3 saddles have in/out degree (1, 2) or
(2, 1); the degree-2 saddle has (1, 1)) come from the local model of a
saddle, which has fiber levels both below and above it.  These conditions are
necessary; treating them as sufficient for realizability is an assumption.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .core import ExplicitGraph
from .errors import MutationInapplicable

CONNECTED = "CONNECTED"
ACYCLIC_TREE = "ACYCLIC_TREE"
DEGREE_PROFILE = "DEGREE_PROFILE"
UNIQUE_DEG2 = "UNIQUE_DEG2"
LEAF_ORIENTATION = "LEAF_ORIENTATION"
SADDLE_ORIENTATION = "SADDLE_ORIENTATION"

CONDITIONS = (
    CONNECTED,
    ACYCLIC_TREE,
    DEGREE_PROFILE,
    UNIQUE_DEG2,
    LEAF_ORIENTATION,
    SADDLE_ORIENTATION,
)


@dataclass(frozen=True)
class Check:
    condition: str
    passed: bool
    detail: str
    witnesses: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def is_valid(self):
        return all(c.passed for c in self.checks)

    def failed(self):
        return [c.condition for c in self.checks if not c.passed]

    def __getitem__(self, condition):
        for c in self.checks:
            if c.condition == condition:
                return c
        raise KeyError(condition)

    def to_text(self):
        lines = [f"valid {'yes' if self.is_valid else 'no'}"]
        for c in self.checks:
            lines.append(f"{c.condition}\t{'pass' if c.passed else 'FAIL'}\t{c.detail}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            "format": "reeb v1",
            "is_valid": self.is_valid,
            "checks": [
                {
                    "condition": c.condition,
                    "passed": c.passed,
                    "detail": c.detail,
                    "witnesses": [list(w) if isinstance(w, tuple) else w for w in c.witnesses],
                }
                for c in self.checks
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def _adjacency(g):
    adj = [[] for _ in range(g.vertex_count)]
    for idx, (u, v) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    return adj


def _unreachable(g, adj):
    if g.vertex_count == 0:
        return []
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, _ in adj[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return [v for v in range(g.vertex_count) if not seen[v]]


def find_cycle(g):
    """Return the edges of one undirected cycle, or ``None`` if the graph is a forest.

    Self-loops and parallel edges count as cycles.
    """
    adj = _adjacency(g)
    parent_edge = [None] * g.vertex_count
    parent = [None] * g.vertex_count
    depth = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if depth[start] >= 0:
            continue
        depth[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w, idx in adj[u]:
                if idx == parent_edge[u]:
                    continue
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    parent_edge[w] = idx
                    stack.append(w)
                    continue
                # Non-tree edge u-w closes a cycle through the DFS forest.
                cycle = [g.edges[idx]]
                a, b = u, w
                while a != b:
                    if depth[a] >= depth[b]:
                        cycle.append(g.edges[parent_edge[a]])
                        a = parent[a]
                    else:
                        cycle.append(g.edges[parent_edge[b]])
                        b = parent[b]
                return cycle
    return None


def check_theorem1(g):
    """Check an explicit graph against the RP^2 Reeb graph conditions.

    Never raises on graph content; every condition is reported with a
    pass/fail flag and, on failure, the offending vertices or edges.

    Returns
    -------
    ValidationReport
    """
    adj = _adjacency(g)
    indeg = g.in_degrees()
    outdeg = g.out_degrees()
    deg = [i + o for i, o in zip(indeg, outdeg)]
    n, m = g.vertex_count, len(g.edges)
    checks = []

    missing = _unreachable(g, adj)
    if n == 0:
        checks.append(Check(CONNECTED, False, "graph has no vertices", ()))
    elif missing:
        checks.append(Check(CONNECTED, False, f"vertices not reachable from 0: {missing[:10]}", tuple(missing)))
    else:
        checks.append(Check(CONNECTED, True, "connected"))

    cycle = find_cycle(g)
    if cycle is not None:
        checks.append(Check(ACYCLIC_TREE, False, f"cycle through edges {cycle}", tuple(cycle)))
    elif m != n - 1:
        checks.append(
            Check(ACYCLIC_TREE, False, f"{m} edges for {n} vertices (forest, not a tree)", tuple(missing))
        )
    else:
        checks.append(Check(ACYCLIC_TREE, True, f"tree with {n} vertices"))

    bad = [v for v in range(n) if deg[v] not in (1, 2, 3)]
    if bad:
        detail = ", ".join(f"vertex {v} has degree {deg[v]}" for v in bad[:10])
        checks.append(Check(DEGREE_PROFILE, False, detail, tuple(bad)))
    else:
        checks.append(Check(DEGREE_PROFILE, True, "all degrees in {1, 2, 3}"))

    deg2 = [v for v in range(n) if deg[v] == 2]
    if len(deg2) == 1:
        checks.append(Check(UNIQUE_DEG2, True, f"vertex {deg2[0]} is the unique degree-2 vertex"))
    elif deg2:
        checks.append(Check(UNIQUE_DEG2, False, f"{len(deg2)} degree-2 vertices: {deg2[:10]}", tuple(deg2)))
    else:
        # No degree-2 vertex to point at; name the internal vertices instead.
        internal = tuple(v for v in range(n) if deg[v] > 1) or tuple(range(min(n, 1)))
        checks.append(Check(UNIQUE_DEG2, False, "no degree-2 vertex", internal))

    bad_leaves = [v for v in range(n) if deg[v] == 1 and not (indeg[v] == 1 or outdeg[v] == 1)]
    if bad_leaves:
        checks.append(Check(LEAF_ORIENTATION, False, f"degree-1 vertices not extrema: {bad_leaves}", tuple(bad_leaves)))
    else:
        checks.append(Check(LEAF_ORIENTATION, True, "every degree-1 vertex is a source or a sink"))

    bad_saddles = []
    for v in range(n):
        if deg[v] == 3 and (indeg[v], outdeg[v]) not in ((1, 2), (2, 1)):
            bad_saddles.append(v)
        elif deg[v] == 2 and (indeg[v], outdeg[v]) != (1, 1):
            bad_saddles.append(v)
    if bad_saddles:
        detail = ", ".join(f"vertex {v} has (in, out) = ({indeg[v]}, {outdeg[v]})" for v in bad_saddles[:10])
        checks.append(Check(SADDLE_ORIENTATION, False, detail, tuple(bad_saddles)))
    else:
        checks.append(
            Check(
                SADDLE_ORIENTATION,
                True,
                "no internal vertex is a source or sink; degree-2 vertex has (in, out) = (1, 1) (inferred)",
            )
        )
    return ValidationReport(tuple(checks))


MUTATIONS = ("add-cycle", "split-deg2", "flip-internal-to-sink")

#: Condition each mutation is guaranteed to break on a valid input.
PREDICTED_FAILURE = {
    "add-cycle": ACYCLIC_TREE,
    "split-deg2": UNIQUE_DEG2,
    "flip-internal-to-sink": SADDLE_ORIENTATION,
}


def mutate_for_tests(g, mode):
    """Break a valid graph in a targeted way.

    ``add-cycle`` joins two non-adjacent vertices; ``split-deg2`` subdivides
    the first edge, creating a second degree-2 vertex; ``flip-internal-to-sink``
    turns the degree-2 vertex into a sink.  :data:`PREDICTED_FAILURE` names the
    condition each one trips.
    """
    if mode not in MUTATIONS:
        raise ValueError(f"unknown mutation mode {mode!r}; expected one of {MUTATIONS}")
    deg = g.degrees()
    if mode == "add-cycle":
        adjacent = {frozenset(e) for e in g.edges}
        for u in range(g.vertex_count):
            for v in range(u + 1, g.vertex_count):
                if frozenset((u, v)) not in adjacent:
                    return ExplicitGraph(g.vertex_count, g.edges + ((u, v),))
        raise MutationInapplicable(
            f"add-cycle needs two non-adjacent vertices; graph with {g.vertex_count} vertices has none "
            f"(a parallel edge would trip {ACYCLIC_TREE} anyway)"
        )
    if mode == "split-deg2":
        if not g.edges:
            raise MutationInapplicable(f"split-deg2 needs an edge to subdivide; {DEGREE_PROFILE} already fails")
        u, v = g.edges[0]
        w = g.vertex_count
        return ExplicitGraph(w + 1, ((u, w), (w, v)) + g.edges[1:])
    internal = [v for v in range(g.vertex_count) if deg[v] == 2] or [v for v in range(g.vertex_count) if deg[v] > 1]
    if not internal:
        raise MutationInapplicable(f"flip-internal-to-sink needs an internal vertex; {UNIQUE_DEG2} already fails")
    x = internal[0]
    return ExplicitGraph(g.vertex_count, tuple((v, u) if u == x else (u, v) for u, v in g.edges))
