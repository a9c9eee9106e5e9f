"""Independent brute-force oracles used by the tests.

Nothing here goes through the package's recursive construction: candidate
graphs come from networkx's unlabeled tree generator with every edge
orientation tried, and isomorphism classes are formed with networkx's VF2.
"""

import itertools

import networkx as nx


def _is_rp2_reeb(tree, orient, stub=None):
    g = nx.DiGraph()
    g.add_nodes_from(tree.nodes)
    for (u, v), flip in zip(tree.edges, orient):
        g.add_edge(*((v, u) if flip else (u, v)))
    deg2 = 0
    for v in g.nodes:
        i, o = g.in_degree(v), g.out_degree(v)
        if v == stub:
            if (i, o) != (0, 1):
                return None
            continue
        if i + o == 1:
            continue
        if i + o == 2:
            deg2 += 1
            if (i, o) != (1, 1):
                return None
        elif i + o == 3:
            if (i, o) not in ((1, 2), (2, 1)):
                return None
        else:
            return None
    want = 0 if stub is not None else 1
    return g if deg2 == want else None


def _classes(candidates, node_match=None):
    reps = []
    buckets = {}
    for g in candidates:
        key = (
            tuple(sorted((g.in_degree(v), g.out_degree(v)) for v in g)),
            nx.weisfeiler_lehman_graph_hash(g, node_attr="mark" if node_match else None),
        )
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h, node_match=node_match) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


def brute_full(k):
    """All non-isomorphic oriented trees on 2k+1 vertices meeting the RP^2 conditions."""
    n = 2 * k + 1
    cands = []
    for tree in nx.nonisomorphic_trees(n):
        if max(d for _, d in tree.degree) > 3:
            continue
        for orient in itertools.product((False, True), repeat=n - 1):
            g = _is_rp2_reeb(tree, orient)
            if g is not None:
                cands.append(g)
    return _classes(cands)


def brute_rooted(k):
    """All non-isomorphic rooted trees with k saddles, each with a marked stub source."""
    n = 2 * k + 2
    cands = []
    trees = [nx.path_graph(2)] if n == 2 else list(nx.nonisomorphic_trees(n))
    for tree in trees:
        if any(d not in (1, 3) for _, d in tree.degree):
            continue
        for stub in [v for v, d in tree.degree if d == 1]:
            for orient in itertools.product((False, True), repeat=n - 1):
                g = _is_rp2_reeb(tree, orient, stub=stub)
                if g is not None:
                    nx.set_node_attributes(g, {v: v == stub for v in g}, "mark")
                    cands.append(g)
    return _classes(cands, node_match=lambda a, b: a["mark"] == b["mark"])


def ahu_label(g, root=0):
    """Rooted canonical label of an explicit tree, with raw (unnormalized) edge directions.

    Children are keyed by the absolute direction of the connecting edge, so
    this never uses the normal-form convention of the package.
    """
    adj = {v: [] for v in range(g.vertex_count)}
    for u, v in g.edges:
        adj[u].append((v, "out"))
        adj[v].append((u, "in"))

    def label(v, parent):
        return tuple(sorted((d, label(w, v)) for w, d in adj[v] if w != parent))

    return label(root, None)


def to_networkx(g):
    d = nx.DiGraph()
    d.add_nodes_from(range(g.vertex_count))
    d.add_edges_from(g.edges)
    return d
