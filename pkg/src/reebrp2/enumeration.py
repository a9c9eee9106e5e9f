"""Exhaustive generation of rooted and full RP^2 Reeb graphs.

Trees are built level by level from the ways of cutting out the saddle
nearest the root.  Duplicates are ruled out by construction (up-up pairs are
only formed in canonical order) rather than filtered with a seen-set, so the
sizes of the streams are an independent check on :mod:`reebrp2.count`.
"""

from __future__ import annotations

import threading

from . import count
from .core import attach_mixed, attach_up_up, canon_key, glue, leaf
from .errors import ResourceLimitError

DEFAULT_CAP = 10**7

_lock = threading.Lock()
_levels = [[leaf()]]


def _build_level(k):
    out = []
    for i in range(k):
        j = k - 1 - i
        batch = []
        left, right = _levels[i], _levels[j]
        if i < j:
            batch.extend(attach_up_up(a, b) for a in left for b in right)
        elif i == j:
            batch.extend(attach_up_up(left[x], left[y]) for x in range(len(left)) for y in range(x, len(left)))
        batch.extend(attach_mixed(a, b) for a in left for b in right)
        batch.sort(key=lambda t: canon_key(t.code))
        out.extend(batch)
    return out


def rooted_level(k):
    """All rooted trees with ``k`` saddles as a cached list, in emission order."""
    if k < len(_levels):
        return _levels[k]
    with _lock:
        while len(_levels) <= k:
            _levels.append(_build_level(len(_levels)))
    return _levels[k]


def clear_cache():
    with _lock:
        del _levels[1:]


def _check_cap(projected, cap):
    if cap is not None and projected > cap:
        raise ResourceLimitError(projected, cap)


def enum_rooted(k, cap=DEFAULT_CAP):
    """Iterate over all non-isomorphic rooted trees with ``k`` saddles.

    Order: ascending saddle count of the first child, then canonical order.

    Raises
    ------
    ResourceLimitError
        If ``K(k)`` exceeds ``cap`` (checked before anything is built).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_cap(count.K(k), cap)
    return iter(rooted_level(k))


def enum_full(k, cap=DEFAULT_CAP):
    """Iterate over all non-isomorphic full graphs with ``k`` saddles.

    Every ordered pair ``(lower, upper)`` with ``i + j = k - 1`` saddles is
    glued; order is ascending ``i``, then canonical order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_cap(count.N(k), cap)
    for i in range(k):
        rooted_level(max(i, k - 1 - i))
    return _full_stream(k)


def _full_stream(k):
    for i in range(k):
        lowers, uppers = rooted_level(i), rooted_level(k - 1 - i)
        # Each level is sorted by canon_key within a split but not globally,
        # so sort the glued batch by its full encoding.
        batch = [glue(a, b) for a in lowers for b in uppers]
        batch.sort(key=lambda g: canon_key(g.code))
        yield from batch
