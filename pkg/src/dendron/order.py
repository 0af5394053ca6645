"""A total order on the mixed hashable values used as set elements.

Elements may be ints, strings or nested tuples of those (for example the
pairs making up A x L).  Sorting by ``sort_key`` keeps every listing
deterministic.
"""
from __future__ import annotations

from typing import Any, Iterable


def sort_key(x: Any):
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, (tuple, list)):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(y) for y in x)))
    if x is None:
        return (-1,)
    key = getattr(x, "sort_key", None)
    if key is not None:
        return (4, key())
    return (5, repr(x))


def ordered(xs: Iterable) -> list:
    return sorted(xs, key=sort_key)


def jsonable(x: Any):
    """Convert values to JSON-friendly data with deterministic ordering."""
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in sorted(x.items(), key=lambda kv: sort_key(kv[0]))}
    if isinstance(x, (frozenset, set)):
        return [jsonable(y) for y in ordered(x)]
    if isinstance(x, (tuple, list)):
        return [jsonable(y) for y in x]
    return x
