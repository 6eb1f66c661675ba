"""The three event-sequence norms: Weyl discrepancy, Alexiewicz, max-max-sum.

Norms see only the ordered amplitude sequence; times enter through ordering
alone (the interval suprema reduce to index intervals).  Every function
accepts an EventSequence, a DenseEvents, or a plain iterable of amplitudes.
"""

from __future__ import annotations

import numpy as np


def _amplitudes(eta):
    values = getattr(eta, "values", eta)
    return values if isinstance(values, (tuple, list)) else tuple(values)


def discrepancy_norm(eta) -> float:
    """max over contiguous index intervals of |interval sum|, computed O(n)
    as the range of the prefix-sum walk (max vs 0 minus min vs 0)."""
    hi = lo = acc = 0.0
    for v in _amplitudes(eta):
        acc += v
        if acc > hi:
            hi = acc
        elif acc < lo:
            lo = acc
    return hi - lo


def discrepancy_bruteforce(eta, max_events: int = 10_000) -> float:
    """Direct evaluation of the interval supremum: every interval sum is
    accumulated from scratch, O(n^2).  Refuses inputs above `max_events`."""
    values = _amplitudes(eta)
    n = len(values)
    if n > max_events:
        raise ValueError(f"brute force refuses n={n} > {max_events}")
    if n > 64:
        arr = np.asarray(values, dtype=float)
        best = 0.0
        for i in range(n):
            best = max(best, float(np.abs(np.cumsum(arr[i:])).max()))
        return best
    best = 0.0
    for i in range(n):
        acc = 0.0
        for j in range(i, n):
            acc += values[j]
            if abs(acc) > best:
                best = abs(acc)
    return best


def alexiewicz_norm(eta) -> float:
    """max over prefixes of |prefix sum| (intervals anchored at 0)."""
    best = acc = 0.0
    for v in _amplitudes(eta):
        acc += v
        if abs(acc) > best:
            best = abs(acc)
    return best


def max_max_sum_norm(eta) -> float:
    """max(max_k |v_k|, |sum_k v_k|)."""
    values = _amplitudes(eta)
    if not values:
        return 0.0
    return max(max(abs(v) for v in values), abs(sum(values)))


_ALIASES = {
    "d": "D", "discrepancy": "D",
    "a": "A", "alexiewicz": "A",
    "m": "M", "max_max_sum": "M", "mms": "M",
}

_FUNCS = {"D": discrepancy_norm, "A": alexiewicz_norm, "M": max_max_sum_norm}


def canonical_kind(kind: str) -> str:
    key = _ALIASES.get(str(kind).lower(), str(kind).upper())
    if key not in _FUNCS:
        raise ValueError(f"unknown norm kind {kind!r} (expected D, A or M)")
    return key


def norm_by_kind(kind: str):
    """Norm function for a kind tag: D | A | M (long names accepted)."""
    return _FUNCS[canonical_kind(kind)]
