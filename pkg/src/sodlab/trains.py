"""Deterministic event-train generators used by tests and the analysis
harness (alternating trains, the max-max-sum counterexample family,
seeded random trains)."""

from __future__ import annotations

import numpy as np

from .events import EventSequence, from_pairs


def alternating_train(n: int, T: float = 1.0, start: int = 1) -> EventSequence:
    """n unit events of strictly alternating sign at k*T/(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = 1.0 if start > 0 else -1.0
    pairs = [((k + 1) * T / (n + 1), sign * (-1.0) ** k) for k in range(n)]
    return from_pairs(T, pairs)


def mmsn_train(n: int, T: float = 1.0) -> EventSequence:
    """ceil(n/2) up events then n - ceil(n/2) down events at k*T/n.

    Max-max-sum norm 1 for every n while the discrepancy norm is ceil(n/2):
    the family separating the two norms.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    half = (n + 1) // 2
    pairs = [(k * T / n, 1.0 if k <= half else -1.0) for k in range(1, n + 1)]
    return from_pairs(T, pairs)


def equidistant_alternating(n: int, delta: float, T: float | None = None,
                            start: int = 1) -> EventSequence:
    """Alternating unit train at (k+1)*delta, k = 0..n-1."""
    if n < 1 or delta <= 0.0:
        raise ValueError("need n >= 1 and delta > 0")
    if T is None:
        T = n * delta
    sign = 1.0 if start > 0 else -1.0
    pairs = [((k + 1) * delta, sign * (-1.0) ** k) for k in range(n)]
    if pairs[-1][0] > T:
        raise ValueError("train exceeds the horizon")
    return from_pairs(float(T), pairs)


def _random_times(rng, n: int, T: float):
    times = np.sort(rng.uniform(0.0, T, n))
    while len(np.unique(times)) != n:  # pragma: no cover - measure-zero
        times = np.sort(rng.uniform(0.0, T, n))
    return [float(t) for t in times]


def random_unit_train(seed: int, n: int, T: float = 1.0) -> EventSequence:
    """n events with +-1 amplitudes at sorted uniform times."""
    rng = np.random.default_rng(seed)
    times = _random_times(rng, n, T)
    signs = rng.integers(0, 2, n) * 2 - 1
    return from_pairs(T, list(zip(times, (float(s) for s in signs))))


def random_signed_train(seed: int, n: int, T: float = 1.0,
                        amplitudes=(-2.0, -1.0, 1.0, 2.0)) -> EventSequence:
    """n events with amplitudes drawn from a small integer-valued alphabet
    (keeps all norm arithmetic exact in floats)."""
    rng = np.random.default_rng(seed)
    times = _random_times(rng, n, T)
    amps = rng.choice(np.asarray(amplitudes, dtype=float), n)
    return from_pairs(T, list(zip(times, (float(a) for a in amps))))


def random_pure_train(seed: int, n: int, theta: float, T: float = 1.0) -> EventSequence:
    """theta-pure train: random signs, all magnitudes exactly theta."""
    if theta <= 0.0:
        raise ValueError("theta must be positive")
    rng = np.random.default_rng(seed)
    times = _random_times(rng, n, T)
    signs = rng.integers(0, 2, n) * 2 - 1
    return from_pairs(T, [(t, float(s) * theta) for t, s in zip(times, signs)])


def random_nonnegative_train(seed: int, n: int, T: float = 1.0) -> EventSequence:
    """n unit up events at sorted uniform times."""
    rng = np.random.default_rng(seed)
    return from_pairs(T, [(t, 1.0) for t in _random_times(rng, n, T)])
