"""van Rossum, Schreiber, and Victor-Purpura distances with signed-event
extensions for up/down trains."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .events import EventSequence, difference, split_signs


@dataclass(frozen=True)
class VanRossumParams:
    """Causal-exponential decay rate alpha >= 0; alpha = 0 selects the unit
    step kernel limit."""

    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha!r}")


@dataclass(frozen=True)
class VictorPurpuraParams:
    """Shift cost rate s >= 0 per unit time.

    mode "combined" runs one edit distance between the crosswise nonnegative
    trains a = eta1+ + eta2- and b = eta1- + eta2+; mode "separate" sums two
    edit distances over the positive and negative parts (the reading under
    which s = 0 reduces to the counting formula on signed trains as well).
    """

    s: float
    mode: str = "combined"

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s >= 0.0):
            raise ValueError(f"s must be finite and >= 0, got {self.s!r}")
        if self.mode not in ("combined", "separate"):
            raise ValueError(f"mode must be 'combined' or 'separate', got {self.mode!r}")


@dataclass(frozen=True)
class SchreiberParams:
    """Smoothing kernel and distance shape for the Schreiber similarity.

    kernel: "causal_exponential" (rate alpha, integrated over [0, T]) or
    "gaussian" (width sigma, integrated over the whole line).  h maps the
    similarity in [-1, 1] to a distance: "one_minus_s" or "arccos".
    """

    kernel: str = "causal_exponential"
    alpha: float = 1.0
    sigma: float = 1.0
    h: str = "one_minus_s"

    def __post_init__(self):
        if self.kernel not in ("causal_exponential", "gaussian"):
            raise ValueError(f"unknown kernel {self.kernel!r}")
        if self.h not in ("one_minus_s", "arccos"):
            raise ValueError(f"unknown distance shape {self.h!r}")
        if self.kernel == "causal_exponential" and not self.alpha > 0.0:
            raise ValueError("causal_exponential needs alpha > 0")
        if self.kernel == "gaussian" and not self.sigma > 0.0:
            raise ValueError("gaussian needs sigma > 0")


def _exp_gram(times1, values1, times2, values2, alpha: float, T: float) -> float:
    """Inner product of causal-exponential smoothings over [0, T].

    Pairwise term: int_max(ti,tj)^T e^{-a(t-ti)} e^{-a(t-tj)} dt
                 = (e^{-a|ti-tj|} - e^{-a(2T-ti-tj)}) / (2a).
    """
    if not times1 or not times2:
        return 0.0
    t1 = np.asarray(times1)
    v1 = np.asarray(values1)
    t2 = np.asarray(times2)
    v2 = np.asarray(values2)
    dt = np.abs(t1[:, None] - t2[None, :])
    tail = 2.0 * T - t1[:, None] - t2[None, :]
    kern = (np.exp(-alpha * dt) - np.exp(-alpha * tail)) / (2.0 * alpha)
    return float(v1 @ kern @ v2)


def _gauss_gram(times1, values1, times2, values2, sigma: float) -> float:
    """Whole-line Gaussian-smoothing inner product (peak-normalized; the
    constant sigma*sqrt(pi) factor cancels in the similarity)."""
    if not times1 or not times2:
        return 0.0
    t1 = np.asarray(times1)
    v1 = np.asarray(values1)
    t2 = np.asarray(times2)
    v2 = np.asarray(values2)
    d = t1[:, None] - t2[None, :]
    kern = np.exp(-(d * d) / (4.0 * sigma * sigma))
    return float(v1 @ kern @ v2)


def exp_response(eta: EventSequence, alpha: float, t) -> np.ndarray:
    """Smoothed train R_eta at times t: sum of v_k e^{-alpha (t - t_k)} over
    t_k <= t (alpha = 0 gives the running-sum step function)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.zeros_like(t)
    for tk, vk in zip(eta.times, eta.values):
        mask = t >= tk
        if alpha == 0.0:
            out[mask] += vk
        else:
            out[mask] += vk * np.exp(-alpha * (t[mask] - tk))
    return out


def _step_l2(eta: EventSequence) -> float:
    """L2 norm over [0, T] of the running-sum step function of eta."""
    acc = 0.0
    energy = 0.0
    prev_t = None
    for t, v in zip(eta.times, eta.values):
        if prev_t is not None:
            energy += acc * acc * (t - prev_t)
        acc += v
        prev_t = t
    if prev_t is not None:
        energy += acc * acc * (eta.T - prev_t)
    return math.sqrt(max(energy, 0.0))


def van_rossum(eta1: EventSequence, eta2: EventSequence,
               params: VanRossumParams) -> float:
    """L2 distance on [0, T] between the causal-exponential smoothings.

    For alpha > 0 the squared distance is the exponential Gram form of the
    merged signed difference train (kernel tails truncated at T).  For
    alpha = 0 the kernel is the unit step and the distance is the L2 norm of
    the difference of running-sum step functions.
    """
    if eta1.T != eta2.T:
        raise ValueError(f"horizon mismatch: {eta1.T!r} vs {eta2.T!r}")
    diff = difference(eta1, eta2)
    if params.alpha == 0.0:
        return _step_l2(diff)
    d2 = _exp_gram(diff.times, diff.values, diff.times, diff.values,
                   params.alpha, diff.T)
    return math.sqrt(max(d2, 0.0))


def schreiber_similarity(eta1: EventSequence, eta2: EventSequence,
                         params: SchreiberParams) -> float:
    """Normalized inner product of kernel-smoothed trains, in [-1, 1]."""
    if eta1.T != eta2.T:
        raise ValueError(f"horizon mismatch: {eta1.T!r} vs {eta2.T!r}")
    if not eta1.times or not eta2.times:
        raise ValueError("Schreiber similarity is undefined for empty trains")
    if params.kernel == "causal_exponential":
        def gram(a, b):
            return _exp_gram(a.times, a.values, b.times, b.values,
                             params.alpha, eta1.T)
    else:
        def gram(a, b):
            return _gauss_gram(a.times, a.values, b.times, b.values, params.sigma)
    g12 = gram(eta1, eta2)
    g11 = gram(eta1, eta1)
    g22 = gram(eta2, eta2)
    return g12 / (math.sqrt(g11) * math.sqrt(g22))


def schreiber_distance(eta1: EventSequence, eta2: EventSequence,
                       params: SchreiberParams) -> float:
    s = schreiber_similarity(eta1, eta2, params)
    if params.h == "one_minus_s":
        return 1.0 - s
    return math.acos(min(max(s, -1.0), 1.0))


def _spike_times(eta: EventSequence) -> list[float]:
    """Expand a nonnegative train into unit spikes (integer multiplicities)."""
    out = []
    for t, v in zip(eta.times, eta.values):
        m = round(v)
        if m < 1 or abs(v - m) > 1e-9:
            raise ValueError(
                f"Victor-Purpura needs unit (integer-multiplicity) events, got {v!r}"
            )
        out.extend([t] * m)
    return out


def _merge_sum(eta1: EventSequence, eta2: EventSequence) -> EventSequence:
    from .events import add_events

    return add_events(eta1, eta2)


def _vp_dp(ta: list[float], tb: list[float], s: float) -> float:
    """Classic O(nm) edit distance: insert/delete cost 1, shift cost s*|dt|."""
    n, m = len(ta), len(tb)
    prev = [float(j) for j in range(m + 1)]
    for i in range(1, n + 1):
        cur = [float(i)] + [0.0] * m
        ti = ta[i - 1]
        for j in range(1, m + 1):
            shift = prev[j - 1] + s * abs(ti - tb[j - 1])
            cur[j] = min(prev[j] + 1.0, cur[j - 1] + 1.0, shift)
        prev = cur
    return prev[m]


def victor_purpura(eta1: EventSequence, eta2: EventSequence,
                   params: VictorPurpuraParams) -> float:
    """Victor-Purpura editing distance extended to signed trains.

    Each train splits into nonnegative parts; the default combines them
    crosswise into a = eta1+ + eta2- and b = eta1- + eta2+ and runs one edit
    distance between a and b.  mode "separate" instead sums the edit
    distances of the positive parts and of the negative parts.
    """
    if eta1.T != eta2.T:
        raise ValueError(f"horizon mismatch: {eta1.T!r} vs {eta2.T!r}")
    p1, m1 = split_signs(eta1)
    p2, m2 = split_signs(eta2)
    if params.mode == "separate":
        return (_vp_dp(_spike_times(p1), _spike_times(p2), params.s)
                + _vp_dp(_spike_times(m1), _spike_times(m2), params.s))
    a = _merge_sum(p1, m2)
    b = _merge_sum(m1, p2)
    return _vp_dp(_spike_times(a), _spike_times(b), params.s)
