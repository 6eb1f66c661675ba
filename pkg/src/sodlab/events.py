"""Event sequences: sampler outputs, their differences, and sign structure.

Events are stored sparsely (no zero amplitudes).  Grid merging uses exact
float time equality: samplers and generators only produce times from exact
arithmetic, so collisions are intentional, never tolerance-matched.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from ._util import write_text_atomic


@dataclass(frozen=True)
class EventSequence:
    """Finite ordered list of (time, amplitude) events on [0, T].

    Times are strictly increasing within [0, T]; amplitudes are nonzero.
    A sequence is theta-pure when all |v_k| coincide; differences of two
    theta-pure sequences may carry amplitudes in {-2t, -t, t, 2t}.
    """

    T: float
    times: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if not (isinstance(self.T, float) and math.isfinite(self.T) and self.T > 0.0):
            raise ValueError(f"horizon must be a positive finite float, got {self.T!r}")
        times = tuple(float(t) for t in self.times)
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        if len(times) != len(values):
            raise ValueError("times and values must have equal length")
        prev = -math.inf
        for t in times:
            if not (0.0 <= t <= self.T):
                raise ValueError(f"event time {t!r} outside [0, {self.T!r}]")
            if not t > prev:
                raise ValueError("event times must be strictly increasing")
            prev = t
        for v in values:
            if v == 0.0 or not math.isfinite(v):
                raise ValueError(f"event amplitudes must be nonzero and finite, got {v!r}")

    def __len__(self) -> int:
        return len(self.times)

    def pairs(self):
        return list(zip(self.times, self.values))

    def is_pure(self) -> bool:
        """True when all amplitude magnitudes are identical (or empty)."""
        if not self.values:
            return True
        mag = abs(self.values[0])
        return all(abs(v) == mag for v in self.values)


def from_pairs(T: float, pairs) -> EventSequence:
    times = tuple(p[0] for p in pairs)
    values = tuple(p[1] for p in pairs)
    return EventSequence(T, times, values)


def empty(T: float) -> EventSequence:
    return EventSequence(T, (), ())


def scale_events(eta: EventSequence, lam: float) -> EventSequence:
    """Amplitudes scaled by lam; lam = 0 yields the empty sequence."""
    if lam == 0.0:
        return empty(eta.T)
    return EventSequence(eta.T, eta.times, tuple(lam * v for v in eta.values))


def difference(eta1: EventSequence, eta2: EventSequence) -> EventSequence:
    """Merged-grid pointwise eta1 - eta2; exact cancellations are dropped."""
    if eta1.T != eta2.T:
        raise ValueError(f"horizon mismatch: {eta1.T!r} vs {eta2.T!r}")
    t1, v1 = eta1.times, eta1.values
    t2, v2 = eta2.times, eta2.values
    i = j = 0
    times, values = [], []
    while i < len(t1) or j < len(t2):
        if j >= len(t2) or (i < len(t1) and t1[i] < t2[j]):
            t, v = t1[i], v1[i]
            i += 1
        elif i >= len(t1) or t2[j] < t1[i]:
            t, v = t2[j], -v2[j]
            j += 1
        else:  # exact time collision
            t, v = t1[i], v1[i] - v2[j]
            i += 1
            j += 1
        if v != 0.0:
            times.append(t)
            values.append(v)
    return EventSequence(eta1.T, tuple(times), tuple(values))


def add_events(eta1: EventSequence, eta2: EventSequence) -> EventSequence:
    return difference(eta1, scale_events(eta2, -1.0))


def restrict(eta: EventSequence, a: float, b: float) -> EventSequence:
    """Events with t in [a, b]; the horizon is unchanged."""
    if not (0.0 <= a <= b <= eta.T):
        raise ValueError(f"interval [{a!r}, {b!r}] not inside [0, {eta.T!r}]")
    kept = [(t, v) for t, v in zip(eta.times, eta.values) if a <= t <= b]
    return from_pairs(eta.T, kept)


def split_signs(eta: EventSequence) -> tuple[EventSequence, EventSequence]:
    """(positive part, negated negative part); both carry amplitudes > 0 and
    eta reconstructs as plus - minus on the merged grid."""
    plus = [(t, v) for t, v in zip(eta.times, eta.values) if v > 0.0]
    minus = [(t, -v) for t, v in zip(eta.times, eta.values) if v < 0.0]
    return from_pairs(eta.T, plus), from_pairs(eta.T, minus)


def is_alternating(eta: EventSequence) -> bool:
    """True iff consecutive amplitudes strictly alternate in sign."""
    vals = eta.values
    return all(vals[i] * vals[i + 1] < 0.0 for i in range(len(vals) - 1))


# --- CSV interface ---------------------------------------------------------
# Header `t,v`, one event per row, times ascending, full decimal precision.
# The horizon travels in a sidecar JSON (or a CLI flag).

def _sidecar_path(path) -> str:
    return f"{path}.meta.json"


def write_events_csv(path, eta: EventSequence, sidecar: bool = True) -> None:
    lines = ["t,v"]
    lines.extend(f"{t!r},{v!r}" for t, v in zip(eta.times, eta.values))
    write_text_atomic(path, "\n".join(lines) + "\n")
    if sidecar:
        write_text_atomic(_sidecar_path(path), json.dumps({"T": eta.T}) + "\n")


def read_events_csv(path, horizon: float | None = None) -> EventSequence:
    with open(path) as handle:
        lines = [ln.strip() for ln in handle if ln.strip()]
    if not lines or lines[0] != "t,v":
        raise ValueError(f"{path}: expected header 't,v'")
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != 2:
            raise ValueError(f"{path}:{lineno}: expected two columns, got {line!r}")
        try:
            pairs.append((float(cells[0]), float(cells[1])))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if horizon is None:
        try:
            with open(_sidecar_path(path)) as handle:
                horizon = float(json.load(handle)["T"])
        except FileNotFoundError:
            if not pairs:
                raise ValueError(
                    f"{path}: empty event file needs --horizon or a sidecar"
                ) from None
            horizon = pairs[-1][0]
    return from_pairs(float(horizon), pairs)
