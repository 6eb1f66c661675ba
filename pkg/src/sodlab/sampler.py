"""Send-on-delta sampling, level-crossing with hysteresis, integrate-and-fire,
and the canonical right inverse (reconstruction).

Events are emitted at the exact first time |f(t) - f(t_k)| reaches the
threshold.  Crossings are computed closed-form per polynomial piece; the
earliest root wins.  Exact endpoint hits are recognized by comparing stored
joint values, which is what makes ``sod_sample(reconstruct(eta)) == eta``
bit-exact: the reconstruction's breakpoint levels are produced by the same
float additions the sampler uses for its reference levels.
"""

from __future__ import annotations

import math

from .events import EventSequence
from .signals import Segment, Signal, integrate, pwl_from_points, scale, zero


def _check_theta(theta: float) -> float:
    if not (isinstance(theta, (int, float)) and math.isfinite(theta) and theta > 0.0):
        raise ValueError(f"threshold must be a positive finite number, got {theta!r}")
    return float(theta)


def _check_anchored(f: Signal) -> None:
    if f.segments[0].c0 != 0.0:
        raise ValueError("sampling requires f(0) = 0")


def _segment_arrays(f: Signal):
    """Flatten segments into parallel lists plus exact joint values.

    The value at each segment's right endpoint is taken from the next
    segment's stored c0 (exact by the continuity invariant); the last
    endpoint is evaluated at T.
    """
    segs = f.segments
    starts = [s.t0 for s in segs]
    ends = [segs[i + 1].t0 for i in range(len(segs) - 1)] + [f.T]
    end_values = [segs[i + 1].c0 for i in range(len(segs) - 1)] + [segs[-1].value(f.T)]
    return segs, starts, ends, end_values


def _quadratic_roots(a: float, b: float, c: float):
    """Real roots of a*u^2 + b*u + c = 0 with a != 0, numerically stable."""
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return ()
    if disc == 0.0:
        return (-b / (2.0 * a),)
    sq = math.sqrt(disc)
    q = -0.5 * (b + sq) if b >= 0.0 else -0.5 * (b - sq)
    r1 = q / a
    r2 = c / q if q != 0.0 else r1
    return (r1, r2)


def _segment_level_hits(seg: Segment, lo_t: float, hi_t: float, end_value: float,
                        level: float, t_from: float):
    """Times t in (t_from, hi_t] with seg(t) == level, ascending.

    Exact joint hits (stored start/end values equal to the level bit-for-bit)
    are reported at the stored joint times; closed-form roots landing within a
    rounding error of such a joint are folded into it.
    """
    hits = []
    if seg.c0 == level and lo_t > t_from:
        hits.append(lo_t)
    if end_value == level and hi_t > t_from:
        hits.append(hi_t)
    seg_len = hi_t - lo_t
    slack = 1e-12 * max(1.0, seg_len)
    snap = 1e-9 * max(1.0, seg_len)
    if seg.c2 == 0.0:
        roots = ((level - seg.c0) / seg.c1,) if seg.c1 != 0.0 else ()
    else:
        roots = _quadratic_roots(seg.c2, seg.c1, seg.c0 - level)
    for u in roots:
        if not -slack <= u <= seg_len + slack:
            continue
        t = lo_t + min(max(u, 0.0), seg_len)
        if t <= t_from:
            continue
        if any(abs(t - h) <= snap for h in hits):
            continue
        hits.append(t)
    hits.sort()
    return hits


def _first_crossing(arrays, seg_idx: int, t_from: float,
                    level_up: float, level_down: float):
    """Earliest (t, level) with f(t) hitting either level after t_from."""
    segs, starts, ends, end_values = arrays
    for i in range(seg_idx, len(segs)):
        if ends[i] <= t_from:
            continue
        best = None
        for level in (level_up, level_down):
            hits = _segment_level_hits(segs[i], starts[i], ends[i],
                                       end_values[i], level, t_from)
            if hits and (best is None or hits[0] < best[0]):
                best = (hits[0], level)
        if best is not None:
            return best[0], best[1], i
    return None


def sod_sample(f: Signal, theta: float) -> EventSequence:
    """Send-on-delta: events at t_{k+1} = inf{t > t_k : |f(t) - f(t_k)| >= theta}.

    Returns a theta-pure sequence; amplitudes are exactly +-theta.  A
    crossing at t = T counts as an event.  An event-free signal yields the
    empty sequence.
    """
    theta = _check_theta(theta)
    _check_anchored(f)
    arrays = _segment_arrays(f)
    ref = 0.0
    t_cur = 0.0
    seg_idx = 0
    times, values = [], []
    while True:
        hit = _first_crossing(arrays, seg_idx, t_cur, ref + theta, ref - theta)
        if hit is None:
            break
        t_hit, level, seg_idx = hit
        times.append(t_hit)
        values.append(theta if level > ref else -theta)
        ref = level
        t_cur = t_hit
    return EventSequence(f.T, tuple(times), tuple(values))


def lc_sample(f: Signal, theta: float) -> EventSequence:
    """Level-crossing with hysteresis on the lattice {k*theta}.

    From level index k0 at the last event the next event fires at the first
    time f reaches (k0 +- 1)*theta.  The initial index is 0 since f(0) = 0
    lies on the lattice.
    """
    theta = _check_theta(theta)
    _check_anchored(f)
    arrays = _segment_arrays(f)
    k0 = 0
    t_cur = 0.0
    seg_idx = 0
    times, values = [], []
    while True:
        up = (k0 + 1) * theta
        down = (k0 - 1) * theta
        hit = _first_crossing(arrays, seg_idx, t_cur, up, down)
        if hit is None:
            break
        t_hit, level, seg_idx = hit
        times.append(t_hit)
        values.append(theta if level == up else -theta)
        k0 += 1 if level == up else -1
        t_cur = t_hit
    return EventSequence(f.T, tuple(times), tuple(values))


def if_sample(f: Signal, theta: float) -> EventSequence:
    """Integrate-and-fire with infinite leak time: SOD applied to the exact
    antiderivative of a piecewise-linear input."""
    return sod_sample(integrate(f), _check_theta(theta))


def reconstruct(eta: EventSequence) -> Signal:
    """Piecewise-linear interpolant through (0, 0) and (t_k, sum_{j<=k} v_j),
    constant after the last event.

    Requires a theta-pure input (all |v_k| equal).  Guarantee:
    ``sod_sample(reconstruct(eta), theta) == eta`` exactly, times and
    amplitudes.
    """
    if not eta.is_pure():
        raise ValueError("reconstruct needs a theta-pure sequence (equal |v_k|)")
    if not eta.times:
        return zero(eta.T)
    if eta.times[0] == 0.0:
        raise ValueError("cannot interpolate through an event at t = 0")
    times = [0.0]
    levels = [0.0]
    acc = 0.0
    for t, v in zip(eta.times, eta.values):
        acc += v
        times.append(t)
        levels.append(acc)
    return pwl_from_points(eta.T, times, levels)


def homogeneity_check(f: Signal, theta: float, theta_tilde: float) -> bool:
    """True iff sampling f at theta_tilde equals sampling (theta/theta_tilde)*f
    at theta, with identical event times and sign-matched amplitudes.

    The comparison is exact.  Exactness is guaranteed in floating point when
    theta_tilde / theta is a power of two (scaling by 2^k is lossless); for
    arbitrary ratios the crossing arithmetic may differ in the last ulp.
    """
    theta = _check_theta(theta)
    theta_tilde = _check_theta(theta_tilde)
    lhs = sod_sample(f, theta_tilde)
    rhs = sod_sample(scale(f, theta / theta_tilde), theta)
    if lhs.times != rhs.times:
        return False
    return all((a > 0.0) == (b > 0.0) for a, b in zip(lhs.values, rhs.values))
