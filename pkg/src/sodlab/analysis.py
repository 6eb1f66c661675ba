"""Empirical verification harness: threshold-discontinuity estimation,
quasi-isometry bounds, left-continuity probing, and certification of norms
against the equivalence conditions (alternating-family bound, same-sign
infimum, transcription-sweep bound)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .events import EventSequence, difference, empty, from_pairs, scale_events
from .norms import canonical_kind, discrepancy_norm, norm_by_kind
from .sampler import reconstruct, sod_sample
from .signals import Segment, Signal, diameter_norm, random_walk, subtract
from .spike_metrics import (
    SchreiberParams,
    VanRossumParams,
    VictorPurpuraParams,
    schreiber_distance,
    schreiber_similarity,
    van_rossum,
    victor_purpura,
)
from .structure import transcription_sweep
from .trains import (
    alternating_train,
    equidistant_alternating,
    mmsn_train,
    random_unit_train,
)


# --- metrics ---------------------------------------------------------------

class EventMetric:
    """Callable semi-metric on event sequences, tagged with its kind."""

    def __init__(self, kind, fn, is_norm, params=None):
        self.kind = kind
        self.is_norm = is_norm
        self.params = dict(params or {})
        self._fn = fn

    def __call__(self, eta1: EventSequence, eta2: EventSequence) -> float:
        return self._fn(eta1, eta2)


def make_metric(kind: str, **params) -> EventMetric:
    """Metric factory: D | A | M (norm-induced), van_rossum/vr, victor_purpura/vp,
    schreiber."""
    key = str(kind).lower()
    if key in ("d", "a", "m", "discrepancy", "alexiewicz", "max_max_sum", "mms"):
        tag = canonical_kind(kind)
        normf = norm_by_kind(tag)
        return EventMetric(tag, lambda a, b: normf(difference(a, b)), True)
    if key in ("vr", "van_rossum"):
        p = VanRossumParams(float(params.get("alpha", 1.0)))
        return EventMetric("van_rossum", lambda a, b: van_rossum(a, b, p),
                           False, {"alpha": p.alpha})
    if key in ("vp", "victor_purpura"):
        p = VictorPurpuraParams(float(params.get("s", 1.0)),
                                str(params.get("mode", "combined")))
        return EventMetric("victor_purpura", lambda a, b: victor_purpura(a, b, p),
                           False, {"s": p.s, "mode": p.mode})
    if key == "schreiber":
        p = SchreiberParams(**params)
        return EventMetric("schreiber", lambda a, b: schreiber_distance(a, b, p),
                           False, {"kernel": p.kernel, "h": p.h})
    raise ValueError(f"unknown metric kind {kind!r}")


# --- curated adversarial signals -------------------------------------------

def local_max_signal(theta: float = 0.25, T: float = 2.0) -> Signal:
    """Rise to 3*theta on [0, T/2], fall back to 0: the local maximum touches
    a threshold level exactly, the canonical right-discontinuous situation."""
    peak = 3.0 * theta
    half = T / 2.0
    return Signal(T, (
        Segment(0.0, 0.0, peak / half),
        Segment(half, peak, -peak / half),
    ))


def comb_signal(n_peaks: int = 3, theta: float = 0.25) -> Signal:
    """Zigzag between 0 and 2*theta with every peak and valley critical."""
    if n_peaks < 1:
        raise ValueError("n_peaks must be >= 1")
    top = 2.0 * theta
    segs = []
    for i in range(n_peaks):
        segs.append(Segment(2.0 * i, 0.0, top))
        segs.append(Segment(2.0 * i + 1.0, top, -top))
    return Signal(2.0 * n_peaks, tuple(segs))


# --- EMDM sweep and characterization ----------------------------------------

@dataclass(frozen=True)
class PerThetaSweep:
    theta: float
    value: float
    stabilized: bool
    eps_used: float | None


@dataclass(frozen=True)
class SweepResult:
    lambda_estimate: float
    theta_at_max: float
    stabilized: bool
    per_theta: tuple[PerThetaSweep, ...]


def _sign_struct(eta: EventSequence):
    return tuple(1 if v > 0.0 else -1 for v in eta.values)


def _right_limit_estimate(prev, cur, eta0: EventSequence, T: float) -> EventSequence:
    """Linear eps -> 0 extrapolation of event times (structures must match),
    snapped onto coinciding same-sign events of the reference sequence."""
    eps_prev, eta_prev = prev
    eps_cur, eta_cur = cur
    factor = eps_cur / (eps_prev - eps_cur)
    times = [tc - (tp - tc) * factor
             for tp, tc in zip(eta_prev.times, eta_cur.times)]
    tol = 1e-7 * max(1.0, T)
    snapped = []
    i = 0
    for t, v in zip(times, eta_cur.values):
        while i < len(eta0.times) and eta0.times[i] < t - tol:
            i += 1
        t_out = t
        j = i
        while j < len(eta0.times) and eta0.times[j] <= t + tol:
            if eta0.values[j] == v:
                t_out = eta0.times[j]
                i = j + 1
                break
            j += 1
        snapped.append(t_out)
    try:
        return EventSequence(eta_cur.T, tuple(snapped), eta_cur.values)
    except ValueError:  # pathological overlap: keep the raw grid point
        return eta_cur


def emdm_sweep(f: Signal, metric, theta_grid,
               eps_ratios=(1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
               value_tol: float = 1e-9) -> SweepResult:
    """Per-signal discontinuity estimate: the metric gap between the
    normalized output at theta and its right limit in the threshold.

    For each theta the sweep walks a descending geometric eps grid.  The
    output structure (event count and sign pattern) is piecewise constant in
    the threshold, so once consecutive grid points agree structurally the
    event times are extrapolated linearly to eps = 0, events that converge
    onto same-sign events of the theta-output are snapped to them, and the
    metric value between the theta-output and this right-limit estimate is
    recorded; two consecutive values within `value_tol` count as stabilized.
    The estimate is the maximum over the theta grid.
    """
    if isinstance(metric, str):
        metric = make_metric(metric)
    thetas = [float(t) for t in theta_grid]
    if not thetas or any(not (t > 0.0) for t in thetas):
        raise ValueError("theta grid must be positive")
    ratios = [float(r) for r in eps_ratios]
    if not ratios or any(not (r > 0.0) for r in ratios):
        raise ValueError("eps ratios must be positive")
    if any(b >= a for a, b in zip(ratios, ratios[1:])):
        raise ValueError("eps ratios must strictly descend")
    per = []
    for theta in thetas:
        eta0 = scale_events(sod_sample(f, theta), 1.0 / theta)
        prev = None
        values = []
        stabilized = False
        eps_used = None
        value = 0.0
        for ratio in ratios:
            eps = theta * ratio
            eta = scale_events(sod_sample(f, theta + eps), 1.0 / (theta + eps))
            if prev is not None and _sign_struct(eta) == _sign_struct(prev[1]):
                limit = _right_limit_estimate(prev, (eps, eta), eta0, f.T)
                values.append(metric(eta0, limit))
                if len(values) >= 2 and abs(values[-1] - values[-2]) <= value_tol:
                    stabilized = True
                    eps_used = eps
                    value = values[-1]
                    break
            prev = (eps, eta)
        if not stabilized:
            if values:
                value = values[-1]
            else:
                value = metric(eta0, prev[1])
            eps_used = prev[0]
        per.append(PerThetaSweep(theta, value, stabilized, eps_used))
    best = max(per, key=lambda p: p.value)
    return SweepResult(best.value, best.theta, all(p.stabilized for p in per),
                       tuple(per))


@dataclass(frozen=True)
class CharacterizeResult:
    value: float
    growth_table: tuple[dict, ...] | None


def emdm_characterize(metric, n_max: int = 200, T: float = 1.0,
                      deltas=None) -> CharacterizeResult:
    """Supremum of the metric over the discrepancy unit sphere.

    The sphere intersected with unit sequences is exactly the alternating
    trains, so norm metrics reduce to a family supremum (1 for D and A).
    Time-sensitive metrics (van Rossum, Victor-Purpura) get a growth table
    over equidistant alternating trains; for van Rossum the table also
    carries the squared distance (the energy the threshold-discontinuity
    bounds are stated for) and the reported value is its maximum.
    """
    if isinstance(metric, str):
        metric = make_metric(metric)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if metric.is_norm:
        normf = norm_by_kind(metric.kind)
        counts = sorted({1, 2, 3, 5, 8, 13, 21, 34, 55, 89,
                         max(1, n_max // 2), n_max})
        best = 0.0
        for n in counts:
            if n > n_max:
                continue
            for start in (1, -1):
                best = max(best, normf(alternating_train(n, T, start)))
        return CharacterizeResult(best, None)
    if metric.kind == "schreiber":
        raise ValueError("the Schreiber similarity has no distance to the zero "
                         "sequence; see schreiber_conflation_witness")
    if deltas is None:
        deltas = (T / 8.0, T / 16.0, T / 32.0)
    rows = []
    zero_train = empty(T)
    for delta in deltas:
        n = int(round(T / delta))
        n = min(n, n_max)
        eta = equidistant_alternating(n, T / n, T)
        dist = metric(eta, zero_train)
        row = {"n": n, "T": T, "delta": T / n, "distance": dist}
        row.update(metric.params)
        if metric.kind == "van_rossum":
            row["energy"] = dist * dist
        rows.append(row)
    if metric.kind == "van_rossum":
        value = max(row["energy"] for row in rows)
    else:
        value = max(row["distance"] for row in rows)
    return CharacterizeResult(value, tuple(rows))


@dataclass(frozen=True)
class EmdmReport:
    metric: str
    theta_grid: tuple[float, ...]
    eps_ratios: tuple[float, ...]
    per_signal: tuple[dict, ...]
    characterization: float
    growth_table: tuple[dict, ...] | None

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "theta_grid": list(self.theta_grid),
            "eps_ratios": list(self.eps_ratios),
            "per_signal": [dict(row) for row in self.per_signal],
            "characterization": self.characterization,
            "growth_table": None if self.growth_table is None
            else [dict(r) for r in self.growth_table],
        }


# --- quasi-isometry verification --------------------------------------------

@dataclass(frozen=True)
class QiReport:
    kind: str
    theta: float
    trials: int
    violations: int | None
    fitted_A: float
    fitted_B: float
    B_at_A1: float
    coarse_C: float
    reconstruction_failures: int
    per_trial: tuple[tuple[float, float], ...]
    rho1: tuple[tuple[float, float], ...]
    rho2: tuple[tuple[float, float], ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "theta": self.theta,
            "trials": self.trials,
            "violations": self.violations,
            "fitted_A": self.fitted_A,
            "fitted_B": self.fitted_B,
            "B_at_A1": self.B_at_A1,
            "coarse_C": self.coarse_C,
            "reconstruction_failures": self.reconstruction_failures,
            "rho1": [list(p) for p in self.rho1],
            "rho2": [list(p) for p in self.rho2],
        }


def make_qi_corpus(n_pairs: int, seed: int, T: float = 1.0,
                   n_breaks: int = 12, amplitude: float = 0.4):
    """Seed-deterministic list of random piecewise-linear signal pairs."""
    rng = np.random.default_rng(seed)
    child = rng.integers(0, 2 ** 62, size=(n_pairs, 2))
    return [
        (random_walk(T, int(a), n_breaks, amplitude),
         random_walk(T, int(b), n_breaks, amplitude))
        for a, b in child
    ]


def _monotone_envelopes(dxs, dys):
    order = sorted(zip(dxs, dys))
    rho2 = []
    run = -math.inf
    for x, y in order:
        run = max(run, y)
        rho2.append((x, run))
    rho1 = []
    run = math.inf
    for x, y in reversed(order):
        run = min(run, y)
        rho1.append((x, run))
    rho1.reverse()
    return tuple(rho1), tuple(rho2)


def qi_verify(corpus, theta: float, kind: str = "D",
              slack: float = 1e-9) -> QiReport:
    """Check the sampling sandwich over a corpus of signal pairs and fit the
    empirical quasi-isometry constants.

    For the discrepancy norm the sandwich is
    ``diam(f-g) - 4 theta <= ||Phi f - Phi g||_D <= diam(f-g) + 2 theta``;
    for the Alexiewicz norm the two-sided norm equivalence folds in as
    ``diam/2 - 2 theta <= ||.||_A <= diam + 2 theta``.  The max-max-sum norm
    carries no such bound and reports violations = None.  The coarse
    surjectivity constant is certified as 0 by exact reconstruct/resample
    round trips on the image side.
    """
    if not corpus:
        raise ValueError("corpus must be nonempty")
    if not theta > 0.0:
        raise ValueError("theta must be positive")
    kind = canonical_kind(kind)
    normf = norm_by_kind(kind)
    dxs, dys = [], []
    failures = 0
    for f, g in corpus:
        eta_f = sod_sample(f, theta)
        eta_g = sod_sample(g, theta)
        dxs.append(diameter_norm(subtract(f, g)))
        dys.append(normf(difference(eta_f, eta_g)))
        for eta in (eta_f, eta_g):
            back = sod_sample(reconstruct(eta), theta)
            if back.times != eta.times or back.values != eta.values:
                failures += 1
    if kind == "D":
        violations = sum(
            1 for dx, dy in zip(dxs, dys)
            if dy < dx - 4.0 * theta - slack or dy > dx + 2.0 * theta + slack
        )
    elif kind == "A":
        violations = sum(
            1 for dx, dy in zip(dxs, dys)
            if dy < 0.5 * dx - 2.0 * theta - slack or dy > dx + 2.0 * theta + slack
        )
    else:
        violations = None

    def b_of(a):
        worst = 0.0
        for dx, dy in zip(dxs, dys):
            worst = max(worst, dy - a * dx, dx / a - dy)
        return worst

    grid = [1.0 + 0.01 * k for k in range(101)]
    bs = [(b_of(a), a) for a in grid]
    b_min = min(b for b, _ in bs)
    fitted_a = min(a for b, a in bs if b <= b_min + 1e-12)
    rho1, rho2 = _monotone_envelopes(dxs, dys)
    return QiReport(
        kind=kind,
        theta=theta,
        trials=len(corpus),
        violations=violations,
        fitted_A=fitted_a,
        fitted_B=b_of(fitted_a),
        B_at_A1=b_of(1.0),
        coarse_C=0.0 if failures == 0 else math.nan,
        reconstruction_failures=failures,
        per_trial=tuple(zip(dxs, dys)),
        rho1=rho1,
        rho2=rho2,
    )


# --- left-continuity probe ---------------------------------------------------

@dataclass(frozen=True)
class LeftContinuityReport:
    theta0: float
    reference_times: tuple[float, ...]
    steps: tuple[dict, ...]
    stabilized_at: int | None
    monotone: bool
    directions: tuple[str, ...]
    control_theta: float
    control_count: int
    control_times: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "theta0": self.theta0,
            "reference_times": list(self.reference_times),
            "steps": [dict(s) for s in self.steps],
            "stabilized_at": self.stabilized_at,
            "monotone": self.monotone,
            "directions": list(self.directions),
            "control_theta": self.control_theta,
            "control_count": self.control_count,
            "control_times": list(self.control_times),
        }


def left_continuity_probe(f: Signal, theta0: float,
                          n_steps: int = 12) -> LeftContinuityReport:
    """Sample at theta_n = theta0 * (1 - 2^-n) rising to theta0.

    The event count must stabilize at the theta0 count from some step on, and
    each event time coordinate must then converge monotonically to its theta0
    time: crossings reached on a rise approach from below (direction "up"),
    crossings after a direction reversal may approach from above ("down")
    since their target level rises with the threshold.  A count that never
    stabilizes within n_steps is reported (stabilized_at = None), not raised.
    The control run at a threshold slightly above theta0 exposes the
    right-discontinuity (event-count drop) when theta0 is critical for f.
    """
    if not theta0 > 0.0:
        raise ValueError("theta0 must be positive")
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    reference = sod_sample(f, theta0)
    ref_times = reference.times
    steps = []
    counts = []
    tail_times = []
    for n in range(1, n_steps + 1):
        th = theta0 * (1.0 - 2.0 ** (-n))
        eta = sod_sample(f, th)
        times = eta.times
        shared_ref = min(len(ref_times), len(times))
        gap = max((abs(ref_times[k] - times[k]) for k in range(shared_ref)),
                  default=0.0)
        steps.append({
            "n": n,
            "theta": th,
            "count": len(times),
            "max_gap": gap,
            "times": list(times),
        })
        counts.append(len(times))
    stabilized_at = None
    for n, _ in enumerate(counts, start=1):
        if all(c == len(ref_times) for c in counts[n - 1:]):
            stabilized_at = n
            break
    monotone = stabilized_at is not None
    directions = []
    if stabilized_at is not None:
        tail_times = [tuple(s["times"]) for s in steps[stabilized_at - 1:]]
        for k in range(len(ref_times)):
            seq = [t[k] for t in tail_times] + [ref_times[k]]
            nondec = all(a <= b + 1e-12 for a, b in zip(seq, seq[1:]))
            noninc = all(a >= b - 1e-12 for a, b in zip(seq, seq[1:]))
            if not (nondec or noninc):
                monotone = False
                directions.append("none")
            elif nondec and noninc:
                directions.append("flat")
            else:
                directions.append("up" if nondec else "down")
    control_theta = theta0 * (1.0 + 2.0 ** (-10))
    control = sod_sample(f, control_theta)
    return LeftContinuityReport(
        theta0=theta0,
        reference_times=ref_times,
        steps=tuple(steps),
        stabilized_at=stabilized_at,
        monotone=monotone,
        directions=tuple(directions),
        control_theta=control_theta,
        control_count=len(control),
        control_times=control.times,
    )


# --- norm certification -------------------------------------------------------

@dataclass(frozen=True)
class CertifyFamilies:
    """Generator configuration for the three equivalence conditions; sizes
    stay within the transcription-sweep guard."""

    alternating_counts: tuple = (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 128, 200)
    same_sign_counts: tuple = (1, 2, 3, 5, 8, 13, 21, 34, 50)
    mmsn_counts: tuple = (8, 16, 24, 40)
    random_sweep: tuple = ((101, 24), (202, 32), (303, 40))
    T: float = 1.0


@dataclass(frozen=True)
class CertificationReport:
    kind: str
    alt_bound: float
    alt_ok: bool
    alt_witness: dict
    same_sign_inf: float
    same_sign_ok: bool
    same_sign_witness: dict
    sweep_max_ratio: float
    sweep_growth: float
    sweep_ok: bool
    sweep_witness: dict
    sweep_table: tuple[dict, ...]
    verdict: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "alt_bound": self.alt_bound,
            "alt_ok": self.alt_ok,
            "alt_witness": dict(self.alt_witness),
            "same_sign_inf": self.same_sign_inf,
            "same_sign_ok": self.same_sign_ok,
            "same_sign_witness": dict(self.same_sign_witness),
            "sweep_max_ratio": self.sweep_max_ratio,
            "sweep_growth": self.sweep_growth,
            "sweep_ok": self.sweep_ok,
            "sweep_witness": dict(self.sweep_witness),
            "sweep_table": [dict(r) for r in self.sweep_table],
            "verdict": self.verdict,
        }


def _eta_payload(eta: EventSequence) -> dict:
    return {"T": eta.T, "events": [[t, v] for t, v in zip(eta.times, eta.values)]}


def positive_train(n: int, T: float = 1.0) -> EventSequence:
    return from_pairs(T, [((k + 1) * T / (n + 1), 1.0) for k in range(n)])


# Empirical pass bounds: the conditions demand finiteness (resp. a positive
# infimum, resp. an affine sweep bound); at desk scale a family value that
# neither exceeds the cap nor grows with family size counts as satisfied.
_ALT_CAP = 8.0
_SAME_SIGN_FLOOR = 0.05
_SWEEP_RATIO_CAP = 4.0
_GROWTH_CAP = 1.5


def certify_norm(kind: str, families: CertifyFamilies | None = None) -> CertificationReport:
    """Test a norm against the three discrepancy-equivalence conditions.

    (i) boundedness over alternating families, (ii) a positive infimum of
    norm-per-event over same-sign families, (iii) a stable transcription-sweep
    to norm ratio.  The verdict is EQUIVALENT only when all three hold; every
    reported witness re-evaluates to its recorded values.
    """
    kind = canonical_kind(kind)
    normf = norm_by_kind(kind)
    fam = families or CertifyFamilies()
    T = fam.T

    alt_rows = []
    for n in fam.alternating_counts:
        for start in (1, -1):
            eta = alternating_train(n, T, start)
            alt_rows.append((normf(eta), n, eta))
    alt_value, _, alt_eta = max(alt_rows, key=lambda r: r[0])
    small = min(v for v, n, _ in alt_rows if n == min(fam.alternating_counts))
    big = max(v for v, n, _ in alt_rows if n == max(fam.alternating_counts))
    alt_ok = alt_value <= _ALT_CAP and big <= _GROWTH_CAP * max(small, 1e-12)

    same_rows = []
    for n in fam.same_sign_counts:
        eta = positive_train(n, T)
        same_rows.append((normf(eta) / len(eta), n, eta))
    same_value, _, same_eta = min(same_rows, key=lambda r: r[0])
    same_ok = same_value >= _SAME_SIGN_FLOOR

    sweep_table = []
    sweep_rows = []
    for n in fam.mmsn_counts:
        eta = mmsn_train(n, T)
        nv = normf(eta)
        sw = transcription_sweep(eta, kind)
        sweep_rows.append((sw / nv, eta, "mmsn", n, sw, nv))
    for seed, n in fam.random_sweep:
        eta = random_unit_train(seed, n, T)
        nv = normf(eta)
        sw = transcription_sweep(eta, kind)
        sweep_rows.append((sw / nv, eta, "random", n, sw, nv))
    for ratio, _eta, family, n, sw, nv in sweep_rows:
        sweep_table.append({"family": family, "n": n, "sweep": sw,
                            "norm": nv, "ratio": ratio})
    max_ratio, sweep_eta, _, _, sweep_val, sweep_norm = max(
        sweep_rows, key=lambda r: r[0])
    mmsn_ratios = [(n, r) for r, _, famname, n, _, _ in sweep_rows if famname == "mmsn"]
    mmsn_ratios.sort()
    growth = mmsn_ratios[-1][1] / max(mmsn_ratios[0][1], 1e-12)
    sweep_ok = max_ratio <= _SWEEP_RATIO_CAP and growth <= _GROWTH_CAP

    verdict = "equivalent" if (alt_ok and same_ok and sweep_ok) else "not_equivalent"
    return CertificationReport(
        kind=kind,
        alt_bound=alt_value,
        alt_ok=alt_ok,
        alt_witness={"value": alt_value, **_eta_payload(alt_eta)},
        same_sign_inf=same_value,
        same_sign_ok=same_ok,
        same_sign_witness={"value": same_value, **_eta_payload(same_eta)},
        sweep_max_ratio=max_ratio,
        sweep_growth=growth,
        sweep_ok=sweep_ok,
        sweep_witness={"sweep": sweep_val, "norm": sweep_norm,
                       "ratio": max_ratio, **_eta_payload(sweep_eta)},
        sweep_table=tuple(sweep_table),
        verdict=verdict,
    )


# --- Schreiber conflation witness ---------------------------------------------

def schreiber_conflation_witness(n: int = 8, T: float = 1.0,
                                 params: SchreiberParams | None = None) -> dict:
    """The four-train construction: a half-up/half-down train against its
    negation and an alternating train against its negation both have
    similarity -1, hence equal Schreiber distance, although the discrepancy
    norms of the pair differences are n vs 2."""
    if params is None:
        params = SchreiberParams()
    eta1 = mmsn_train(n, T)
    eta2 = scale_events(eta1, -1.0)
    eta3 = alternating_train(n, T, start=-1)
    eta4 = scale_events(eta3, -1.0)
    s12 = schreiber_similarity(eta1, eta2, params)
    s34 = schreiber_similarity(eta3, eta4, params)
    return {
        "similarity_12": s12,
        "similarity_34": s34,
        "distance_12": schreiber_distance(eta1, eta2, params),
        "distance_34": schreiber_distance(eta3, eta4, params),
        "discrepancy_12": discrepancy_norm(difference(eta1, eta2)),
        "discrepancy_34": discrepancy_norm(difference(eta3, eta4)),
        "trains": [_eta_payload(e) for e in (eta1, eta2, eta3, eta4)],
    }
