"""Command-line front end: sampling, norms, distances, decompositions, and
the analysis subcommands.  All outputs are written atomically and are
byte-identical for identical configurations and seeds."""

from __future__ import annotations

import json
import sys

import click

from . import analysis, events, norms, sampler, signals, structure
from ._util import write_text_atomic
from .spike_metrics import SchreiberParams, VanRossumParams, VictorPurpuraParams

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ASSERTION = 2


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INVALID)


def _write_json(path, payload) -> None:
    write_text_atomic(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_csv(path, header, rows) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(repr(c) if isinstance(c, float) else str(c) for c in row)
                 for row in rows)
    write_text_atomic(path, "\n".join(lines) + "\n")


def _csv_path(out_path) -> str:
    return f"{out_path}.csv" if not str(out_path).endswith(".json") \
        else f"{str(out_path)[:-5]}.csv"


def _load_events(path, horizon):
    try:
        return events.read_events_csv(path, horizon)
    except (OSError, ValueError) as exc:
        _fail(str(exc))


def _load_signal(path):
    try:
        return signals.load_signal(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        _fail(f"{path}: {exc}")


@click.group()
@click.version_option(package_name="sodlab")
def main():
    """Threshold-based sampling on piecewise-polynomial signals and the
    event-sequence analysis toolkit."""


@main.command()
@click.option("--kind", required=True,
              type=click.Choice(["ramp_plateau", "sine_pwl", "random_walk", "from_events"]))
@click.option("--T", "horizon", type=float, default=1.0, show_default=True)
@click.option("--resolution", type=int, default=64, show_default=True,
              help="Knots per period for sine_pwl.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--n-breaks", type=int, default=12, show_default=True)
@click.option("--amplitude", type=float, default=0.4, show_default=True)
@click.option("--events", "events_path", type=click.Path(exists=True),
              help="Event CSV for kind=from_events.")
@click.option("--horizon", "events_horizon", type=float, default=None,
              help="Horizon override when reading the event CSV.")
@click.option("--out", required=True, type=click.Path())
def generate(kind, horizon, resolution, seed, n_breaks, amplitude,
             events_path, events_horizon, out):
    """Write a generated signal as JSON."""
    try:
        if kind == "from_events":
            if not events_path:
                _fail("kind=from_events needs --events")
            eta = _load_events(events_path, events_horizon)
            sig = sampler.reconstruct(eta)
        else:
            sig = signals.generate(kind, horizon, resolution=resolution,
                                   seed=seed, n_breaks=n_breaks,
                                   amplitude=amplitude)
    except ValueError as exc:
        _fail(str(exc))
    signals.save_signal(out, sig)
    click.echo(f"wrote {out}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--theta", required=True, type=float)
@click.option("--scheme", type=click.Choice(["sod", "lc", "if"]), default="sod",
              show_default=True)
@click.option("--out", required=True, type=click.Path())
def sample(input_path, theta, scheme, out):
    """Sample a signal; writes an event CSV plus a horizon sidecar."""
    sig = _load_signal(input_path)
    try:
        fn = {"sod": sampler.sod_sample, "lc": sampler.lc_sample,
              "if": sampler.if_sample}[scheme]
        eta = fn(sig, theta)
    except ValueError as exc:
        _fail(str(exc))
    events.write_events_csv(out, eta)
    click.echo(f"wrote {out} ({len(eta)} events)")


@main.command()
@click.option("--events", "events_path", required=True, type=click.Path(exists=True))
@click.option("--kind", required=True, type=click.Choice(["D", "A", "M"], case_sensitive=False))
@click.option("--bruteforce", is_flag=True, default=False)
@click.option("--horizon", type=float, default=None)
def norm(events_path, kind, bruteforce, horizon):
    """Print a norm value of an event sequence."""
    eta = _load_events(events_path, horizon)
    try:
        if bruteforce:
            if norms.canonical_kind(kind) != "D":
                _fail("--bruteforce applies to the discrepancy norm only")
            value = norms.discrepancy_bruteforce(eta)
        else:
            value = norms.norm_by_kind(kind)(eta)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(repr(value))


@main.command()
@click.option("--a", "path_a", required=True, type=click.Path(exists=True))
@click.option("--b", "path_b", required=True, type=click.Path(exists=True))
@click.option("--metric", required=True, type=click.Choice(["vr", "schreiber", "vp"]))
@click.option("--alpha", type=float, default=1.0, show_default=True)
@click.option("--s", "--s-cost", "s_cost", type=float, default=1.0,
              show_default=True, help="Victor-Purpura shift rate.")
@click.option("--vp-mode", type=click.Choice(["combined", "separate"]),
              default="combined", show_default=True)
@click.option("--kernel", type=click.Choice(["causal_exponential", "gaussian"]),
              default="causal_exponential", show_default=True)
@click.option("--sigma", type=float, default=1.0, show_default=True)
@click.option("--h", "h_shape", type=click.Choice(["one_minus_s", "arccos"]),
              default="one_minus_s", show_default=True)
@click.option("--horizon", type=float, default=None)
def distance(path_a, path_b, metric, alpha, s_cost, vp_mode, kernel, sigma,
             h_shape, horizon):
    """Print a spike-train distance between two event CSVs."""
    eta1 = _load_events(path_a, horizon)
    eta2 = _load_events(path_b, horizon if horizon is not None else eta1.T)
    try:
        if metric == "vr":
            from .spike_metrics import van_rossum
            value = van_rossum(eta1, eta2, VanRossumParams(alpha))
        elif metric == "vp":
            from .spike_metrics import victor_purpura
            # the edit distance counts unit spikes: map a theta-pure pair
            # with one shared magnitude onto unit amplitudes
            u1, m1 = _unit_normalized(eta1)
            u2, m2 = _unit_normalized(eta2)
            if m1 is not None and m2 is not None and m1 != m2:
                _fail(f"theta-pure trains with different magnitudes "
                      f"({m1!r} vs {m2!r}); normalize them first")
            value = victor_purpura(u1, u2, VictorPurpuraParams(s_cost, vp_mode))
        else:
            from .spike_metrics import schreiber_distance
            value = schreiber_distance(
                eta1, eta2,
                SchreiberParams(kernel=kernel, alpha=alpha, sigma=sigma, h=h_shape))
    except ValueError as exc:
        _fail(str(exc))
    click.echo(repr(value))


def _unit_normalized(eta):
    """Scale a theta-pure sequence to unit amplitudes; returns (eta, theta)."""
    if not eta.times:
        return eta, None
    mag = abs(eta.values[0])
    if mag != 1.0 and eta.is_pure():
        return events.scale_events(eta, 1.0 / mag), mag
    return eta, None


@main.command()
@click.option("--events", "events_path", required=True, type=click.Path(exists=True))
@click.option("--what", required=True, type=click.Choice(["mmd", "chain", "pi"]))
@click.option("--horizon", type=float, default=None)
@click.option("--out", required=True, type=click.Path())
def decompose(events_path, what, horizon, out):
    """Write the MMD / chain / sign-purification decomposition as JSON.

    Chain and sign-purification run on unit amplitudes; a theta-pure input is
    normalized by 1/theta first and the theta recorded in the payload.
    """
    eta = _load_events(events_path, horizon)
    theta = None
    if what in ("chain", "pi"):
        eta, theta = _unit_normalized(eta)
    try:
        if what == "mmd":
            dec = structure.mmd_intervals(eta)
            payload = {
                "r": dec.r,
                "intervals": [list(iv) for iv in dec.intervals],
                "partial_sums": list(dec.partial_sums),
            }
        elif what == "chain":
            chain = structure.chain_decompose(eta)
            payload = {
                "r": chain.r,
                "grid": list(chain.stages[0].grid),
                "stages": [list(stage.values) for stage in chain.stages],
            }
        else:
            dense = structure.pi_map(eta)
            payload = {"grid": list(dense.grid), "values": list(dense.values)}
        if theta is not None:
            payload["theta"] = theta
    except ValueError as exc:
        _fail(str(exc))
    _write_json(out, payload)
    click.echo(f"wrote {out}")


@main.command()
@click.option("--metric", required=True,
              type=click.Choice(["D", "A", "M", "vr"], case_sensitive=False))
@click.option("--alpha", type=float, default=1.0, show_default=True)
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="Optional signal for the per-signal sweep.")
@click.option("--theta-grid", default="0.2,0.25,0.3", show_default=True)
@click.option("--n-max", type=int, default=200, show_default=True)
@click.option("--T", "horizon", type=float, default=1.0, show_default=True)
@click.option("--out", required=True, type=click.Path())
@click.option("--csv", "csv_path", type=click.Path(), default=None)
def emdm(metric, alpha, input_path, theta_grid, n_max, horizon, out, csv_path):
    """Threshold-discontinuity report: characterization plus optional sweep."""
    try:
        m = analysis.make_metric(metric, alpha=alpha)
        thetas = tuple(float(x) for x in theta_grid.split(","))
        char = analysis.emdm_characterize(m, n_max=n_max, T=horizon)
        per_signal = []
        if input_path:
            sig = _load_signal(input_path)
            sweep = analysis.emdm_sweep(sig, m, thetas)
            per_signal.append({
                "signal": str(input_path),
                "lambda": sweep.lambda_estimate,
                "theta_at_max": sweep.theta_at_max,
                "stabilized": sweep.stabilized,
            })
        report = analysis.EmdmReport(
            metric=m.kind,
            theta_grid=thetas,
            eps_ratios=(1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
            per_signal=tuple(per_signal),
            characterization=char.value,
            growth_table=char.growth_table,
        )
    except ValueError as exc:
        _fail(str(exc))
    _write_json(out, report.to_dict())
    rows = [("characterization", "", report.characterization)]
    rows.extend(("lambda", row["signal"], row["lambda"]) for row in per_signal)
    if char.growth_table:
        rows.extend(("growth", f"n={r['n']};T={r['T']}", r["distance"])
                    for r in char.growth_table)
    _write_csv(csv_path or _csv_path(out), ("row", "label", "value"), rows)
    click.echo(f"wrote {out}")


@main.command(name="qi-check")
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--theta", type=float, required=True)
@click.option("--norm", "kind", type=click.Choice(["D", "A"], case_sensitive=False),
              default="D", show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--T", "horizon", type=float, default=1.0, show_default=True)
@click.option("--n-breaks", type=int, default=12, show_default=True)
@click.option("--amplitude", type=float, default=0.4, show_default=True)
@click.option("--out", required=True, type=click.Path())
@click.option("--csv", "csv_path", type=click.Path(), default=None)
def qi_check(trials, theta, kind, seed, horizon, n_breaks, amplitude, out, csv_path):
    """Quasi-isometry sandwich campaign; exits 2 if any violation is found."""
    try:
        corpus = analysis.make_qi_corpus(trials, seed, horizon, n_breaks, amplitude)
        report = analysis.qi_verify(corpus, theta, kind)
    except ValueError as exc:
        _fail(str(exc))
    _write_json(out, report.to_dict())
    _write_csv(csv_path or _csv_path(out), ("trial", "d_input", "d_output"),
               [(i, dx, dy) for i, (dx, dy) in enumerate(report.per_trial)])
    click.echo(f"wrote {out} (violations={report.violations})")
    if report.violations:
        click.echo("sandwich bound violated", err=True)
        sys.exit(EXIT_ASSERTION)


@main.command()
@click.option("--norm", "kind", required=True,
              type=click.Choice(["D", "A", "M"], case_sensitive=False))
@click.option("--out", required=True, type=click.Path())
@click.option("--csv", "csv_path", type=click.Path(), default=None)
def certify(kind, out, csv_path):
    """Certify a norm against the discrepancy-equivalence conditions."""
    try:
        report = analysis.certify_norm(kind)
    except ValueError as exc:
        _fail(str(exc))
    _write_json(out, report.to_dict())
    _write_csv(csv_path or _csv_path(out),
               ("family", "n", "sweep", "norm", "ratio"),
               [(r["family"], r["n"], r["sweep"], r["norm"], r["ratio"])
                for r in report.sweep_table])
    click.echo(f"wrote {out} (verdict={report.verdict})")


@main.command(name="probe-continuity")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--theta0", required=True, type=float)
@click.option("--steps", type=int, default=12, show_default=True)
@click.option("--out", required=True, type=click.Path())
@click.option("--csv", "csv_path", type=click.Path(), default=None)
def probe_continuity(input_path, theta0, steps, out, csv_path):
    """Left-continuity probe with a control run from above."""
    sig = _load_signal(input_path)
    try:
        report = analysis.left_continuity_probe(sig, theta0, steps)
    except ValueError as exc:
        _fail(str(exc))
    _write_json(out, report.to_dict())
    _write_csv(csv_path or _csv_path(out), ("n", "theta", "count", "max_gap"),
               [(s["n"], s["theta"], s["count"], s["max_gap"])
                for s in report.steps])
    click.echo(f"wrote {out} (stabilized_at={report.stabilized_at})")


if __name__ == "__main__":
    main()
