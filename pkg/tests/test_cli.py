import json

import pytest
from click.testing import CliRunner

from sodlab.cli import main
from sodlab.events import read_events_csv, write_events_csv
from sodlab.trains import alternating_train


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    result = runner.invoke(main, list(args), catch_exceptions=False)
    return result


def test_generate_sample_below_threshold(runner, tmp_path):
    sig = tmp_path / "ramp.json"
    out = tmp_path / "events.csv"
    assert invoke(runner, "generate", "--kind", "ramp_plateau", "--T", "1.0",
                  "--out", str(sig)).exit_code == 0
    assert invoke(runner, "sample", "--input", str(sig), "--theta", "1.0",
                  "--scheme", "sod", "--out", str(out)).exit_code == 0
    assert out.read_text() == "t,v\n"


def test_sample_and_norm_pipeline(runner, tmp_path):
    sig = tmp_path / "walk.json"
    out = tmp_path / "events.csv"
    invoke(runner, "generate", "--kind", "random_walk", "--seed", "3",
           "--n-breaks", "10", "--amplitude", "0.5", "--out", str(sig))
    invoke(runner, "sample", "--input", str(sig), "--theta", "0.1",
           "--out", str(out))
    eta = read_events_csv(out)
    assert len(eta) > 0
    res = invoke(runner, "norm", "--events", str(out), "--kind", "D")
    assert res.exit_code == 0
    fast = float(res.output)
    res = invoke(runner, "norm", "--events", str(out), "--kind", "D", "--bruteforce")
    assert float(res.output) == fast


def test_norm_alternating_prints_one(runner, tmp_path):
    path = tmp_path / "alt.csv"
    write_events_csv(path, alternating_train(9))
    res = invoke(runner, "norm", "--events", str(path), "--kind", "D")
    assert res.output.strip() == "1.0"


def test_distance_command(runner, tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    write_events_csv(a, alternating_train(5, T=2.0))
    write_events_csv(b, alternating_train(5, T=2.0, start=-1))
    res = invoke(runner, "distance", "--a", str(a), "--b", str(b),
                 "--metric", "vr", "--alpha", "1.0")
    assert res.exit_code == 0 and float(res.output) > 0.0
    res = invoke(runner, "distance", "--a", str(a), "--b", str(b),
                 "--metric", "vp", "--s", "0.0")
    assert res.exit_code == 0 and float(res.output) == 2.0
    res = invoke(runner, "distance", "--a", str(a), "--b", str(b),
                 "--metric", "schreiber")
    assert res.exit_code == 0


def test_decompose_commands(runner, tmp_path):
    path = tmp_path / "eta.csv"
    write_events_csv(path, alternating_train(6, T=3.0))
    for what in ("mmd", "chain", "pi"):
        out = tmp_path / f"{what}.json"
        res = invoke(runner, "decompose", "--events", str(path),
                     "--what", what, "--out", str(out))
        assert res.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload
    mmd = json.loads((tmp_path / "mmd.json").read_text())
    assert mmd["r"] == 1.0 and len(mmd["intervals"]) == 6


def test_decompose_and_vp_normalize_pure_sampler_output(runner, tmp_path):
    sig = tmp_path / "walk.json"
    ev = tmp_path / "ev.csv"
    invoke(runner, "generate", "--kind", "random_walk", "--seed", "11",
           "--n-breaks", "12", "--amplitude", "0.5", "--out", str(sig))
    invoke(runner, "sample", "--input", str(sig), "--theta", "0.1",
           "--out", str(ev))
    out = tmp_path / "chain.json"
    res = invoke(runner, "decompose", "--events", str(ev), "--what", "chain",
                 "--out", str(out))
    assert res.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["theta"] == 0.1 and payload["r"] >= 1
    res = invoke(runner, "distance", "--a", str(ev), "--b", str(ev),
                 "--metric", "vp", "--s", "1.0")
    assert res.exit_code == 0 and float(res.output) == 0.0


def test_qi_check_success_and_determinism(runner, tmp_path):
    out1 = tmp_path / "qi1.json"
    out2 = tmp_path / "qi2.json"
    for out in (out1, out2):
        res = invoke(runner, "qi-check", "--trials", "40", "--theta", "0.1",
                     "--norm", "D", "--seed", "42", "--out", str(out),
                     "--csv", str(out) + ".csv")
        assert res.exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert (tmp_path / "qi1.json.csv").read_bytes() == \
        (tmp_path / "qi2.json.csv").read_bytes()
    report = json.loads(out1.read_text())
    assert report["violations"] == 0


def test_emdm_command(runner, tmp_path):
    sig = tmp_path / "fig2.json"
    from sodlab.analysis import local_max_signal
    from sodlab.signals import save_signal
    save_signal(sig, local_max_signal(0.25))
    out = tmp_path / "emdm.json"
    res = invoke(runner, "emdm", "--metric", "D", "--input", str(sig),
                 "--theta-grid", "0.25", "--out", str(out))
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    assert report["characterization"] == 1.0
    assert report["per_signal"][0]["lambda"] == 1.0


def test_certify_command(runner, tmp_path):
    out = tmp_path / "certify.json"
    res = invoke(runner, "certify", "--norm", "M", "--out", str(out))
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    assert report["verdict"] == "not_equivalent"


def test_probe_continuity_command(runner, tmp_path):
    sig = tmp_path / "fig2.json"
    from sodlab.analysis import local_max_signal
    from sodlab.signals import save_signal
    save_signal(sig, local_max_signal(0.25))
    out = tmp_path / "probe.json"
    res = invoke(runner, "probe-continuity", "--input", str(sig),
                 "--theta0", "0.25", "--steps", "8", "--out", str(out))
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    assert report["control_count"] < len(report["reference_times"])


def test_generate_from_events(runner, tmp_path):
    path = tmp_path / "eta.csv"
    write_events_csv(path, alternating_train(4, T=2.0))
    out = tmp_path / "rec.json"
    res = invoke(runner, "generate", "--kind", "from_events", "--events",
                 str(path), "--out", str(out))
    assert res.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["T"] == 2.0


def test_malformed_input_exits_one(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"T\": 1.0, \"segments\": [{\"t\": 0.0}]}")
    res = runner.invoke(main, ["sample", "--input", str(bad), "--theta", "0.1",
                               "--out", str(tmp_path / "x.csv")])
    assert res.exit_code == 1
    badcsv = tmp_path / "bad.csv"
    badcsv.write_text("t,v\n0.5,oops\n")
    res = runner.invoke(main, ["norm", "--events", str(badcsv), "--kind", "D"])
    assert res.exit_code == 1


def test_qi_check_violation_exits_two(runner, tmp_path, monkeypatch):
    from sodlab import analysis

    real = analysis.qi_verify

    def doctored(corpus, theta, kind="D", slack=1e-9):
        report = real(corpus, theta, kind, slack)
        return type(report)(**{**report.__dict__, "violations": 1})

    monkeypatch.setattr("sodlab.cli.analysis.qi_verify", doctored)
    res = runner.invoke(main, ["qi-check", "--trials", "5", "--theta", "0.1",
                               "--out", str(tmp_path / "qi.json")])
    assert res.exit_code == 2


def test_invalid_theta_exits_one(runner, tmp_path):
    sig = tmp_path / "ramp.json"
    invoke(runner, "generate", "--kind", "ramp_plateau", "--out", str(sig))
    res = runner.invoke(main, ["sample", "--input", str(sig), "--theta", "-1",
                               "--out", str(tmp_path / "x.csv")])
    assert res.exit_code == 1
