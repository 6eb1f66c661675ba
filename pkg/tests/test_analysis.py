import math

import pytest

from sodlab.analysis import (
    CertifyFamilies,
    comb_signal,
    certify_norm,
    emdm_characterize,
    emdm_sweep,
    left_continuity_probe,
    local_max_signal,
    make_metric,
    make_qi_corpus,
    qi_verify,
    schreiber_conflation_witness,
)
from sodlab.events import from_pairs
from sodlab.norms import norm_by_kind
from sodlab.signals import Segment, Signal, diameter_norm, subtract, zero
from sodlab.trains import alternating_train


def unit_ramp(T=1.0):
    return Signal(T, (Segment(0.0, 0.0, 1.0),))


class TestMetricFactory:
    def test_norm_metrics(self):
        m = make_metric("D")
        a = alternating_train(4)
        b = alternating_train(4, start=-1)
        assert m.is_norm and m.kind == "D"
        assert m(a, a) == 0.0
        assert m(a, b) == 2.0

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            make_metric("hausdorff")


class TestEmdmSweep:
    def test_monotone_ramp_is_zero_for_every_metric(self):
        f = unit_ramp()
        for kind in ("D", "A", "M"):
            res = emdm_sweep(f, kind, [0.3, 0.22])
            assert res.lambda_estimate == 0.0
            assert res.stabilized
        res = emdm_sweep(f, make_metric("vr", alpha=1.0), [0.3])
        assert res.lambda_estimate == 0.0

    def test_local_max_critical_threshold(self):
        f = local_max_signal(0.25)
        res = emdm_sweep(f, "D", [0.25])
        assert res.lambda_estimate == 1.0
        assert res.stabilized

    def test_local_max_van_rossum_positive_bounded(self):
        f = local_max_signal(0.25)
        res = emdm_sweep(f, make_metric("vr", alpha=1.0), [0.25])
        assert 0.0 < res.lambda_estimate <= f.T

    def test_comb_stays_on_unit_sphere(self):
        f = comb_signal(4, 0.25)
        for kind in ("D", "A"):
            res = emdm_sweep(f, kind, [0.25, 0.2])
            assert res.lambda_estimate <= 1.0 + 1e-9

    def test_rejects_bad_grids(self):
        with pytest.raises(ValueError):
            emdm_sweep(unit_ramp(), "D", [])
        with pytest.raises(ValueError):
            emdm_sweep(unit_ramp(), "D", [0.2], eps_ratios=(1e-3, 1e-2))


class TestEmdmCharacterize:
    def test_discrepancy_and_alexiewicz_are_exactly_one(self):
        assert emdm_characterize("D", n_max=200).value == 1.0
        assert emdm_characterize("A", n_max=200).value == 1.0

    def test_max_max_sum_is_one(self):
        assert emdm_characterize("M", n_max=100).value == 1.0

    def test_characterization_dominates_sweeps(self):
        char = emdm_characterize("D").value
        for f in (unit_ramp(), local_max_signal(0.25), comb_signal(3, 0.25)):
            res = emdm_sweep(f, "D", [0.25, 0.2])
            assert res.lambda_estimate <= char + 1e-9

    def test_van_rossum_growth_bounds(self):
        alpha = 1.0
        for T in (10.0, 20.0, 40.0):
            m = make_metric("vr", alpha=alpha)
            res = emdm_characterize(m, n_max=400, T=T, deltas=(0.5,))
            row = res.growth_table[0]
            delta = row["delta"]
            kappa = math.exp(-2 * alpha * delta) * (1 - math.exp(-alpha * delta)) ** 2
            assert kappa * T - 1e-9 <= row["energy"] <= T + 1e-9

    def test_van_rossum_growth_monotone_in_T(self):
        m = make_metric("vr", alpha=1.0)
        values = [emdm_characterize(m, n_max=400, T=T, deltas=(0.5,)).value
                  for T in (10.0, 20.0, 40.0)]
        assert values == sorted(values)

    def test_victor_purpura_growth_table(self):
        m = make_metric("vp", s=1.0)
        res = emdm_characterize(m, n_max=64, T=8.0)
        assert all(row["distance"] > 0.0 for row in res.growth_table)

    def test_schreiber_has_no_characterization(self):
        with pytest.raises(ValueError):
            emdm_characterize(make_metric("schreiber"))


class TestQiVerify:
    def test_identical_pair_trivial_bounds(self):
        f = unit_ramp()
        rep = qi_verify([(f, f)], 0.2)
        assert rep.violations == 0
        assert rep.B_at_A1 == 0.0

    def test_campaign_no_violations(self):
        corpus = make_qi_corpus(200, 7)
        for theta in (0.05, 0.2):
            rep = qi_verify(corpus, theta, "D")
            assert rep.violations == 0
            assert rep.B_at_A1 <= 4.0 * theta + 1e-9
            assert rep.reconstruction_failures == 0
            assert rep.coarse_C == 0.0

    def test_alexiewicz_folded_bounds(self):
        corpus = make_qi_corpus(200, 11)
        rep = qi_verify(corpus, 0.1, "A")
        assert rep.violations == 0

    def test_max_max_sum_reports_no_bound(self):
        corpus = make_qi_corpus(10, 3)
        rep = qi_verify(corpus, 0.1, "M")
        assert rep.violations is None

    def test_envelopes_are_monotone(self):
        corpus = make_qi_corpus(100, 5)
        rep = qi_verify(corpus, 0.1)
        assert all(a[1] <= b[1] + 1e-12 for a, b in zip(rep.rho1, rep.rho1[1:]))
        assert all(a[1] <= b[1] + 1e-12 for a, b in zip(rep.rho2, rep.rho2[1:]))

    def test_asymptotic_isometry_on_unit_diameter_pair(self):
        from sodlab.signals import pwl_from_points
        # dyadic knot values keep f - g an exact unit ramp
        knots = [k / 8.0 for k in range(9)]
        fvals = [0.0, 0.25, -0.125, 0.125, 0.375, 0.25, 0.5, 0.3125, 0.5625]
        gvals = [fv - k for fv, k in zip(fvals, knots)]
        f = pwl_from_points(1.0, knots, fvals)
        g = pwl_from_points(1.0, knots, gvals)
        assert diameter_norm(subtract(f, g)) == 1.0
        for theta in (0.2, 0.1, 0.05, 0.025, 0.0125):
            rep = qi_verify([(f, g)], theta, "D")
            (dx, dy), = rep.per_trial
            assert abs(dy - 1.0) <= 4.0 * theta + 1e-9

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            qi_verify([], 0.1)


class TestLeftContinuityProbe:
    def test_ramp_closed_form(self):
        f = unit_ramp()
        rep = left_continuity_probe(f, 0.3, 10)
        assert rep.stabilized_at is not None
        assert rep.monotone
        assert all(d in ("up", "flat") for d in rep.directions)
        last = rep.steps[-1]
        for k, t in enumerate(last["times"], start=1):
            assert t == pytest.approx(k * last["theta"], abs=1e-12)
        gaps = [s["max_gap"] for s in rep.steps[rep.stabilized_at - 1:]]
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-2

    def test_local_max_probe_and_control_drop(self):
        f = local_max_signal(0.25)
        rep = left_continuity_probe(f, 0.25, 12)
        assert rep.stabilized_at is not None
        assert rep.monotone
        assert rep.control_count < len(rep.reference_times)

    def test_zero_signal(self):
        rep = left_continuity_probe(zero(1.0), 0.2, 4)
        assert len(rep.reference_times) == 0
        assert all(s["count"] == 0 for s in rep.steps)
        assert rep.stabilized_at == 1


class TestCertify:
    def test_discrepancy_certifies_itself(self):
        rep = certify_norm("D")
        assert rep.verdict == "equivalent"
        assert rep.alt_bound == 1.0
        assert rep.same_sign_inf == 1.0
        assert rep.sweep_max_ratio <= 1.0 + 1e-12

    def test_alexiewicz_equivalent(self):
        rep = certify_norm("A")
        assert rep.verdict == "equivalent"
        assert rep.alt_bound == 1.0
        assert rep.same_sign_inf == 1.0
        assert rep.sweep_max_ratio <= 2.0 + 1e-12

    def test_max_max_sum_fails_sweep_only(self):
        rep = certify_norm("M")
        assert rep.verdict == "not_equivalent"
        assert rep.alt_ok and rep.same_sign_ok and not rep.sweep_ok
        assert rep.sweep_witness["norm"] == 1.0
        assert rep.sweep_witness["sweep"] >= 20.0

    def test_witnesses_reevaluate(self):
        for kind in ("D", "A", "M"):
            rep = certify_norm(kind)
            normf = norm_by_kind(kind)
            alt = from_pairs(rep.alt_witness["T"], rep.alt_witness["events"])
            assert normf(alt) == rep.alt_witness["value"]
            same = from_pairs(rep.same_sign_witness["T"],
                              rep.same_sign_witness["events"])
            assert normf(same) / len(same) == rep.same_sign_witness["value"]
            sweep = from_pairs(rep.sweep_witness["T"], rep.sweep_witness["events"])
            assert normf(sweep) == rep.sweep_witness["norm"]

    def test_small_families_config(self):
        fam = CertifyFamilies(alternating_counts=(1, 2, 8),
                             same_sign_counts=(1, 4),
                             mmsn_counts=(4, 8),
                             random_sweep=((1, 10),))
        rep = certify_norm("D", fam)
        assert rep.verdict == "equivalent"


def test_schreiber_witness_conflates_pairs():
    w = schreiber_conflation_witness(8)
    assert w["similarity_12"] == pytest.approx(-1.0, abs=1e-12)
    assert w["similarity_34"] == pytest.approx(-1.0, abs=1e-12)
    assert w["distance_12"] == pytest.approx(w["distance_34"], abs=1e-12)
    assert w["discrepancy_12"] == 8.0
    assert w["discrepancy_34"] == 2.0


def test_sweep_handles_horizon_boundary_threshold():
    # an event exactly at the horizon vanishes for every larger threshold:
    # a genuinely right-discontinuous configuration even for a monotone ramp
    res = emdm_sweep(unit_ramp(), "D", [0.25])
    assert res.lambda_estimate == 1.0
