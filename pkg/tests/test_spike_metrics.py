import math

import numpy as np
import pytest

from sodlab.events import difference, empty, from_pairs, scale_events, split_signs
from sodlab.spike_metrics import (
    SchreiberParams,
    VanRossumParams,
    VictorPurpuraParams,
    exp_response,
    schreiber_distance,
    schreiber_similarity,
    van_rossum,
    victor_purpura,
)
from sodlab.trains import (
    alternating_train,
    equidistant_alternating,
    mmsn_train,
    random_nonnegative_train,
    random_signed_train,
    random_unit_train,
)


def vr_quadrature(eta1, eta2, alpha, n_sub=2000):
    """Piecewise trapezoid oracle for the smoothed-train L2 distance."""
    diff = difference(eta1, eta2)
    knots = [0.0] + [t for t in diff.times if t > 0.0] + [diff.T]
    events = diff.pairs()
    total = 0.0
    for a, b in zip(knots, knots[1:]):
        if b <= a:
            continue
        ts = np.linspace(a, b, n_sub)
        vals = np.zeros_like(ts)
        for tk, vk in events:
            if tk <= a:
                if alpha > 0.0:
                    vals += vk * np.exp(-alpha * (ts - tk))
                else:
                    vals += vk
        total += np.trapezoid(vals * vals, ts)
    return math.sqrt(total)


class TestVanRossum:
    def test_identical_trains(self):
        eta = random_unit_train(4, 9)
        assert van_rossum(eta, eta, VanRossumParams(1.0)) == 0.0

    def test_single_event_closed_form(self):
        T, alpha, t1 = 2.0, 1.3, 0.4
        eta = from_pairs(T, [(t1, 1.0)])
        got = van_rossum(eta, empty(T), VanRossumParams(alpha))
        expect = math.sqrt((1.0 - math.exp(-2.0 * alpha * (T - t1))) / (2.0 * alpha))
        assert got == pytest.approx(expect, abs=1e-14)
        assert got == pytest.approx(vr_quadrature(eta, empty(T), alpha, 20001), abs=1e-8)

    def test_closed_form_matches_quadrature(self):
        for seed, alpha in ((1, 0.5), (2, 1.0), (3, 3.0)):
            a = random_unit_train(seed, 8, T=4.0)
            b = random_unit_train(seed + 100, 6, T=4.0)
            got = van_rossum(a, b, VanRossumParams(alpha))
            assert got == pytest.approx(vr_quadrature(a, b, alpha), rel=1e-6)

    def test_step_kernel_matches_quadrature(self):
        a = random_unit_train(9, 7, T=4.0)
        b = random_unit_train(19, 5, T=4.0)
        got = van_rossum(a, b, VanRossumParams(0.0))
        assert got == pytest.approx(vr_quadrature(a, b, 0.0), rel=1e-9)

    def test_symmetry(self):
        a = random_signed_train(5, 10)
        b = random_signed_train(6, 12)
        p = VanRossumParams(2.0)
        assert van_rossum(a, b, p) == van_rossum(b, a, p)

    def test_horizon_mismatch(self):
        with pytest.raises(ValueError):
            van_rossum(empty(1.0), empty(2.0), VanRossumParams(1.0))

    def test_alternating_floor(self):
        # |R| just before each event is at least e^{-a d}(1 - e^{-a d})
        T, n = 10.0, 40
        delta = T / n
        eta = equidistant_alternating(n, delta, T)
        for alpha in (0.5, 1.0, 2.0):
            floor = math.exp(-alpha * delta) * (1.0 - math.exp(-alpha * delta))
            probe = np.asarray(eta.times[1:]) - 1e-9
            vals = np.abs(exp_response(eta, alpha, probe))
            assert vals.min() >= floor - 1e-9

    def test_step_kernel_alternating_energy(self):
        # alpha = 0: |R| is 1 on every second gap, so the squared distance to
        # the zero train is about T/2 (the 1/2 constant of the step kernel)
        T, n = 10.0, 100
        eta = equidistant_alternating(n, T / n, T)
        d = van_rossum(eta, empty(T), VanRossumParams(0.0))
        assert d * d == pytest.approx(T / 2.0, abs=T / n)

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            VanRossumParams(-1.0)


class TestSchreiber:
    def test_self_similarity_is_one(self):
        eta = random_unit_train(8, 11)
        s = schreiber_similarity(eta, eta, SchreiberParams(alpha=2.0))
        assert s == pytest.approx(1.0, abs=1e-12)

    def test_negation_gives_minus_one(self):
        for params in (SchreiberParams(alpha=1.5),
                       SchreiberParams(kernel="gaussian", sigma=0.2)):
            eta = mmsn_train(8)
            s = schreiber_similarity(eta, scale_events(eta, -1.0), params)
            assert s == pytest.approx(-1.0, abs=1e-12)

    def test_amplitude_scale_invariance(self):
        a = random_unit_train(3, 7)
        b = random_unit_train(4, 9)
        p = SchreiberParams(alpha=1.0)
        s = schreiber_similarity(a, b, p)
        assert schreiber_similarity(scale_events(a, 3.0), scale_events(b, 0.5), p) \
            == pytest.approx(s, abs=1e-12)
        assert schreiber_similarity(scale_events(a, -2.0), b, p) \
            == pytest.approx(-s, abs=1e-12)

    def test_empty_train_rejected(self):
        with pytest.raises(ValueError):
            schreiber_similarity(empty(1.0), random_unit_train(1, 3), SchreiberParams())

    def test_distance_shapes(self):
        a = random_unit_train(5, 6)
        b = random_unit_train(6, 6)
        s = schreiber_similarity(a, b, SchreiberParams())
        assert schreiber_distance(a, b, SchreiberParams()) == pytest.approx(1.0 - s)
        assert schreiber_distance(a, b, SchreiberParams(h="arccos")) \
            == pytest.approx(math.acos(max(min(s, 1.0), -1.0)))


class TestVictorPurpura:
    def test_identical_trains(self):
        eta = random_signed_train(2, 12)
        assert victor_purpura(eta, eta, VictorPurpuraParams(1.0)) == 0.0

    def test_counting_at_zero_cost(self):
        three = from_pairs(1.0, [(0.1, 1.0), (0.4, 1.0), (0.8, 1.0)])
        one = from_pairs(1.0, [(0.5, 1.0)])
        assert victor_purpura(three, one, VictorPurpuraParams(0.0)) == 2.0

    def test_offset_pair_hand_dp(self):
        dt = 0.7
        a = from_pairs(2.0, [(0.3, 1.0)])
        b = from_pairs(2.0, [(0.3 + dt, 1.0)])
        for s in (0.5, 1.0, 4.0):
            got = victor_purpura(a, b, VictorPurpuraParams(s))
            assert abs(got - min(2.0, s * dt)) <= 1e-12

    def test_symmetry(self):
        p = VictorPurpuraParams(1.3)
        for seed in range(20):
            a = random_signed_train(seed, 8)
            b = random_signed_train(seed + 1000, 7)
            assert victor_purpura(a, b, p) == victor_purpura(b, a, p)

    def test_triangle_on_nonnegative_trains(self):
        p = VictorPurpuraParams(2.0)
        for seed in range(20):
            a = random_nonnegative_train(seed, 5)
            b = random_nonnegative_train(seed + 50, 7)
            c = random_nonnegative_train(seed + 100, 6)
            dab = victor_purpura(a, b, p)
            dbc = victor_purpura(b, c, p)
            dac = victor_purpura(a, c, p)
            assert dac <= dab + dbc + 1e-12

    def test_large_shift_cost_counts_non_coincident(self):
        a = from_pairs(1.0, [(0.1, 1.0), (0.3, 1.0), (0.6, 1.0)])
        b = from_pairs(1.0, [(0.3, 1.0), (0.6, 1.0), (0.9, 1.0), (0.95, 1.0)])
        got = victor_purpura(a, b, VictorPurpuraParams(1e9))
        assert got == 3.0 + 4.0 - 2.0 * 2.0

    def test_multiplicity_expansion(self):
        a = from_pairs(1.0, [(0.5, 2.0)])
        b = from_pairs(1.0, [(0.5, 1.0)])
        assert victor_purpura(a, b, VictorPurpuraParams(0.0)) == 1.0

    def test_separate_mode_matches_combined_on_nonnegative(self):
        p_c = VictorPurpuraParams(1.0)
        p_s = VictorPurpuraParams(1.0, "separate")
        for seed in range(20):
            a = random_nonnegative_train(seed, 6)
            b = random_nonnegative_train(seed + 7, 8)
            assert victor_purpura(a, b, p_c) == victor_purpura(a, b, p_s)

    def test_separate_mode_counting_on_signed(self):
        p = VictorPurpuraParams(0.0, "separate")
        for seed in range(50):
            a = random_unit_train(seed, 9)
            b = random_unit_train(seed + 3000, 6)
            pa, ma = split_signs(a)
            pb, mb = split_signs(b)
            expect = abs(len(pa) - len(pb)) + abs(len(ma) - len(mb))
            assert victor_purpura(a, b, p) == expect

    def test_fractional_amplitude_rejected(self):
        a = from_pairs(1.0, [(0.5, 0.3)])
        with pytest.raises(ValueError):
            victor_purpura(a, empty(1.0), VictorPurpuraParams(1.0))

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            VictorPurpuraParams(-0.5)
        with pytest.raises(ValueError):
            VictorPurpuraParams(1.0, "both")


def test_alternating_train_response_bounded():
    # alternating signs keep the smoothed train inside [-1, 1]
    eta = alternating_train(60, T=6.0)
    ts = np.linspace(0.0, 6.0, 4001)
    vals = exp_response(eta, 1.0, ts)
    assert np.all(np.abs(vals) <= 1.0 + 1e-12)
