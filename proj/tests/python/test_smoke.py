import math

import pytest

import tbsample as tbs


def make_constant(value=1.0, n=300, dt=0.01):
    return tbs.make_signal(0.0, dt, [value] * n)


def test_constant_signal_mod_encoding():
    f = make_constant()
    cfg = tbs.EncoderConfig()
    cfg.theta = 1.0
    s = tbs.if_encode(f, cfg)
    assert [sp.time for sp in s.spikes] == pytest.approx([1.0, 2.0, 3.0])
    assert [sp.amplitude for sp in s.spikes] == pytest.approx([1.0, 1.0, 1.0])


def test_sod_matches_if_mod():
    f = tbs.make_signal(0.0, 0.01, [math.sin(0.07 * i) * 3 for i in range(200)])
    cfg = tbs.EncoderConfig()
    cfg.theta = 0.5
    assert tbs.trains_equal(tbs.sod_of_integral(f, 0.5), tbs.if_encode(f, cfg))


def test_quantization_bound():
    f = tbs.make_signal(0.0, 0.01, [math.cos(0.05 * i) * 4 for i in range(250)],
                        [tbs.Impulse(1.0, 0.7)])
    check = tbs.check_quantization_bound(f, 0.5)
    assert check.holds
    assert check.distance < 0.5


def test_reconstruction_bound():
    g = tbs.make_signal(0.0, 0.01, [math.sin(0.11 * i) * 2 for i in range(200)])
    s = tbs.sod_encode(g, 0.25)
    x = tbs.sod_step_reconstruct(s, g.t_end, g.t_start)
    assert tbs.sup_distance(g, x) < 0.25


def test_impulse_splits_under_sub_reset():
    f = tbs.make_signal(0.0, 0.01, [0.0] * 300, [tbs.Impulse(1.0, 2.5)])
    cfg = tbs.EncoderConfig()
    cfg.theta = 1.0
    cfg.reset = tbs.ResetMode.Sub
    s = tbs.if_encode(f, cfg)
    assert [sp.amplitude for sp in s.spikes] == pytest.approx([1.0, 1.0])
    assert s.spikes[0].time == pytest.approx(1.0)
    assert s.spikes[1].time == pytest.approx(1.01)


def test_norm_quasi_isometry():
    f = tbs.make_signal(0.0, 0.01, [math.sin(0.09 * i) * 3 for i in range(150)])
    g = tbs.make_signal(0.0, 0.01, [math.cos(0.04 * i) * 3 for i in range(150)])
    qc = tbs.check_quasi_isometry(f, g, 0.5)
    assert qc.holds
