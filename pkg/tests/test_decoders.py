import math
from itertools import product

import numpy as np
import pytest

from polarspec import (
    ChannelSpec,
    CodeConfig,
    RngStream,
    assemble_source,
    encode,
    sc_decode,
    scl_decode,
    transmit,
)
from polarspec.decoders import _check_update, _sc_batch


def random_config(rng, n, k_min=0):
    N = 1 << n
    K = int(rng.integers(k_min, N + 1))
    info = tuple(sorted(rng.choice(np.arange(1, N + 1), size=K, replace=False).tolist()))
    return CodeConfig(n, K, info)


def ml_score(codeword, llr):
    """Lower is more likely: log P(y|x) = const - sum x_i llr_i."""
    return float(np.dot(codeword.astype(np.float64), llr))


def exhaustive_ml_score(config, llr):
    best = math.inf
    for word in product([0, 1], repeat=config.K):
        cw = encode(assemble_source(np.array(word, dtype=np.uint8), config))
        best = min(best, ml_score(cw, llr))
    return best


class TestCheckUpdate:
    def test_matches_tanh_form(self):
        rng = np.random.default_rng(1)
        a = rng.normal(0, 3, 2000)
        b = rng.normal(0, 3, 2000)
        ref = 2 * np.arctanh(np.tanh(a / 2) * np.tanh(b / 2))
        assert np.allclose(_check_update(a, b, False), ref, atol=1e-12)

    def test_erasure_absorbing(self):
        # one erased input makes the XOR unknown
        b = np.array([5.0, -2.0, 0.0])
        assert np.array_equal(_check_update(np.zeros(3), b, False), np.zeros(3))

    def test_min_sum(self):
        out = _check_update(np.array([3.0, -3.0]), np.array([-1.0, -2.0]), True)
        assert out.tolist() == [-1.0, 2.0]

    def test_saturated_inputs_stable(self):
        out = _check_update(np.array([300.0]), np.array([-300.0]), False)
        assert np.isfinite(out).all()


class TestScDecode:
    def test_noiseless_recovery(self):
        rng = np.random.default_rng(0)
        for n in range(0, 7):
            for _ in range(25):
                cfg = random_config(rng, n)
                bits = rng.integers(0, 2, cfg.K).astype(np.uint8)
                x = encode(assemble_source(bits, cfg))
                res = sc_decode((1.0 - 2.0 * x) * 8.0, cfg)
                assert np.array_equal(res.info_bits, bits)
                assert np.array_equal(res.codeword_estimate, x)
                assert res.path_metric == 0.0

    def test_noiseless_recovery_n1024(self):
        rng = np.random.default_rng(4)
        cfg = random_config(rng, 10, k_min=1)
        bits = rng.integers(0, 2, cfg.K).astype(np.uint8)
        x = encode(assemble_source(bits, cfg))
        res = sc_decode((1.0 - 2.0 * x) * 8.0, cfg)
        assert np.array_equal(res.info_bits, bits)

    def test_hand_trace_n2(self):
        # llr (-4, +4): check node gives a negative llr -> u1 = 1;
        # then g = 4 + (1-2*1)*(-4) = +8 -> u2 = 0
        cfg = CodeConfig(1, 2, (1, 2))
        res = sc_decode(np.array([-4.0, 4.0]), cfg)
        assert res.info_bits.tolist() == [1, 0]
        assert res.codeword_estimate.tolist() == [1, 0]

    def test_hand_trace_is_ml(self):
        cfg = CodeConfig(1, 2, (1, 2))
        llr = np.array([-4.0, 4.0])
        res = sc_decode(llr, cfg)
        assert ml_score(res.codeword_estimate, llr) == exhaustive_ml_score(cfg, llr)

    def test_all_erased_tie_rule(self):
        cfg = CodeConfig(2, 3, (2, 3, 4))
        res = sc_decode(np.zeros(4), cfg)
        assert res.info_bits.tolist() == [0, 0, 0]
        assert res.metadata.get("all_erased") is True

    def test_codeword_reencodes(self):
        rng = np.random.default_rng(8)
        cfg = random_config(rng, 5, k_min=1)
        spec = ChannelSpec("AWGN", 0.8)
        for t in range(50):
            rs = RngStream(t, 0)
            bits = rs.generator.integers(0, 2, cfg.K).astype(np.uint8)
            x = encode(assemble_source(bits, cfg))
            res = sc_decode(transmit(x, spec, rs), cfg)
            u = assemble_source(res.info_bits, cfg)
            assert np.array_equal(res.codeword_estimate, encode(u))

    def test_llr_length_checked(self):
        with pytest.raises(ValueError):
            sc_decode(np.zeros(8), CodeConfig(2, 0, ()))

    def test_batch_agrees_with_single(self):
        rng = np.random.default_rng(12)
        cfg = random_config(rng, 4, k_min=1)
        spec = ChannelSpec("AWGN", 0.7)
        rs = RngStream(99)
        x = np.zeros((32, cfg.N), dtype=np.uint8)
        llr = transmit(x, spec, rs)
        u_hat, x_hat = _sc_batch(llr, cfg.frozen_mask())
        for b in range(32):
            res = sc_decode(llr[b], cfg)
            u = assemble_source(res.info_bits, cfg)
            assert np.array_equal(u_hat[b], u)
            assert np.array_equal(x_hat[b], encode(u))


class TestSclDecode:
    def test_list_of_one_equals_sc(self):
        rng = np.random.default_rng(2)
        spec = ChannelSpec("AWGN", 1.0)
        cfg = CodeConfig(4, 8, (4, 6, 7, 8, 10, 12, 14, 16))
        for t in range(1000):
            rs = RngStream(500 + t, 0)
            bits = rs.generator.integers(0, 2, cfg.K).astype(np.uint8)
            x = encode(assemble_source(bits, cfg))
            llr = transmit(x, spec, rs)
            assert np.array_equal(
                sc_decode(llr, cfg).info_bits, scl_decode(llr, cfg, 1).info_bits
            )

    def test_noiseless_any_list_size(self):
        rng = np.random.default_rng(6)
        for n in (2, 3, 4):
            cfg = random_config(rng, n, k_min=1)
            bits = rng.integers(0, 2, cfg.K).astype(np.uint8)
            x = encode(assemble_source(bits, cfg))
            llr = (1.0 - 2.0 * x) * 60.0
            for L in (1, 2, 8):
                res = scl_decode(llr, cfg, L)
                assert np.array_equal(res.info_bits, bits)
                assert res.path_metric == pytest.approx(0.0, abs=1e-9)

    def test_full_list_is_ml(self):
        rng = np.random.default_rng(7)
        spec = ChannelSpec("AWGN", 0.6)
        for t in range(500):
            n = int(rng.integers(2, 5))
            cfg = random_config(rng, n, k_min=1)
            rs = RngStream(2000 + t, 0)
            bits = rs.generator.integers(0, 2, cfg.K).astype(np.uint8)
            x = encode(assemble_source(bits, cfg))
            llr = transmit(x, spec, rs)
            res = scl_decode(llr, cfg, 1 << cfg.K)
            assert ml_score(res.codeword_estimate, llr) == pytest.approx(
                exhaustive_ml_score(cfg, llr), abs=1e-9
            )

    def test_list_recovers_where_sc_fails(self):
        # search deterministically for a noisy instance where plain SC errs
        # but a list of 8 still finds the (correct) ML word
        cfg = CodeConfig(3, 4, (4, 6, 7, 8))
        spec = ChannelSpec("AWGN", 0.5)
        found = False
        for t in range(2000):
            rs = RngStream(31337 + t, 0)
            bits = rs.generator.integers(0, 2, cfg.K).astype(np.uint8)
            x = encode(assemble_source(bits, cfg))
            llr = transmit(x, spec, rs)
            sc_ok = np.array_equal(sc_decode(llr, cfg).info_bits, bits)
            res = scl_decode(llr, cfg, 8)
            scl_ok = np.array_equal(res.info_bits, bits)
            if not sc_ok and scl_ok:
                assert ml_score(res.codeword_estimate, llr) == pytest.approx(
                    exhaustive_ml_score(cfg, llr), abs=1e-9
                )
                found = True
                break
        assert found

    def test_larger_list_never_less_likely(self):
        rng = np.random.default_rng(9)
        spec = ChannelSpec("AWGN", 0.7)
        cfg = CodeConfig(4, 8, (4, 6, 7, 8, 10, 12, 14, 16))
        for t in range(200):
            rs = RngStream(4000 + t, 0)
            x = np.zeros(cfg.N, dtype=np.uint8)
            llr = transmit(x, spec, rs)
            s2 = ml_score(scl_decode(llr, cfg, 2).codeword_estimate, llr)
            s8 = ml_score(scl_decode(llr, cfg, 8).codeword_estimate, llr)
            assert s8 <= s2 + 1e-9

    def test_approx_metric_mode(self):
        # the hard-decision metric is the sum of |llr| over sign disagreements
        cfg = CodeConfig(1, 2, (1, 2))
        res = scl_decode(np.array([-4.0, 4.0]), cfg, 4, exact_pm=False)
        assert res.path_metric == pytest.approx(0.0)

    def test_rejects_bad_list_size(self):
        with pytest.raises(ValueError):
            scl_decode(np.zeros(2), CodeConfig(1, 0, ()), 0)

    def test_deterministic(self):
        cfg = CodeConfig(3, 4, (4, 6, 7, 8))
        spec = ChannelSpec("AWGN", 0.8)
        llr = transmit(np.zeros(8, dtype=np.uint8), spec, RngStream(55))
        a = scl_decode(llr, cfg, 4)
        b = scl_decode(llr, cfg, 4)
        assert np.array_equal(a.info_bits, b.info_bits)
        assert a.path_metric == b.path_metric
