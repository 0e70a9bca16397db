from dataclasses import replace

import numpy as np
import pytest

from vlcpolar import channel, metrics, sim
from vlcpolar.polar import construct_code
from vlcpolar.scrambler import ScramblerConfig
from vlcpolar.sim import ENCODERS, QUANTIZERS, SimConfig

import oracles

BASE = SimConfig()


def _variant(encoder, scrambled, quantizer="soft3"):
    return replace(BASE, encoder=encoder, quantizer=quantizer,
                   scrambler=ScramblerConfig() if scrambled else None)


def test_zero_payload_without_scrambler():
    cw = sim.tx_pipeline(np.zeros(158, dtype=np.uint8), _variant("nonsystematic", False))
    assert cw.shape == (256,) and not cw.any()


def test_zero_payload_with_scrambler_is_encoded_keystream():
    ks = oracles.lfsr_bits(15, (15, 14), [1] * 15, 158)
    expected = oracles.gf2_encode(BASE.code.info_set, 256, ks)
    cw = sim.tx_pipeline(np.zeros(158, dtype=np.uint8), _variant("nonsystematic", True))
    assert cw.tolist() == expected.tolist()


@pytest.mark.parametrize("quantizer", QUANTIZERS)
@pytest.mark.parametrize("scrambled", [False, True])
@pytest.mark.parametrize("encoder", ENCODERS)
def test_noiseless_round_trip(encoder, scrambled, quantizer):
    cfg = _variant(encoder, scrambled, quantizer)
    payload = np.random.default_rng(0).integers(0, 2, (50, 158), dtype=np.uint8)
    samples = channel.ook_modulate(sim.tx_pipeline(payload, cfg))
    assert np.array_equal(sim.rx_pipeline(samples, cfg), payload)


@pytest.mark.parametrize("encoder", ENCODERS)
def test_single_saturated_flip_is_corrected(encoder):
    cfg = _variant(encoder, True)
    payload = np.random.default_rng(12).integers(0, 2, 158, dtype=np.uint8)
    clean = channel.ook_modulate(sim.tx_pipeline(payload, cfg))
    assert sim.llrs_from_samples(-1.5 * clean, cfg).tolist() == [
        {-1.1943: 1.2017, 1.2017: -1.1943}[v] for v in sim.llrs_from_samples(clean, cfg).tolist()]
    for pos in range(256):
        hit = clean.copy()
        hit[pos] = -1.5 * hit[pos]  # region 0 <-> region 7
        assert np.array_equal(sim.rx_pipeline(hit, cfg), payload), pos


def test_physical_levels_round_trip():
    cfg = replace(BASE, mu0=0.0, mu1=3.3)
    payload = np.random.default_rng(3).integers(0, 2, (20, 158), dtype=np.uint8)
    samples = channel.ook_modulate(sim.tx_pipeline(payload, cfg), channel.ChannelParams(0.0, 3.3))
    assert np.array_equal(sim.rx_pipeline(samples, cfg), payload)


def test_length_errors():
    with pytest.raises(ValueError):
        sim.tx_pipeline(np.zeros(157, dtype=np.uint8), BASE)
    with pytest.raises(ValueError):
        sim.rx_pipeline(np.zeros(255), BASE)


@pytest.mark.parametrize("kwargs", [dict(encoder="turbo"), dict(quantizer="2bit"), dict(p_one=1.5),
                                    dict(min_frame_errors=0), dict(mu0=1.0, mu1=0.0),
                                    dict(thresholds=(0, 1, 2)), dict(kernel="bp")])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SimConfig(**kwargs)


def test_biased_payloads_follow_bias_and_are_per_frame():
    bits = sim.biased_payloads(5, 0, 2000, 158, 0.9)
    assert abs(bits.mean() - 0.9) < 0.01
    assert np.array_equal(sim.biased_payloads(5, 17, 3, 158, 0.9), bits[17:20])


SMALL = replace(BASE, code=construct_code(64, 32), batch_size=50, max_frames=400, min_frame_errors=30)


def test_sweep_limits():
    stats = sim.run_ber_sweep(replace(SMALL, ebn0_points=(-20.0, float("inf"))))
    assert stats[0].fer > 0.95 and stats[0].frames == 50
    assert stats[1].ber == 0 and stats[1].fer == 0 and stats[1].frames == 400


def test_stop_rule_at_chunk_boundary():
    (stats,) = sim.run_ber_sweep(replace(SMALL, ebn0_points=(2.0,)))
    assert stats.frames % SMALL.batch_size == 0
    assert stats.frame_errors >= SMALL.min_frame_errors or stats.frames == SMALL.max_frames


def test_sweep_independent_of_worker_count():
    cfg = replace(SMALL, ebn0_points=(1.0, 3.0))
    assert sim.run_ber_sweep(cfg) == sim.run_ber_sweep(replace(cfg, workers=3))


def test_chunks_are_additive():
    cfg = replace(SMALL, quantizer="ideal")
    whole = sim.simulate_chunk(cfg, 2.0, 0, 120)
    parts = sim.simulate_chunk(cfg, 2.0, 0, 70) + sim.simulate_chunk(cfg, 2.0, 70, 50)
    assert whole == parts


def test_ber_monotone_in_ebn0():
    cfg = replace(BASE, ebn0_points=(1.0, 2.0, 3.0, 4.0), batch_size=200, max_frames=2000, min_frame_errors=60)
    stats = sim.run_ber_sweep(cfg)
    for lo, hi in zip(stats, stats[1:]):
        se = np.sqrt(lo.ber * (1 - lo.ber) / (lo.frames * lo.K))
        assert hi.ber <= lo.ber + se


def test_ber_csv_schema():
    text = sim.ber_csv([metrics.SimStats(2.5, 158, 10, 3, 1)])
    assert text.splitlines() == ["ebn0_db,frames,bit_errors,frame_errors,ber,fer",
                                 "2.5,10,3,1,1.898734e-03,1.000000e-01"]


def test_distribution_variants_share_payloads():
    cfg = replace(BASE, frames=300, p_one=0.9)
    sweeps = sim.analyze_distribution(cfg)
    assert list(sweeps) == ["nspe-plain", "nspe-scrambled", "spe-plain", "spe-scrambled"]
    payload = sim.biased_payloads(cfg.seed, 0, 300, 158, 0.9)
    spe = sim.tx_pipeline(payload, _variant("systematic", False))
    assert np.allclose(sweeps["spe-plain"].fractions, spe.mean(axis=1))
    csv = sim.distribution_csv(sweeps).splitlines()
    assert csv[0] == "variant,frame_index,ones_fraction" and len(csv) == 1 + 4 * 300


def test_runlength_grid_and_csv():
    rows = sim.analyze_runlength(replace(BASE, frames=200))
    assert len(rows) == 22
    for enc in ENCODERS:
        assert [r.p_zero for r in rows if r.encoder == enc] == list(sim.P_ZERO_GRID)
    # all-zero payloads: the plain codeword is all zeros
    assert all(r.max_run_plain == 256 for r in rows if r.p_zero == 1.0)
    text = sim.runlength_csv(rows).splitlines()
    assert text[0] == "encoder,p_zero,max_run_plain,max_run_scrambled,gain,f_min_hz"
    assert len(text) == 23
