"""End-to-end beacon link pipelines and Monte-Carlo experiments.

Transmit: scramble -> polar encode -> OOK.  Receive: LLR stage -> SC decode ->
descramble.  Every frame draws its payload and its noise from substreams keyed
by ``(seed, frame_index)``, and BER sweeps merge fixed-size chunks in frame
order, so the emitted numbers do not depend on the worker count.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import channel, metrics, polar, softfilter
from .channel import ChannelParams, substream
from .scrambler import ScramblerConfig, descramble, scramble

ENCODERS = ("nonsystematic", "systematic")
QUANTIZERS = ("hard", "soft3", "ideal")


def _default_code():
    return polar.construct_code(256, 158)


@dataclass(frozen=True)
class SimConfig:
    code: polar.PolarCode = field(default_factory=_default_code)
    encoder: str = "nonsystematic"
    scrambler: ScramblerConfig = field(default_factory=ScramblerConfig)  # None disables
    quantizer: str = "soft3"
    thresholds: tuple = None  # overrides the default soft3 thresholds
    kernel: str = "minsum"
    mu0: float = -1.0
    mu1: float = 1.0
    ebn0_points: tuple = (0.0, 1.0, 2.0, 3.0, 4.0)
    min_frame_errors: int = 100
    max_frames: int = 10 ** 6
    batch_size: int = 1000
    workers: int = 1
    seed: int = 0
    p_one: float = 0.5
    frames: int = 10000

    def __post_init__(self):
        if self.encoder not in ENCODERS:
            raise ValueError(f"encoder must be one of {ENCODERS}")
        if self.quantizer not in QUANTIZERS:
            raise ValueError(f"quantizer must be one of {QUANTIZERS}")
        if self.kernel not in polar.KERNELS:
            raise ValueError(f"kernel must be one of {tuple(polar.KERNELS)}")
        if not 0 <= self.p_one <= 1:
            raise ValueError("p_one must lie in [0, 1]")
        if min(self.min_frame_errors, self.max_frames, self.batch_size, self.workers, self.frames) < 1:
            raise ValueError("stop-rule counts, batch size, workers and frames must be positive")
        if not self.mu1 > self.mu0:
            raise ValueError("mu1 must be greater than mu0")
        object.__setattr__(self, "ebn0_points", tuple(float(e) for e in self.ebn0_points))
        if self.thresholds is not None:
            object.__setattr__(self, "thresholds", tuple(float(t) for t in self.thresholds))
        self.quantizer_config  # validates thresholds

    @property
    def systematic(self):
        return self.encoder == "systematic"

    @property
    def quantizer_config(self):
        if self.thresholds is None:
            return softfilter.default_quantizer(self.mu0, self.mu1)
        return softfilter.QuantizerConfig(self.thresholds)

    def sigma(self, ebn0_db):
        """Physical noise std for the configured OOK levels."""
        return channel.sigma_from_ebn0(ebn0_db, self.code.rate) * (self.mu1 - self.mu0) / 2


def encode(payload, config):
    if config.systematic:
        return polar.encode_systematic(config.code, payload)
    return polar.encode_nonsystematic(config.code, payload)


def tx_pipeline(payload, config):
    """Payload (K bits, or a batch) to the N-bit transmitted codeword."""
    payload = np.asarray(payload, dtype=np.uint8)
    if payload.shape[-1] != config.code.K:
        raise ValueError(f"payload has {payload.shape[-1]} bits, code expects {config.code.K}")
    if config.scrambler is not None:
        payload = scramble(payload, config.scrambler)
    return encode(payload, config)


def llrs_from_samples(samples, config, sigma=0.0):
    samples = np.asarray(samples, dtype=float)
    if config.quantizer == "hard":
        return softfilter.hard_llr(samples, config.mu0, config.mu1)
    if config.quantizer == "soft3":
        return softfilter.soft3_llr(samples, config.quantizer_config)
    # noiseless: any positive sigma gives the same signs
    return softfilter.ideal_llr(samples, config.mu0, config.mu1, sigma if sigma > 0 else 1.0)


def rx_pipeline(samples, config, sigma=0.0):
    """Received samples (N per frame) back to the payload estimate.

    ``sigma`` is only consulted by the ideal-LLR stage.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.shape[-1] != config.code.N:
        raise ValueError(f"got {samples.shape[-1]} samples, code expects {config.code.N}")
    llrs = llrs_from_samples(samples, config, sigma)
    msg = polar.decode_sc(config.code, llrs, config.systematic, config.kernel).message
    if config.scrambler is not None:
        msg = descramble(msg, config.scrambler)
    return msg


def payload_uniforms(seed, first_frame, count, K):
    """Per-frame uniform draws that are thresholded into biased payload bits."""
    return np.stack([substream(seed, f, channel.PAYLOAD).random(K)
                     for f in range(first_frame, first_frame + count)])


def biased_payloads(seed, first_frame, count, K, p_one):
    """Payload bits that are independently 1 with probability ``p_one``."""
    return (payload_uniforms(seed, first_frame, count, K) < p_one).astype(np.uint8)


def simulate_chunk(config, ebn0_db, first_frame, count):
    """Run frames ``first_frame .. first_frame + count - 1`` at one operating point."""
    payload = biased_payloads(config.seed, first_frame, count, config.code.K, config.p_one)
    sigma = config.sigma(ebn0_db)
    params = ChannelParams(config.mu0, config.mu1, sigma, config.seed, first_frame)
    samples = channel.awgn_apply(channel.ook_modulate(tx_pipeline(payload, config), params), params)
    decoded = rx_pipeline(samples, config, sigma)
    return metrics.accumulate(metrics.SimStats(ebn0_db, config.code.K), payload, decoded)


def _simulate_point(config, ebn0_db, pool):
    stats = metrics.SimStats(ebn0_db, config.code.K)
    next_frame = 0
    while True:
        wave = []
        while len(wave) < config.workers and next_frame < config.max_frames:
            count = min(config.batch_size, config.max_frames - next_frame)
            wave.append((next_frame, count))
            next_frame += count
        if pool is None:
            results = (simulate_chunk(config, ebn0_db, s, c) for s, c in wave)
        else:
            results = [pool.submit(simulate_chunk, config, ebn0_db, s, c) for s, c in wave]
            results = (r.result() for r in results)
        # merge in frame order; chunks past the stopping point are discarded
        for chunk in results:
            stats = stats.merge(chunk)
            if stats.frame_errors >= config.min_frame_errors or stats.frames >= config.max_frames:
                return stats


def run_ber_sweep(config):
    """One :class:`~vlcpolar.metrics.SimStats` per Eb/N0 point.

    Each point stops at the first chunk boundary where ``min_frame_errors``
    frame errors or ``max_frames`` frames have been reached.
    """
    if not config.ebn0_points:
        raise ValueError("sweep needs at least one Eb/N0 point")
    if config.workers == 1:
        return [_simulate_point(config, e, None) for e in config.ebn0_points]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return [_simulate_point(config, e, pool) for e in config.ebn0_points]


def ber_csv(stats):
    return "\n".join([metrics.BER_CSV_HEADER] + [s.csv_row() for s in stats]) + "\n"


def _variants(config):
    scr = config.scrambler or ScramblerConfig()
    for encoder in ENCODERS:
        label = "nspe" if encoder == "nonsystematic" else "spe"
        yield f"{label}-plain", replace(config, encoder=encoder, scrambler=None)
        yield f"{label}-scrambled", replace(config, encoder=encoder, scrambler=scr)


def analyze_distribution(config):
    """Ones fraction of every transmitted codeword for the four encoder variants.

    ``config.frames`` payloads with bias ``config.p_one`` are shared by all
    variants. Returns ``{variant: DistributionSweep}``.
    """
    payload = biased_payloads(config.seed, 0, config.frames, config.code.K, config.p_one)
    return {name: metrics.DistributionSweep.from_codewords(tx_pipeline(payload, cfg))
            for name, cfg in _variants(config)}


def distribution_csv(sweeps):
    lines = ["variant,frame_index,ones_fraction"]
    for name, sweep in sweeps.items():
        lines += [f"{name},{i},{f:.6f}" for i, f in enumerate(sweep.fractions)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RunLengthRow:
    encoder: str
    p_zero: float
    max_run_plain: int
    max_run_scrambled: int

    @property
    def gain(self):
        return metrics.run_length_gain(self.max_run_plain, self.max_run_scrambled)

    @property
    def f_min_hz(self):
        return metrics.min_flicker_free_frequency(self.max_run_scrambled)


P_ZERO_GRID = tuple(round(0.1 * i, 1) for i in range(11))


def analyze_runlength(config, p_zero_grid=P_ZERO_GRID):
    """Longest run over ``config.frames`` codewords, plain vs scrambled, per bias.

    The same per-frame uniforms are thresholded at every grid point, so the
    plain and scrambled columns always see identical payloads.
    """
    uniforms = payload_uniforms(config.seed, 0, config.frames, config.code.K)
    scr = config.scrambler or ScramblerConfig()
    rows = []
    for encoder in ENCODERS:
        plain_cfg = replace(config, encoder=encoder, scrambler=None)
        scr_cfg = replace(config, encoder=encoder, scrambler=scr)
        for p_zero in p_zero_grid:
            payload = (uniforms >= p_zero).astype(np.uint8)
            plain = metrics.max_run_lengths(tx_pipeline(payload, plain_cfg)).max()
            scrambled = metrics.max_run_lengths(tx_pipeline(payload, scr_cfg)).max()
            rows.append(RunLengthRow(encoder, float(p_zero), int(plain), int(scrambled)))
    return rows


def runlength_csv(rows):
    lines = ["encoder,p_zero,max_run_plain,max_run_scrambled,gain,f_min_hz"]
    lines += [f"{r.encoder},{r.p_zero:g},{r.max_run_plain},{r.max_run_scrambled},{r.gain:.4f},{r.f_min_hz:g}"
              for r in rows]
    return "\n".join(lines) + "\n"
