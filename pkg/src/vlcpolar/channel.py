"""OOK modulation and a reproducible AWGN channel.

Randomness is counter based: a Philox generator keyed by the master seed with
the frame index (``stream``) and a purpose tag placed in the upper counter
words. Every frame therefore owns an independent substream, and results do not
depend on the order or the process in which frames are simulated.
"""
from dataclasses import dataclass

import numpy as np

NOISE = 0
PAYLOAD = 1

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class ChannelParams:
    mu0: float = -1.0
    mu1: float = 1.0
    sigma: float = 0.0
    seed: int = 0
    stream: int = 0

    def __post_init__(self):
        if not self.mu1 > self.mu0:
            raise ValueError("mu1 must be greater than mu0")
        if self.sigma < 0:
            raise ValueError("sigma must be nonnegative")


def substream(seed, stream, purpose=NOISE):
    """Generator for frame ``stream`` of the master ``seed``."""
    bitgen = np.random.Philox(key=int(seed) & _SEED_MASK,
                              counter=[0, 0, int(stream), int(purpose)])
    return np.random.Generator(bitgen)


def ook_modulate(bits, params=ChannelParams()):
    """Bit 0 -> ``mu0``, bit 1 -> ``mu1``."""
    bits = np.asarray(bits)
    return np.where(bits == 1, params.mu1, params.mu0).astype(float)


def awgn_apply(samples, params):
    """Add N(0, sigma^2) noise drawn from the frame substream of ``params``.

    For a 2-D batch, row ``r`` uses substream ``params.stream + r``.
    """
    samples = np.asarray(samples, dtype=float)
    if params.sigma == 0:
        return samples.copy()
    if samples.ndim == 1:
        noise = substream(params.seed, params.stream, NOISE).standard_normal(samples.shape)
    else:
        noise = np.stack([substream(params.seed, params.stream + r, NOISE).standard_normal(samples.shape[1])
                          for r in range(samples.shape[0])])
    return samples + params.sigma * noise


def sigma_from_ebn0(ebn0_db, rate):
    """Noise std on the bipolar scale (levels at -1 and +1) for a given Eb/N0."""
    if not 0 < rate <= 1:
        raise ValueError("rate must lie in (0, 1]")
    if np.isposinf(ebn0_db):
        return 0.0
    return float(np.sqrt(1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0))))
