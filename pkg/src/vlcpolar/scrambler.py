"""Additive LFSR pre-scrambler for beacon payloads.

The register is in Fibonacci form with stages numbered ``1..degree``. Each
step emits stage ``degree``, computes the feedback as the XOR of the tapped
stages, shifts every stage up by one and loads the feedback into stage 1.
The default polynomial is x^15 + x^14 + 1 with an all-ones seed.

Seeds are integers whose bit ``s - 1`` holds stage ``s``.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import as_bits


@dataclass(frozen=True)
class ScramblerConfig:
    degree: int = 15
    taps: tuple = (15, 14)
    seed: int = 0x7FFF

    def __post_init__(self):
        taps = tuple(sorted(set(int(q) for q in self.taps), reverse=True))
        object.__setattr__(self, "taps", taps)
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if any(q < 1 or q > self.degree for q in taps):
            raise ValueError(f"tap exponents must lie in [1, {self.degree}]")
        if self.degree not in taps:
            raise ValueError("the degree itself must be a tap")
        if not 0 < self.seed < (1 << self.degree):
            raise ValueError(f"seed must be a nonzero {self.degree}-bit value")

    @classmethod
    def parse(cls, taps=None, seed=None):
        """Build a config from CLI strings like ``"15,14"`` and ``"7FFF"``."""
        kwargs = {}
        if taps is not None:
            tap_list = [int(t) for t in str(taps).split(",") if t.strip()]
            kwargs["taps"] = tuple(tap_list)
            kwargs["degree"] = max(tap_list)
        if seed is not None:
            kwargs["seed"] = int(str(seed), 16)
        elif "degree" in kwargs:
            kwargs["seed"] = (1 << kwargs["degree"]) - 1
        return cls(**kwargs)


def _step(state, degree, tap_mask):
    out = (state >> (degree - 1)) & 1
    feedback = bin(state & tap_mask).count("1") & 1
    state = ((state << 1) | feedback) & ((1 << degree) - 1)
    return out, state


def _tap_mask(config):
    mask = 0
    for q in config.taps:
        mask |= 1 << (q - 1)
    return mask


@lru_cache(maxsize=64)
def _keystream_cached(config, n):
    mask = _tap_mask(config)
    state = config.seed
    out = np.empty(n, dtype=np.uint8)
    for i in range(n):
        out[i], state = _step(state, config.degree, mask)
    out.flags.writeable = False
    return out


def keystream(config, n):
    """First ``n`` keystream bits after loading the seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _keystream_cached(config, int(n))


def state_period(config):
    """Number of steps until the register returns to its seed state."""
    mask = _tap_mask(config)
    state = config.seed
    for period in range(1, 1 << config.degree):
        _, state = _step(state, config.degree, mask)
        if state == config.seed:
            return period
    raise RuntimeError("register never returned to its seed")


def scramble(frame, config=ScramblerConfig()):
    """XOR ``frame`` with the keystream; the register restarts for every frame.

    A 2-D array is treated as a batch of frames, one per row.
    """
    frame = np.asarray(frame, dtype=np.uint8)
    if frame.ndim == 1:
        frame = as_bits(frame)
    out = frame ^ keystream(config, frame.shape[-1])
    if out.ndim == 1:
        out.flags.writeable = False
    return out


# Additive scrambling is an involution.
descramble = scramble
