"""Receiver decision stage: 3-bit soft-decision filter, ideal and hard LLRs.

All LLRs are positive when bit 1 (the high light level) is more likely.
"""
from dataclasses import dataclass

import numpy as np

# Output LLR per comparator region, lowest voltage first.
SOFT3_LLRS = (-1.1943, -0.3547, -0.2116, -0.0702, 0.0656, 0.2185, 0.3630, 1.2017)


@dataclass(frozen=True)
class QuantizerConfig:
    thresholds: tuple
    llr_table: tuple = SOFT3_LLRS

    def __post_init__(self):
        th = tuple(float(t) for t in self.thresholds)
        table = tuple(float(v) for v in self.llr_table)
        object.__setattr__(self, "thresholds", th)
        object.__setattr__(self, "llr_table", table)
        if len(th) != 7:
            raise ValueError(f"expected 7 thresholds, got {len(th)}")
        if any(b <= a for a, b in zip(th, th[1:])):
            raise ValueError("thresholds must be strictly increasing")
        if len(table) != 8:
            raise ValueError(f"expected 8 LLR values, got {len(table)}")
        if any(b <= a for a, b in zip(table, table[1:])):
            raise ValueError("LLR table must increase with region index")


def default_quantizer(mu0=-1.0, mu1=1.0):
    """Seven thresholds spaced ``(mu1 - mu0) / 8`` apart around the midpoint."""
    if not mu1 > mu0:
        raise ValueError("mu1 must be greater than mu0")
    mid = (mu0 + mu1) / 2
    step = (mu1 - mu0) / 8
    return QuantizerConfig(tuple(mid + k * step for k in range(-3, 4)))


def quantize(sample, config):
    """Region index 0..7: the number of thresholds at or below ``sample``.

    A sample sitting exactly on a threshold lands in the upper region.
    """
    idx = np.searchsorted(np.asarray(config.thresholds), sample, side="right")
    return idx if np.ndim(idx) else int(idx)


def llr_of_region(index, config):
    index = np.asarray(index)
    if ((index < 0) | (index > 7)).any():
        raise IndexError("region index must lie in 0..7")
    out = np.asarray(config.llr_table)[index]
    return out if out.ndim else float(out)


def soft3_llr(sample, config):
    return llr_of_region(quantize(sample, config), config)


def ideal_llr(sample, mu0, mu1, sigma):
    """Exact Gaussian LLR for equal-variance levels ``mu0`` < ``mu1``."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if not mu1 > mu0:
        raise ValueError("mu1 must be greater than mu0")
    out = (mu1 - mu0) * (2 * np.asarray(sample, dtype=float) - mu0 - mu1) / (2 * sigma ** 2)
    return out if out.ndim else float(out)


def hard_llr(sample, mu0, mu1, magnitude=1.0):
    """One-bit slicer at the midpoint; the midpoint itself maps to ``+magnitude``."""
    if magnitude <= 0:
        raise ValueError("magnitude must be positive")
    out = np.where(np.asarray(sample) >= (mu0 + mu1) / 2, magnitude, -magnitude).astype(float)
    return out if out.ndim else float(out)
