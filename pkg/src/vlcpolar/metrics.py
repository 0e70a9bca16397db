"""Evaluation arithmetic: DC balance, run lengths, flicker bound, error
counting and the throughput/energy/efficiency calculator."""
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .bits import as_bits

MFTP_SECONDS = 0.005


def ones_fraction(frame):
    frame = np.asarray(frame)
    if frame.shape[-1] == 0:
        raise ValueError("ones_fraction of an empty frame")
    return frame.sum(axis=-1) / frame.shape[-1]


@dataclass(frozen=True)
class RunProfile:
    max_run: int
    histogram: dict  # (symbol, length) -> count


def run_profile(frame):
    """Partition ``frame`` into maximal runs of equal symbols."""
    bits = as_bits(frame)
    if bits.size == 0:
        return RunProfile(0, {})
    starts = np.flatnonzero(np.diff(bits)) + 1
    bounds = np.concatenate([[0], starts, [bits.size]])
    lengths = np.diff(bounds)
    symbols = bits[bounds[:-1]]
    hist = Counter(zip(symbols.tolist(), lengths.tolist()))
    return RunProfile(int(lengths.max()), dict(hist))


def max_run_lengths(frames):
    """Longest run within each row of a 2-D batch of frames."""
    frames = np.atleast_2d(np.asarray(frames, dtype=np.int8))
    B, N = frames.shape
    if N == 0:
        return np.zeros(B, dtype=int)
    best = np.ones(B, dtype=int)
    cur = np.ones(B, dtype=int)
    for j in range(1, N):
        same = frames[:, j] == frames[:, j - 1]
        cur = np.where(same, cur + 1, 1)
        np.maximum(best, cur, out=best)
    return best


def run_length_gain(unscrambled_max, scrambled_max):
    if scrambled_max < 1:
        raise ValueError("scrambled max run must be at least 1")
    return unscrambled_max / scrambled_max


def min_flicker_free_frequency(max_run, mftp=MFTP_SECONDS):
    """Lowest bit rate (Hz) at which the longest run stays shorter than MFTP."""
    if max_run < 1 or mftp <= 0:
        raise ValueError("max_run must be >= 1 and mftp positive")
    return max_run / mftp


@dataclass(frozen=True)
class DistributionSweep:
    fractions: np.ndarray
    min_fraction: float
    max_fraction: float
    histogram: np.ndarray  # counts of frames per number of ones, length N + 1

    @classmethod
    def from_codewords(cls, codewords):
        codewords = np.atleast_2d(codewords)
        ones = codewords.sum(axis=1)
        fractions = ones / codewords.shape[1]
        hist = np.bincount(ones, minlength=codewords.shape[1] + 1)
        return cls(fractions, float(fractions.min()), float(fractions.max()), hist)


@dataclass(frozen=True)
class SimStats:
    ebn0_db: float
    K: int
    frames: int = 0
    bit_errors: int = 0
    frame_errors: int = 0

    @property
    def ber(self):
        return self.bit_errors / (self.frames * self.K) if self.frames else 0.0

    @property
    def fer(self):
        return self.frame_errors / self.frames if self.frames else 0.0

    def merge(self, other):
        if (other.ebn0_db, other.K) != (self.ebn0_db, self.K):
            raise ValueError("cannot merge statistics of different operating points")
        return SimStats(self.ebn0_db, self.K, self.frames + other.frames,
                        self.bit_errors + other.bit_errors,
                        self.frame_errors + other.frame_errors)

    __add__ = merge

    def csv_row(self):
        return f"{self.ebn0_db:g},{self.frames},{self.bit_errors},{self.frame_errors},{self.ber:.6e},{self.fer:.6e}"


BER_CSV_HEADER = "ebn0_db,frames,bit_errors,frame_errors,ber,fer"


def accumulate(stats, tx_msg, rx_msg):
    """Add one frame, or a 2-D batch of frames, to ``stats``."""
    tx, rx = np.atleast_2d(tx_msg), np.atleast_2d(rx_msg)
    if tx.shape != rx.shape:
        raise ValueError(f"length mismatch: {tx.shape} vs {rx.shape}")
    errors = (tx != rx).sum(axis=1)
    return stats.merge(SimStats(stats.ebn0_db, stats.K, tx.shape[0],
                                int(errors.sum()), int((errors > 0).sum())))


@dataclass(frozen=True)
class HardwareReport:
    throughput: float  # b/s
    energy_per_bit: float  # J/b
    efficiency: float  # b/s/m^2

    def describe(self):
        return (f"throughput: {self.throughput / 1e6:.2f} Mb/s\n"
                f"energy-per-bit: {self.energy_per_bit * 1e12:.1f} pJ/b\n"
                f"hardware efficiency: {self.efficiency / 1e12:.2f} Mb/s/mm^2")


def hardware_report(N, latency_cycles, f_clk, power, area):
    """Throughput, energy per bit and area efficiency from synthesis figures.

    ``f_clk`` in Hz, ``power`` in W, ``area`` in m^2.
    """
    if min(N, latency_cycles, f_clk, power, area) <= 0:
        raise ValueError("all hardware figures must be positive")
    throughput = N / (latency_cycles / f_clk)
    return HardwareReport(throughput, power / throughput, throughput / area)


def ebn0_at_ber(stats, target):
    """Eb/N0 where the BER curve first crosses ``target`` (log-linear interpolation).

    Returns ``nan`` when no consecutive pair of points brackets the target.
    """
    pts = sorted((s.ebn0_db, s.ber) for s in stats)
    for (e0, b0), (e1, b1) in zip(pts, pts[1:]):
        if b0 >= target > b1:
            if b1 == 0:
                return e1
            t = (np.log10(target) - np.log10(b0)) / (np.log10(b1) - np.log10(b0))
            return e0 + t * (e1 - e0)
    return float("nan")
