"""Polar code construction, encoding and successive-cancellation decoding.

Conventions used throughout:

* The transform is ``x = d . F^{(x)n}`` over GF(2) with kernel ``[[1, 0], [1, 1]]``
  in natural index order (no bit-reversal permutation).
* LLRs are positive when bit 1 is more likely.
* Every function taking frames also accepts a 2-D batch with one frame per row.
"""
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np


def is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def _frames(arr, length, name):
    arr = np.asarray(arr)
    if arr.ndim not in (1, 2):
        raise ValueError(f"{name} must be 1-D or a 2-D batch")
    if arr.shape[-1] != length:
        raise ValueError(f"{name} length {arr.shape[-1]} does not match expected {length}")
    return arr


@dataclass(frozen=True)
class PolarCode:
    """Code profile: length ``N``, dimension ``K`` and the information set."""

    N: int
    K: int
    info_set: tuple
    method: str = "bhattacharyya"
    design: float = 0.5

    def __post_init__(self):
        info = tuple(int(i) for i in self.info_set)
        object.__setattr__(self, "info_set", info)
        if self.N < 2 or not is_power_of_two(self.N):
            raise ValueError(f"N={self.N} is not a power of two >= 2")
        if not 0 < self.K <= self.N:
            raise ValueError(f"K={self.K} must satisfy 0 < K <= N")
        if len(info) != self.K:
            raise ValueError(f"info set has {len(info)} indices, expected K={self.K}")
        if len(set(info)) != len(info):
            raise ValueError("info set contains duplicate indices")
        if any(i < 0 or i >= self.N for i in info):
            raise ValueError(f"info indices must lie in [0, {self.N})")
        object.__setattr__(self, "info_set", tuple(sorted(info)))

    @property
    def n(self):
        return self.N.bit_length() - 1

    @property
    def rate(self):
        return self.K / self.N

    @property
    def info_indices(self):
        return np.array(self.info_set, dtype=np.intp)

    @property
    def frozen_mask(self):
        mask = np.ones(self.N, dtype=bool)
        mask[self.info_indices] = False
        return mask

    @property
    def frozen_set(self):
        return tuple(np.flatnonzero(self.frozen_mask).tolist())


@dataclass(frozen=True)
class DecodeResult:
    message: np.ndarray
    codeword_estimate: np.ndarray


def bhattacharyya(N, design=0.5):
    """Erasure-channel Bhattacharyya parameter of every synthetic channel.

    Index bits are consumed MSB first; a 0 bit maps ``z -> 2z - z^2`` and a
    1 bit maps ``z -> z^2``.
    """
    if not is_power_of_two(N):
        raise ValueError(f"N={N} is not a power of two")
    z = np.array([design], dtype=float)
    while z.size < N:
        nxt = np.empty(2 * z.size)
        nxt[0::2] = 2 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    return z


def construct_code(N, K, design=0.5):
    """Pick the ``K`` most reliable indices; on equal ``z`` the larger index wins."""
    if not is_power_of_two(N) or N < 2:
        raise ValueError(f"N={N} is not a power of two >= 2")
    if not 0 < K <= N:
        raise ValueError(f"K={K} must satisfy 0 < K <= N")
    z = bhattacharyya(N, design)
    idx = np.arange(N)
    order = np.lexsort((-idx, z))
    return PolarCode(N, K, tuple(sorted(order[:K].tolist())), "bhattacharyya", float(design))


def polar_transform(d):
    """Multiply by the n-fold Kronecker power of ``[[1, 0], [1, 1]]`` over GF(2).

    Uses ``log2(N)`` butterfly layers of ``N/2`` XORs each. The transform is
    its own inverse.
    """
    x = np.array(d, dtype=np.uint8)
    N = x.shape[-1]
    if x.ndim not in (1, 2) or not is_power_of_two(N):
        raise ValueError(f"transform length {N} is not a power of two")
    lead = x.shape[:-1]
    half = 1
    while half < N:
        blocks = x.reshape(*lead, N // (2 * half), 2, half)
        blocks[..., 0, :] ^= blocks[..., 1, :]
        half *= 2
    return x


def _place(code, msg):
    msg = _frames(msg, code.K, "message")
    d = np.zeros(msg.shape[:-1] + (code.N,), dtype=np.uint8)
    d[..., code.info_indices] = msg
    return d


def encode_nonsystematic(code, msg):
    """Message on the information indices, zeros elsewhere, then transform."""
    return polar_transform(_place(code, msg))


def _gf2_inverse(mat):
    n = mat.shape[0]
    aug = np.concatenate([mat.astype(np.uint8) & 1, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.flatnonzero(aug[col:, col])
        if pivots.size == 0:
            raise ValueError("matrix is singular over GF(2)")
        p = col + pivots[0]
        if p != col:
            aug[[col, p]] = aug[[p, col]]
        rows = np.flatnonzero(aug[:, col])
        rows = rows[rows != col]
        aug[rows] ^= aug[col]
    return aug[:, n:]


@lru_cache(maxsize=16)
def _systematic_map(code):
    """``None`` when encode-mask-encode is valid, else inverse of ``G[A, A]``."""
    eye = np.eye(code.K, dtype=np.uint8)
    x = polar_transform(_place(code, eye))
    x[:, code.frozen_mask] = 0
    x = polar_transform(x)
    if np.array_equal(x[:, code.info_indices], eye):
        return None
    # info set is not domination-contiguous; fall back to solving G_AA.
    g_aa = polar_transform(_place(code, eye))[:, code.info_indices]
    return _gf2_inverse(g_aa)


def encode_systematic(code, msg):
    """Codeword carrying ``msg`` verbatim on the information indices.

    The transform of the result vanishes on every frozen index.
    """
    inv = _systematic_map(code)
    if inv is None:
        x = encode_nonsystematic(code, msg)
        x[..., code.frozen_mask] = 0
        return polar_transform(x)
    msg = _frames(msg, code.K, "message").astype(np.uint8)
    return encode_nonsystematic(code, (msg.astype(np.int64) @ inv) & 1)


def f_minsum(a, b):
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def f_exact(a, b):
    """Exact check-node update ``2 atanh(tanh(a/2) tanh(b/2))`` in log form."""
    return (f_minsum(a, b)
            + np.log1p(np.exp(-np.abs(a + b)))
            - np.log1p(np.exp(-np.abs(a - b))))


KERNELS = {"minsum": f_minsum, "exact": f_exact}


def _sc(L, frozen, f):
    # L holds LLRs with positive favouring 0 (textbook orientation).
    size = L.shape[-1]
    if frozen.all():
        zeros = np.zeros(L.shape, dtype=np.uint8)
        return zeros, zeros
    if size == 1:
        u = (L < 0).astype(np.uint8)
        return u, u
    h = size // 2
    a, b = L[..., :h], L[..., h:]
    u1, c1 = _sc(f(a, b), frozen[:h], f)
    u2, c2 = _sc(b + (1 - 2 * c1.astype(L.dtype)) * a, frozen[h:], f)
    return (np.concatenate([u1, u2], axis=-1),
            np.concatenate([c1 ^ c2, c2], axis=-1))


def decode_sc(code, llrs, systematic=False, kernel="minsum"):
    """Successive-cancellation decoding.

    Frozen indices are decided 0; an information bit is decided 1 iff its
    LLR is strictly positive. ``kernel`` selects the min-sum or exact
    check-node update.
    """
    llrs = _frames(llrs, code.N, "LLR frame").astype(float)
    if not np.isfinite(llrs).all():
        raise ValueError("LLR input must be finite")
    u, x = _sc(-llrs, code.frozen_mask, KERNELS[kernel])
    if systematic:
        message = x[..., code.info_indices]
    else:
        message = u[..., code.info_indices]
    return DecodeResult(message=message, codeword_estimate=x)


def save_code(code, path):
    lines = [f"polar {code.N} {code.K} {code.method} {code.design!r}"]
    lines += [str(i) for i in code.info_set]
    Path(path).write_text("\n".join(lines) + "\n")


def load_code(path):
    """Read a code profile written by :func:`save_code`, validating it."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty code profile")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "polar":
        raise ValueError(f"{path}: malformed header {lines[0]!r}")
    try:
        N, K = int(header[1]), int(header[2])
        design = float(header[4])
        indices = [int(s) for s in lines[1:] if s.strip()]
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
    if len(indices) != K:
        raise ValueError(f"{path}: header says K={K} but {len(indices)} indices follow")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"{path}: indices must be strictly ascending and distinct")
    return PolarCode(N, K, tuple(indices), header[3], design)


def generator_matrix(code):
    """Rows of ``F^{(x)n}`` selected by the information set (K x N)."""
    return polar_transform(_place(code, np.eye(code.K, dtype=np.uint8)))


__all__ = [
    "PolarCode", "DecodeResult", "bhattacharyya", "construct_code",
    "polar_transform", "encode_nonsystematic", "encode_systematic", "decode_sc",
    "save_code", "load_code", "generator_matrix", "f_minsum", "f_exact",
]
