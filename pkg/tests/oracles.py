"""Slow, independent reference implementations used only by the tests."""
import itertools

import numpy as np


def lfsr_bits(degree, taps, seed_stages, n):
    """Fibonacci LFSR on an explicit list; ``seed_stages[s-1]`` is stage s."""
    reg = list(seed_stages)
    out = []
    for _ in range(n):
        out.append(reg[degree - 1])
        fb = 0
        for q in taps:
            fb ^= reg[q - 1]
        reg = [fb] + reg[:-1]
    return out


def hex_bits(text):
    table = {c: [int(b) for b in format(int(c, 16), "04b")] for c in "0123456789abcdefABCDEF"}
    return [b for c in text for b in table[c]]


def kron_matrix(N):
    F = np.array([[1, 0], [1, 1]], dtype=np.int64)
    G = np.array([[1]], dtype=np.int64)
    while G.shape[0] < N:
        G = np.kron(G, F)
    return G


def gf2_encode(info_set, N, msg):
    d = np.zeros(N, dtype=np.int64)
    d[list(info_set)] = msg
    return (d @ kron_matrix(N)) % 2


def all_inputs(N):
    return np.array(list(itertools.product((0, 1), repeat=N)), dtype=np.int64)


def brute_force_sc(info_set, N, llrs):
    """Exact successive cancellation by marginalising over all future bits.

    ``llrs`` is a (B, N) batch with positive values favouring 1. For bit ``i``
    the decision compares the total likelihood of all input vectors that agree
    with the earlier decisions and have ``u_i = 1`` against ``u_i = 0``.
    """
    U = all_inputs(N)
    X = (U @ kron_matrix(N)) % 2
    llrs = np.atleast_2d(llrs)
    logw = llrs @ X.T
    logw -= logw.max(axis=1, keepdims=True)
    W = np.exp(logw)
    alive = np.ones(W.shape, dtype=bool)
    decided = np.zeros((llrs.shape[0], N), dtype=np.int64)
    for i in range(N):
        if i in info_set:
            p1 = np.where(alive & (U[:, i] == 1), W, 0).sum(axis=1)
            p0 = np.where(alive & (U[:, i] == 0), W, 0).sum(axis=1)
            decided[:, i] = p1 > p0
        alive &= U[:, i][None, :] == decided[:, i][:, None]
    return decided


def ml_codeword(info_set, N, llrs):
    """Maximum-likelihood codeword of a small code (positive LLR favours 1)."""
    K = len(info_set)
    msgs = all_inputs(K)
    words = np.array([gf2_encode(info_set, N, m) for m in msgs])
    best = np.argmax(words @ np.asarray(llrs, dtype=float))
    return msgs[best], words[best]
