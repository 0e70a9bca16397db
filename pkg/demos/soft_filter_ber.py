"""
Soft-decision filter versus a hard slicer
=========================================

The receiver compares each sample against seven thresholds and emits one
of eight fixed LLRs. This script shows the mapping and then runs a short
BER sweep for the hard, 3-bit soft and ideal Gaussian LLR front ends.
Every front end sees the same payloads and the same noise.
"""
from dataclasses import replace

import numpy as np

from vlcpolar import metrics, sim
from vlcpolar.softfilter import default_quantizer, ideal_llr, soft3_llr

q = default_quantizer(-1.0, 1.0)
print("thresholds:", q.thresholds)
for v in np.linspace(-1.2, 1.2, 9):
    print(f"  sample {v:+.2f} -> soft3 {soft3_llr(v, q):+.4f}   ideal(sigma=0.6) {ideal_llr(v, -1, 1, 0.6):+.3f}")

base = replace(sim.SimConfig(), ebn0_points=(2.0, 3.0, 4.0, 5.0, 6.0),
               min_frame_errors=50, max_frames=20_000, batch_size=500, workers=4)
curves = {}
for mode in sim.QUANTIZERS:
    curves[mode] = sim.run_ber_sweep(replace(base, quantizer=mode))

print("\nEb/N0    " + "".join(f"{m:>12s}" for m in curves))
for i, e in enumerate(base.ebn0_points):
    print(f"{e:5.1f} dB" + "".join(f"{curves[m][i].ber:12.2e}" for m in curves))
for m, stats in curves.items():
    print(f"{m:6s} reaches BER 1e-3 at {metrics.ebn0_at_ber(stats, 1e-3):.2f} dB")
