"""
Run lengths and flicker
=======================

Long runs of one symbol dim or brighten the LED for a while; the eye sees
that as flicker if it lasts longer than the maximum flicker time period.
"""
from dataclasses import replace

from vlcpolar import sim
from vlcpolar.metrics import MFTP_SECONDS

rows = sim.analyze_runlength(replace(sim.SimConfig(), frames=3000))
print(f"{'encoder':14s}{'p_zero':>7s}{'plain':>7s}{'scr':>6s}{'gain':>7s}{'f_min':>10s}")
for r in rows:
    print(f"{r.encoder:14s}{r.p_zero:7.1f}{r.max_run_plain:7d}{r.max_run_scrambled:6d}"
          f"{r.gain:7.2f}{r.f_min_hz:9.0f}Hz")

# Smallest bit rate that keeps every run shorter than the flicker period
worst = max(r.max_run_scrambled for r in rows)
print(f"\nworst scrambled run {worst} bits -> symbol rate >= {worst / MFTP_SECONDS:.0f} b/s")
