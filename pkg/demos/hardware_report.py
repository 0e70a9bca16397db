"""
Decoder hardware figures
========================

Throughput, energy per bit and area efficiency of the synthesised SC
decoder, computed from cycle count, clock, power and area.
"""
from vlcpolar.metrics import hardware_report

r = hardware_report(N=256, latency_cycles=386, f_clk=25e6, power=3.5022e-3, area=0.57372456e-6)
print(r.describe())

# Clock scaling: throughput rises linearly, energy per bit falls if power stays fixed
for f in (10e6, 25e6, 50e6):
    r = hardware_report(256, 386, f, 3.5022e-3, 0.57372456e-6)
    print(f"{f / 1e6:4.0f} MHz: {r.throughput / 1e6:6.2f} Mb/s, {r.energy_per_bit * 1e12:6.1f} pJ/b")
