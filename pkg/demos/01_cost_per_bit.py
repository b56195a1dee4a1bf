#!/usr/bin/env python3
"""Cost-per-bit and die-area analytics across crossbar sizes and nodes.

Bigger crossbars amortize the neuron periphery over more synaptic bits, so
cost-per-bit falls with N; scaled nodes shrink everything by F^2. The
isolation transistors added by the partitioned design cost under 2% of die
height and about 1% of width at N = 128.
"""

from xbarsim import cost_per_bit, die_area_overhead, isolation_transistor_count, total_bits
from xbarsim.crossbar import Granularity

NODES = {"45nm": 45.0, "32nm": 32.0, "22nm": 22.0, "16nm": 16.0}

print("cost-per-bit (nm^2/bit) by crossbar dimension and node")
header = "  N    bits" + "".join(f"{node:>12}" for node in NODES)
print(header)
for n in (16, 32, 64, 128, 256):
    row = f"{n:4d} {total_bits(n):7d}"
    for feature in NODES.values():
        row += f"{cost_per_bit(n, feature):12.1f}"
    print(row)

print()
print("isolation-transistor budget and die-area overhead")
print("  N    fine  coarse   height%   width%")
for n in (16, 32, 64, 128, 256):
    overhead = die_area_overhead(n)
    print(f"{n:4d} {isolation_transistor_count(n, Granularity.FINE):7d}"
      f" {isolation_transistor_count(n, Granularity.COARSE):7d}"
      f" {overhead['height_pct']:9.3f} {overhead['width_pct']:8.3f}")

print()
print("at N = 128 the coarse-grained design needs 256 transistors instead of")
print(f"{isolation_transistor_count(128, Granularity.FINE)} for fine-grained partitioning,"
      " a factor of N-1 = 127 fewer.")
