"""Density of wooden stakes from 68 perpendicular distances on 1 km of line.

The bundled distances are a surrogate that matches the published n, mean
and half-normal estimate (see src/linetransect/data/stakes.txt).

Run: python demos/stakes_analysis.py [reps]
"""
import sys

from linetransect import load_stakes
from linetransect.bootstrap import stakes_table

reps = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
x = load_stakes()
print(f"n = {x.n}, mean = {x.mean:.5f} m; true density 0.00375 per m^2\n")

print(f"{'estimator':<12} {'f0':>8} {'boot mean':>10} {'bias':>8} {'sd':>8} {'mse':>8} {'D':>8}")
for r in stakes_table(reps=reps, seed=0, sample=x, line_length=1000.0):
    print(f"{r.estimator:<12} {r.point:8.5f} {r.boot_mean:10.5f} {r.bias:8.5f} {r.sd:8.5f} {r.mse:8.5f} {r.density_hat:8.5f}")
# the exponential estimate overshoots badly; m around 8 lands close to the known density
