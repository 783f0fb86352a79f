"""Closed-form f(0) at beta = 1 and the moment constant L_m.

Run: python demos/constants_tables.py
"""
import math

from linetransect import f0_fraction, l_constant

print(" m   f(0; m, 1)")
for m in range(1, 9):
    fr = f0_fraction(m)
    print(f"{m:2d}   {fr.numerator}/{fr.denominator} = {float(fr):.6f}")

print()
print("      m   L_m")
for m in (1, 2, 3, 4, 5, 6, 7, 8, 20, 200, 500, 1000, 5000, 20000, 50000, 100000):
    print(f"{m:7d}   {l_constant(m):.6f}")
# L_m decreases towards 2/pi, the half-normal value
print(f"  limit   {2 / math.pi:.6f}")
