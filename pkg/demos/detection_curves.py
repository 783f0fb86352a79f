"""Detection curves of the proposed model, with exponential and half-normal for comparison.

Run: python demos/detection_curves.py
"""
import numpy as np

from linetransect import ProposedModel, detection_g

x = np.linspace(0.0, 10.0, 11)

# m = 1: larger beta makes detection fall off faster
print("x     " + "  ".join(f"b={b:<5}" for b in (0.25, 0.35, 0.55, 0.85)))
curves = [detection_g(ProposedModel(1, b), x) for b in (0.25, 0.35, 0.55, 0.85)]
for i, xi in enumerate(x):
    print(f"{xi:4.1f}  " + "  ".join(f"{c[i]:.4f} " for c in curves))

# fixed beta, growing m: detection drops off closer to the line
print()
for m in (1, 2, 5, 20):
    g = detection_g(ProposedModel(m, 0.4), x)
    print(f"m={m:<3}", np.round(g[:6], 4))

# flat at the line, unlike the exponential
h = 1e-4
print()
print("slope at 0, proposed m=2 b=0.4:", (detection_g(ProposedModel(2, 0.4), h) - 1.0) / h)
print("slope at 0, exponential theta=1:", (np.exp(-h) - 1.0) / h)
print("half-normal sigma^2=1 at x=1:   ", np.exp(-0.5))
