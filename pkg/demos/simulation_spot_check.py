"""A few Monte Carlo scenarios comparing EX, HN and the moment estimator.

Run: python demos/simulation_spot_check.py [reps]
"""
import sys

from linetransect import ScenarioSpec, TargetFamily, run_scenario

reps = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
scenarios = [("EP", 2.0, 200), ("BE", 1.5, 50), ("GP", 3.5, 200), ("HR", 3.0, 100)]

for fam, delta, n in scenarios:
    truth = TargetFamily(fam, delta)
    rows = run_scenario(ScenarioSpec(truth, n, reps=reps, seed=1))
    print(f"\n{truth.label}, n={n}, true f(0)={truth.f0:.4f}")
    print(f"  {'':8} {'RB':>8} {'RRMSE':>8} {'EFF':>7}")
    for r in rows:
        print(f"  {r.estimator:8} {r.rb:8.4f} {r.rrmse:8.4f} {r.eff:7.3f}")
