"""
Sensitivity sweeps
==================

One parameter at a time, everything else at baseline.  These are the
series behind the sweep panels; no plotting here, only the numbers.
"""

import numpy as np

from fiscal_composition.simulator import SCENARIOS, ModelParams, simulate
from fiscal_composition.validation.sensitivity import SWEEPS, is_monotone, sweep

p = ModelParams()
for name, sw in SWEEPS.items():
    xs = np.linspace(sw.lo, sw.hi, 11)
    ys = sweep(p, name, xs)
    trend = "non-decreasing" if sw.direction > 0 else "non-increasing"
    print(f"\n{name} -> {sw.column} ({trend}: {is_monotone(ys, sw.direction)})")
    for x, y in zip(xs, ys):
        print(f"  {x:6.3f}  {y:8.4f}")

# break-even investment efficiency: where investment starts to beat current spending in PV
phis = np.linspace(0, 1, 1001)
gap = [simulate(p.replace(phi=x), SCENARIOS[1]).pv_y - simulate(p.replace(phi=x), SCENARIOS[0]).pv_y
       for x in phis]
print(f"\ninvestment overtakes current spending at phi ~ {phis[np.argmax(np.array(gap) > 0)]:.3f}")
