"""
Same spending, different outcomes
=================================

Five compositions of a 5-unit impulse, simulated over twenty periods.
"""

import numpy as np

from fiscal_composition import instruments as I
from fiscal_composition.simulator import SCENARIOS, ModelParams, scalar_g_prediction, simulate

p = ModelParams()
print(f"D = {p.denominator:.2f}; composition-blind prediction = {scalar_g_prediction(p):.6f}\n")

paths = {s.name: simulate(p, s) for s in SCENARIOS}
print(f"{'composition':<18} {'impact':>8} {'PV(Y)':>8}")
for name, path in paths.items():
    print(f"{name:<18} {path.impact:>8.4f} {path.pv_y:>8.4f}")

# investment pays off later, through the public capital stock
inv = paths["public_investment"]
print("\nperiod  dY      dKg     dYstar")
for t in (0, 1, 2, 5, 10, 19):
    print(f"{t:>6}  {inv.dY[t]:.4f}  {inv.dKg[t]:.4f}  {inv.dYstar[t]:.4f}")

# without the debt drag the simulation collapses to the geometric closed form
q = p.replace(rho_drag=0.0)
closed = q.shock * I.investment_pv_closed(q.absorption(), q.capital(), q.denominator)
print(f"\nno drag: simulated {simulate(q, SCENARIOS[1]).pv_y:.10f}, closed form {closed:.10f}")

# the longer the horizon, the more investment gains
for T in (1, 5, 10, 20, 40):
    print(f"T={T:>2}: investment PV {simulate(p.replace(T=T), SCENARIOS[1]).pv_y:.4f}")

print("\nfinal debt deviation by composition:",
      {k: round(float(v.dB[-1]), 3) for k, v in paths.items()})
print("cumulative net exports:", {k: round(float(np.sum(v.nx)), 3) for k, v in paths.items()})
