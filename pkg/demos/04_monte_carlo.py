"""
Which composition wins?
=======================

Draw the structural parameters uniformly over their plausible ranges and
count how often each composition gives the largest present value.
"""

from collections import Counter

from fiscal_composition.validation.montecarlo import MonteCarloConfig, run_monte_carlo, summary_rows

cfg = MonteCarloConfig(n_draws=3000)
summary, records = run_monte_carlo(cfg, return_records=True)

for label, value in summary_rows(summary, cfg.stress_draws):
    print(f"{label:<42} {value:>10}")

# the impact winner is often not the PV winner
pairs = Counter((r.impact_winner, r.pv_winner) for r in records)
print("\nmost common (impact winner, PV winner) pairs:")
for (imp, pv), n in pairs.most_common(5):
    print(f"  {imp:<18} -> {pv:<18} {n}")

# same draws, four worker processes: identical summary
if __name__ == "__main__":
    print("\nparallel run identical:", run_monte_carlo(cfg, workers=4) == summary)
