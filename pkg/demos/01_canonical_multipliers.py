"""
Canonical multipliers
=====================

How much of a unit of spending survives each closure of the linear
open-economy model.
"""

import math

import numpy as np

from fiscal_composition.canonical import (
    CanonicalParams,
    fixed_bp_multiplier,
    flex_multiplier,
    islm_multiplier,
    simple_multiplier,
)

p = CanonicalParams(c=0.8, t=0.2, m=0.1, b=0.5, k=0.25, h=0.5, eta=1.0, kappa=2.0, m_B=0.1)
print(f"alpha = {p.alpha:.4f}")

# the money market crowds out part of the goods-market effect
for name, f in [("goods market", simple_multiplier), ("IS-LM", islm_multiplier),
                ("fixed-rate BP", fixed_bp_multiplier), ("flexible-rate BP", flex_multiplier)]:
    print(f"{name:<18} {f(p):.4f}")

# a flat LM curve removes crowding out entirely
flat = CanonicalParams(**{**vars(p), "h": math.inf})
print("flat LM:", islm_multiplier(flat) == simple_multiplier(flat))

# capital mobility: the fixed-rate multiplier rises to 1/alpha, the flexible-rate one falls to zero
for kappa in np.geomspace(0.1, 1e6, 8):
    q = CanonicalParams(**{**vars(p), "kappa": float(kappa)})
    print(f"kappa={kappa:>12.1f}  fixed={fixed_bp_multiplier(q):.4f}  flex={flex_multiplier(q):.6f}")
