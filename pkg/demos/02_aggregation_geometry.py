"""
When is total spending enough?
==============================

A scalar aggregate G summarises a fiscal vector only if every instrument
moves output by the same amount at the margin.  Exact fractions make the
zero-sum directions visible without rounding noise.
"""

from fractions import Fraction as F

from fiscal_composition import aggregation as agg

basis = agg.nullspace_basis(3)
print("reallocations that keep G fixed:", [list(map(int, v)) for v in basis])

homogeneous = [F(1, 2)] * 3
unequal = [F(1, 2), F(9, 10), F(1, 5)]

for grad in (homogeneous, unequal):
    effects = [agg.first_order_effect(grad, v) for v in basis]
    print(f"gradient {[str(g) for g in grad]}: effects {[str(e) for e in effects]}, "
          f"sufficient={agg.is_locally_sufficient(grad)}")

# weighted multiplier and the bias of using the average
w = [F(1, 2), F(1, 4), F(1, 4)]
lam_bar = sum(unequal) / 3
print("weighted multiplier:", agg.weighted_multiplier(unequal, w))
print("bias of a scalar-G model for dG=10:", agg.aggregation_bias(unequal, w, lam_bar, 10))

# even with equal gradients, curvature across instruments shows up at second order
gamma = F(3)
H = agg.QuadraticForm([[2 * gamma, -2 * gamma], [-2 * gamma, 2 * gamma]])
for eps in (F(1, 10), F(1, 2), F(1)):
    print(f"eps={eps}: second-order effect {agg.second_order_effect([F(1), F(1)], H, [1, -1], eps)}")
