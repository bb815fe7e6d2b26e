"""
Checking an exponent independently
==================================

Arcs give lower bounds for L through ``ord(grad f o phi) / ord(phi)``.
Sampling the weighted inequality on shrinking spheres shows the ratio
staying flat for an isolated germ and decaying for a non-isolated one.
"""

import numpy as np

from lojexp import WeightSystem, parse_polynomial
from lojexp.verify import (path_quotients_batch, random_curves, sample_inequality_lower,
                           witness_search)

f = parse_polynomial("z1*z4 + z1^10 + z2^5 + z3^5")
ws = WeightSystem(10, (1, 2, 2, 9))
best = witness_search(f, ws)
print("best arc:", best.to_dict())

# random arcs never beat the exponent
values = path_quotients_batch(f, random_curves(4, 5000, np.random.default_rng(1)))
print("largest random quotient:", max(values))

radii = (1e-1, 1e-2, 1e-3)
cubic = sample_inequality_lower(parse_polynomial("x^3 + y^3 + z^3"), WeightSystem(3, (1, 1, 1)), radii)
print("Fermat cubic minima:", cubic.extrema, "spread", round(cubic.spread, 4))

xy = parse_polynomial("x*y", ["x", "y", "z"])
near_axis = sample_inequality_lower(xy, WeightSystem(2, (1, 1, 1)), radii, direction=(0, 0, 1))
print("xy near the z-axis:", near_axis.extrema, "decays:", near_axis.decays)
