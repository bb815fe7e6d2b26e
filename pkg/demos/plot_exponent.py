"""
Exponents of weighted homogeneous singularities
===============================================

Compute L(f) for a few germs and compare it with the two classical upper
bounds, the largest ``d/w_i - 1`` and the Milnor number.
"""

from lojexp import WeightSystem, is_isolated, lojasiewicz_exponent, parse_polynomial
from lojexp.exponent import milnor_orlik, strict_exponent

germs = [
    ("x^3 + y^3 + z^3", WeightSystem(3, (1, 1, 1))),
    ("x^2 + y^3 + z^6", WeightSystem(6, (3, 2, 1))),
    ("z1*z4 + z1^10 + z2^5 + z3^5", WeightSystem(10, (1, 2, 2, 9))),
]

for text, ws in germs:
    f = parse_polynomial(text)
    r = lojasiewicz_exponent(f, ws, is_isolated(f))
    print(f"{text:32s} type {ws}  L = {r.L}  [{r.method}]")
    print(f"    max(d/w_i - 1) = {strict_exponent(ws)}, mu = {milnor_orlik(ws).value}, "
          f"C0-sufficiency degree = {r.sufficiency_degree}")

# the last germ has a weight above d/2, so z4 and its partner z1 are eliminated
# and the exponent drops well below both bounds
f = parse_polynomial(germs[-1][0])
r = lojasiewicz_exponent(f, germs[-1][1], is_isolated(f))
print(r.classification.to_dict())
