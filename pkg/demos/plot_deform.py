"""
Deformations and semi-weighted germs
====================================

Adding terms of weighted degree at least d keeps the Milnor number, and
with it the exponent.  A lower-degree term can drop it.
"""

from lojexp import WeightSystem, parse_polynomial
from lojexp.deform import Deformation, analyze_deformation, semi_weighted_lojasiewicz

names = ["x", "y", "z"]
f = parse_polynomial("x^3 + y^3 + z^3", names)
ws = WeightSystem(3, (1, 1, 1))

for g in ["x*y*z", "x^2"]:
    v = analyze_deformation(Deformation(f, parse_polynomial(g, names)), ws, [0, 1, 2])
    print(g, v.to_dict())

r = semi_weighted_lojasiewicz(parse_polynomial("x^2 + y^3 + x^3"), WeightSystem(6, (3, 2)))
print("x^2 + y^3 + x^3:", r.L, r.method)
