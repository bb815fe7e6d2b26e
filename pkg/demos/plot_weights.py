"""
Finding weight systems
======================

A polynomial can fit exactly one weight system, a whole family, or none.
"""

from lojexp import infer_weight_systems, parse_polynomial

for text in ["z1*z4 + z1^10 + z2^5 + z3^5", "z1*z6 + z2*z5 + z3*z4", "x^2 + x^3"]:
    sol = infer_weight_systems(parse_polynomial(text))
    print(f"{text:30s} {sol.kind:7s} representative {sol.representative}")
    # the cone basis lists (d, w1, ..., wn) directions spanning every solution
    for v in sol.cone_basis:
        print("    ", [str(x) for x in v])
