"""
Milnor numbers from Groebner bases
==================================

For graded germs the Jacobian quotient is computed with one degrevlex basis
and compared with the product of ``d/w_i - 1``.  A germ that is not graded
needs the local count, which ignores critical points away from the origin.
"""

import itertools
import math

from lojexp import milnor_number, parse_polynomial
from lojexp.groebner import buchberger, quotient_dimension
from lojexp.poly import Polynomial, gradient

for exps in itertools.product(range(2, 5), repeat=2):
    f = Polynomial(2, {(exps[0], 0): 1, (0, exps[1]): 1})
    print(exps, milnor_number(f), math.prod(a - 1 for a in exps))

g = parse_polynomial("x^3 + y^3 + z^3 + x^2")
print("global count:", quotient_dimension(buchberger(gradient(g))))
print("local count: ", milnor_number(g))
