from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lojexp.poly import Polynomial, parse_polynomial
from lojexp.weights import WeightSystem

WEAK4 = "z1*z4 + z1^10 + z2^5 + z3^5"
WEAK6 = "z1*z6 + z1^12 + z2*z5 + z3^4 + z4^3 + z2^6"
PAIRED6 = "z1*z6 + z2*z5 + z3*z4"


def P(text, variables=None):
    return parse_polynomial(text, variables)


def brieskorn(exps):
    n = len(exps)
    return Polynomial(n, {tuple(a if j == i else 0 for j in range(n)): 1 for i, a in enumerate(exps)})


def brieskorn_corpus():
    out = []
    for a in range(2, 6):
        for b in range(2, 6):
            out.append((a, b))
            for c in range(2, 6):
                out.append((a, b, c))
    return out


# weighted homogeneous isolated singularities with their types
CORPUS = [
    (WEAK4, WeightSystem(10, (1, 2, 2, 9))),
    (WEAK6, WeightSystem(12, (1, 2, 3, 4, 10, 11))),
    (PAIRED6, WeightSystem(12, (1, 2, 3, 9, 10, 11))),
    (PAIRED6, WeightSystem(2, (1, 1, 1, 1, 1, 1))),
    ("x^3 + y^3 + z^3", WeightSystem(3, (1, 1, 1))),
    ("x^2 + y^3 + z^6", WeightSystem(6, (3, 2, 1))),
    ("x^2 + y^3", WeightSystem(6, (3, 2))),
    ("x^2*y + y^4", WeightSystem(8, (3, 2))),
    ("x^3*y + y^2", WeightSystem(6, (1, 3))),
    ("x*y + z^3", WeightSystem(6, (3, 3, 2))),
    ("x*z + y^4", WeightSystem(4, (1, 3, 1))),
    ("x^2 + y^2 + z^2", WeightSystem(2, (1, 1, 1))),
    ("x^4 + y^4 + z^2", WeightSystem(4, (1, 1, 2))),
    ("x^2*y + y^3*z + z^4 + w*v", WeightSystem(8, (3, 2, 2, 6, 2))),
]


@pytest.fixture
def weak4():
    return P(WEAK4), WeightSystem(10, (1, 2, 2, 9))


def small_rationals(bound=6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def polynomials(nvars, max_terms=5, max_exp=4, bound=6):
    """Hypothesis strategy for small sparse polynomials in ``nvars`` variables."""
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * nvars), small_rationals(bound))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: sum((Polynomial.monomial(a, c) for a, c in ts), Polynomial.zero(nvars)))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
