import itertools
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lojexp.errors import BudgetExceeded
from lojexp.groebner import (Budget, IsolationCertificate, buchberger, is_isolated,
                             local_quotient_dimension, milnor_number, normal_form,
                             quotient_dimension, standard_monomials)
from lojexp.poly import Polynomial, gradient

from conftest import P, WEAK4, brieskorn, polynomials

XY = ["x", "y"]


def basis_set(gb):
    return {g for g in gb.generators}


# ---------------------------------------------------------------- independent oracles

def sympy_reduced_basis(polys, names):
    syms = sympy.symbols(names)
    exprs = [sympy.sympify(p.to_string(names).replace("^", "**"), locals=dict(zip(names, syms)))
             for p in polys]
    G = sympy.groebner(exprs, *syms, order="grevlex", domain="QQ")
    out = set()
    for g in G.exprs:
        poly = sympy.Poly(g, *syms)
        lc = poly.coeffs(order="grevlex")[0]
        out.add(Polynomial(len(names), {m: Fraction(str(c / lc)) for m, c in poly.terms()}))
    return out


def truncated_dimension(gens, N):
    """dim Q[z]/(I + m^N) by Macaulay-matrix rank; no Groebner bases involved."""
    n = gens[0].nvars
    monos = [a for d in range(N) for a in _monomials_of_degree(n, d)]
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        for m in monos:
            row = [QQ(0)] * len(monos)
            hit = False
            for alpha, c in g.items():
                e = tuple(x + y for x, y in zip(alpha, m))
                if sum(e) < N:
                    row[col[e]] = QQ(c.numerator, c.denominator)
                    hit = True
            if hit:
                rows.append(row)
    if not rows:
        return len(monos)
    M = DomainMatrix(rows, (len(rows), len(monos)), QQ)
    return len(monos) - M.rank()


def _monomials_of_degree(n, d):
    for combo in itertools.combinations_with_replacement(range(n), d):
        a = [0] * n
        for i in combo:
            a[i] += 1
        yield tuple(a)


def local_mu_oracle(f, start=2, cap=20):
    J = [g for g in gradient(f) if not g.is_zero()]
    prev = None
    for N in range(start, cap):
        d = truncated_dimension(J, N)
        if d == prev:
            return d
        prev = d
    raise AssertionError("oracle did not stabilize")


# ---------------------------------------------------------------- buchberger

def test_monic_normalization():
    gb = buchberger([P("3*x^2", XY), P("3*y^2", XY)])
    assert basis_set(gb) == {P("x^2", XY), P("y^2", XY)}


def test_jacobian_of_cubic_pair():
    gb = buchberger(gradient(P("x^3 + y^3")))
    assert basis_set(gb) == {P("x^2", XY), P("y^2", XY)}


def test_linear_elimination():
    gb = buchberger([P("x + y", XY), P("y", XY)])
    assert basis_set(gb) == {P("x", XY), P("y", XY)}


def test_rejects_all_zero_and_mixed_rings():
    with pytest.raises(ValueError):
        buchberger([Polynomial.zero(2)])
    with pytest.raises(ValueError):
        buchberger([P("x", ["x"]), P("x", XY)])


def test_budget_is_reported():
    f = P("x^5*y + y^4*z^3 + z^7 + x^3*y^3*z + x*y*z^2", ["x", "y", "z"])
    with pytest.raises(BudgetExceeded):
        buchberger(gradient(f), Budget(max_spairs=2))
    with pytest.raises(BudgetExceeded):
        buchberger(gradient(f), Budget(max_terms=2))


@pytest.mark.parametrize("text", [
    "x^3 + y^3 + x*y", "x^2*y + y^4 + x^3", "x^4 + x^2*y^2 + y^5 - x*y", "x^3*y + y^2 + x^5",
])
def test_matches_sympy_groebner(text):
    J = gradient(P(text))
    assert basis_set(buchberger(J)) == sympy_reduced_basis(J, XY)


@settings(max_examples=100, deadline=None)
@given(st.lists(polynomials(2, max_terms=3, max_exp=3, bound=4), min_size=1, max_size=3))
def test_random_ideals_match_sympy(gens):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    assert basis_set(buchberger(gens)) == sympy_reduced_basis(gens, XY)


# ---------------------------------------------------------------- normal forms

def test_normal_form_examples():
    gb = buchberger([P("x^2", XY), P("y^2", XY)])
    assert normal_form(P("x^2", XY), gb).is_zero()
    assert normal_form(P("x*y", XY), gb) == P("x*y", XY)
    assert normal_form(P("x^2 + x*y", XY), gb) == P("x*y", XY)


@settings(max_examples=100, deadline=None)
@given(st.lists(polynomials(3, max_terms=3, max_exp=3, bound=4), min_size=1, max_size=3),
       polynomials(3, max_terms=4, max_exp=4))
def test_normal_form_idempotent_and_sound(gens, p):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    gb = buchberger(gens)
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r
    for g in gens:
        assert normal_form(g, gb).is_zero()
    # p - r lies in the ideal
    assert normal_form(p - r, gb).is_zero()


# ---------------------------------------------------------------- quotient dimension

def test_quotient_dimension_examples():
    gb = buchberger([P("x^2", XY), P("y^2", XY)])
    assert sorted(standard_monomials(gb)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert quotient_dimension(gb) == 4
    assert quotient_dimension(buchberger([P("x", XY)])) == math.inf
    assert quotient_dimension(buchberger(gradient(P("x^3 + y^3 + z^3")))) == 8


def test_quotient_dimension_generator_order_invariant():
    J = gradient(P("x^2*y + y^4 + z^3 + x*z^2", ["x", "y", "z"]))
    dims = {quotient_dimension(buchberger(list(p))) for p in itertools.permutations(J)}
    assert len(dims) == 1


def staircase_count(exps):
    """Brute-force count of monomials outside (z_i^(a_i - 1))."""
    return sum(1 for _ in itertools.product(*(range(a - 1) for a in exps)))


@pytest.mark.parametrize("exps", [e for n in (2, 3) for e in itertools.product(range(2, 6), repeat=n)])
def test_brieskorn_staircase(exps):
    assert milnor_number(brieskorn(exps)) == staircase_count(exps) == math.prod(a - 1 for a in exps)


# ---------------------------------------------------------------- Milnor number

def test_milnor_examples():
    assert milnor_number(P(WEAK4)) == 16
    assert milnor_number(P("x^2 + y^2")) == 1
    assert milnor_number(P("x^2 + y^3")) == 2


def test_milnor_requires_critical_point():
    with pytest.raises(ValueError):
        milnor_number(P("x + y^2"))
    with pytest.raises(ValueError):
        milnor_number(P("1 + x^2"))


@pytest.mark.parametrize("text, names", [
    ("x^3 + y^3 + z^3 + x^2", ["x", "y", "z"]),
    ("x^2 + y^3 + x^3", XY),
    ("x^2 + y^3 + y^4", XY),
    ("x^3 + y^3 + x^2*y^2 + x^4", XY),
    ("x^2*y + y^4 + x^2*y^2", XY),
    ("x^3 + y^3 + z^3 + x*y*z", ["x", "y", "z"]),
])
def test_local_milnor_matches_linear_algebra_oracle(text, names):
    f = P(text, names)
    assert milnor_number(f) == local_mu_oracle(f)


def test_local_differs_from_global_when_other_critical_points_exist():
    f = P("x^3 + y^3 + z^3 + x^2", ["x", "y", "z"])
    J = gradient(f)
    assert quotient_dimension(buchberger(J)) == 8  # global count includes (-2/3, 0, 0)
    assert milnor_number(f) == 4
    assert local_quotient_dimension(J).value == 4


def test_isolation_certificates():
    cert = is_isolated(P("x^3 + y^3 + z^3"))
    assert cert == IsolationCertificate.proven(8, cert.note)
    assert is_isolated(P("x*y", ["x", "y", "z"])).status == "refuted"
    f = P("x^5*y + y^4*z^3 + z^7 + x^3*y^3*z", ["x", "y", "z"])
    assert is_isolated(f, Budget(max_spairs=1)).status == "assumed"


def test_non_graded_non_isolated_is_assumed():
    # z-axis is critical; the truncations never stabilize
    cert = is_isolated(P("x^2 + y^2 + x^3", ["x", "y", "z"]), max_order=6)
    assert cert.status == "assumed"


def test_certificate_validation():
    with pytest.raises(ValueError):
        IsolationCertificate("proven", None)
    with pytest.raises(ValueError):
        IsolationCertificate("maybe")
