"""Buchberger's algorithm over Q and the Milnor number it yields.

Everything runs in the degree reverse lexicographic order.  For Jacobian
ideals of weighted homogeneous polynomials the ideal is graded, so the global
quotient dimension equals the local one at the origin.  Other inputs go
through :func:`local_quotient_dimension`, which measures
``dim Q[z]/(I + m^N)`` until two consecutive values agree; by Nakayama's
lemma this equals the length of the localization at the origin.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded
from .poly import Exponent, Polynomial, gradient, grevlex_key

INF = math.inf

Terms = Dict[Exponent, Fraction]


@dataclass(frozen=True)
class Budget:
    """Caps on processed S-pairs and on the size of any intermediate polynomial."""

    max_spairs: int = 20000
    max_terms: int = 5000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic degrevlex Groebner basis."""

    generators: Tuple[Polynomial, ...]
    nvars: int
    order: str = "grevlex"
    spairs: int = field(default=0, compare=False)

    @property
    def leading_monomials(self) -> Tuple[Exponent, ...]:
        return tuple(g.leading_term()[0] for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# ---------------------------------------------------------------- monomial helpers

def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _lead(p: Terms) -> Tuple[Exponent, Fraction]:
    m = max(p, key=grevlex_key)
    return m, p[m]


def _monic(p: Terms) -> Terms:
    _, c = _lead(p)
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _axpy(p: Terms, c: Fraction, shift: Exponent, q: Terms) -> None:
    """In place: p -= c * z^shift * q."""
    for m, v in q.items():
        e = tuple(x + y for x, y in zip(m, shift))
        s = p.get(e, 0) - c * v
        if s:
            p[e] = s
        else:
            p.pop(e, None)


def _reduce(p: Terms, basis: Sequence[Terms], leads: Sequence[Exponent], budget: Budget) -> Terms:
    """Full reduction of ``p`` by monic ``basis``."""
    p = dict(p)
    rem: Terms = {}
    while p:
        m, c = _lead(p)
        for g, lg in zip(basis, leads):
            if _divides(lg, m):
                _axpy(p, c, _sub(m, lg), g)
                if len(p) > budget.max_terms:
                    raise BudgetExceeded(f"intermediate polynomial exceeded {budget.max_terms} terms")
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: Terms, g: Terms, lf: Exponent, lg: Exponent) -> Terms:
    lcm = _lcm(lf, lg)
    out: Terms = {}
    _axpy(out, Fraction(-1), _sub(lcm, lf), f)
    _axpy(out, Fraction(1), _sub(lcm, lg), g)
    return out


def _interreduce(G: List[Terms], budget: Budget) -> List[Terms]:
    leads = [_lead(g)[0] for g in G]
    keep = []
    for i, (g, lg) in enumerate(zip(G, leads)):
        if any(j != i and _divides(leads[j], lg) and (leads[j] != lg or j < i) for j in range(len(G))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _reduce(g, others, [_lead(h)[0] for h in others], budget)
        out.append(_monic(r))
    out.sort(key=lambda g: grevlex_key(_lead(g)[0]))
    return out


def buchberger(gens: Sequence[Polynomial], budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses normal pair selection with the coprime-leading-term and chain
    criteria.  Raises :class:`BudgetExceeded` instead of returning a partial
    basis.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nvars
    if any(g.nvars != n for g in gens):
        raise ValueError("generators live in different polynomial rings")
    G: List[Terms] = [_monic(dict(g.items())) for g in gens if not g.is_zero()]
    if not G:
        raise ValueError("all generators are zero")
    leads = [_lead(g)[0] for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (grevlex_key(_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if any(
            k not in (i, j)
            and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        processed += 1
        if processed > budget.max_spairs:
            raise BudgetExceeded(f"more than {budget.max_spairs} S-pairs processed")
        r = _reduce(_spoly(G[i], G[j], li, lj), G, leads, budget)
        if r:
            r = _monic(r)
            G.append(r)
            leads.append(_lead(r)[0])
            k = len(G) - 1
            pairs |= {(a, k) for a in range(k)}
    reduced = _interreduce(G, budget)
    polys = tuple(Polynomial(n, g) for g in reduced)
    return GroebnerBasis(polys, n, spairs=processed)


def normal_form(p: Polynomial, gb: GroebnerBasis, budget: Budget = DEFAULT_BUDGET) -> Polynomial:
    """Remainder of ``p`` on division by ``gb``; zero iff ``p`` is in the ideal."""
    if p.nvars != gb.nvars:
        raise ValueError("variable counts differ")
    basis = [dict(g.items()) for g in gb.generators]
    r = _reduce(dict(p.items()), basis, gb.leading_monomials, budget)
    return Polynomial(p.nvars, r)


# ---------------------------------------------------------------- quotient dimension

def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """Every variable has a pure power among the leading monomials."""
    pure = set()
    for m in gb.leading_monomials:
        nz = [i for i, a in enumerate(m) if a]
        if len(nz) == 1:
            pure.add(nz[0])
        if not nz:
            return True  # unit ideal
    return len(pure) == gb.nvars


def standard_monomials(gb: GroebnerBasis) -> List[Exponent]:
    """Monomials outside the leading-term ideal; requires a finite staircase."""
    if not is_zero_dimensional(gb):
        raise ValueError("infinitely many standard monomials")
    leads = gb.leading_monomials
    if any(sum(m) == 0 for m in leads):
        return []
    n = gb.nvars
    bound = [INF] * n
    for m in leads:
        nz = [i for i, a in enumerate(m) if a]
        if len(nz) == 1:
            bound[nz[0]] = min(bound[nz[0]], m[nz[0]])
    out = []
    for alpha in itertools.product(*(range(int(b)) for b in bound)):
        if not any(_divides(m, alpha) for m in leads):
            out.append(alpha)
    return out


def quotient_dimension(gb: GroebnerBasis):
    """``dim Q[z]/I`` as an int, or ``math.inf``."""
    if not is_zero_dimensional(gb):
        return INF
    return len(standard_monomials(gb))


def _max_ideal_power(n: int, N: int) -> List[Polynomial]:
    out = []
    for combo in itertools.combinations_with_replacement(range(n), N):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.append(Polynomial.monomial(alpha))
    return out


@dataclass(frozen=True)
class LocalDimension:
    value: object  # int, or math.inf when no stabilization was seen
    truncation: int
    history: Tuple[int, ...]


def local_quotient_dimension(gens: Sequence[Polynomial], max_order: int = 30,
                             budget: Budget = DEFAULT_BUDGET) -> LocalDimension:
    """Length of ``O_n / I O_n`` at the origin via truncations ``I + m^N``.

    Stops at the first ``N`` with ``dim(I + m^N) == dim(I + m^(N+1))``.  If
    that never happens up to ``max_order`` the value is reported as infinite.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("all generators are zero")
    n = gens[0].nvars
    if any(g.constant_term() for g in gens):
        return LocalDimension(0, 0, (0,))
    history = []
    prev = None
    for N in range(1, max_order + 1):
        gb = buchberger(list(gens) + _max_ideal_power(n, N), budget)
        dim = quotient_dimension(gb)
        history.append(dim)
        if prev is not None and dim == prev:
            return LocalDimension(dim, N - 1, tuple(history))
        prev = dim
    return LocalDimension(INF, max_order, tuple(history))


# ---------------------------------------------------------------- Milnor number

def _is_graded(f: Polynomial) -> bool:
    from .weights import infer_weight_systems

    return infer_weight_systems(f).kind != "none"


def _check_critical(f: Polynomial):
    if f.constant_term():
        raise ValueError("f(0) != 0; translate so the germ vanishes at the origin")
    if any(g.constant_term() for g in gradient(f)):
        raise ValueError("the origin is not a critical point of f")


@dataclass(frozen=True)
class MilnorResult:
    mu: object  # int or math.inf
    method: str  # "graded" or "local-truncation"


def milnor_computation(f: Polynomial, budget: Budget = DEFAULT_BUDGET,
                       max_order: int = 30) -> MilnorResult:
    _check_critical(f)
    J = gradient(f)
    if not any(not g.is_zero() for g in J):
        return MilnorResult(INF, "graded")
    if _is_graded(f):
        return MilnorResult(quotient_dimension(buchberger(J, budget)), "graded")
    local = local_quotient_dimension(J, max_order, budget)
    return MilnorResult(local.value, "local-truncation")


def milnor_number(f: Polynomial, budget: Budget = DEFAULT_BUDGET, max_order: int = 30):
    """``dim O_n / J(f)`` at the origin (``math.inf`` when not isolated)."""
    return milnor_computation(f, budget, max_order).mu


@dataclass(frozen=True)
class IsolationCertificate:
    """Evidence for the isolated-singularity hypothesis.

    ``status`` is ``"proven"`` (with ``mu``), ``"assumed"`` or ``"refuted"``.
    """

    status: str
    mu: Optional[int] = None
    note: str = ""

    def __post_init__(self):
        if self.status not in ("proven", "assumed", "refuted"):
            raise ValueError(f"unknown certificate status {self.status!r}")
        if self.status == "proven" and not (isinstance(self.mu, int) and self.mu >= 1):
            raise ValueError("a proven certificate carries a positive Milnor number")

    @classmethod
    def proven(cls, mu: int, note: str = ""):
        return cls("proven", mu, note)

    @classmethod
    def assumed(cls, note: str = "isolatedness assumed, not checked"):
        return cls("assumed", None, note)

    @classmethod
    def refuted(cls, note: str = ""):
        return cls("refuted", None, note)


def is_isolated(f: Polynomial, budget: Budget = DEFAULT_BUDGET,
                max_order: int = 30) -> IsolationCertificate:
    try:
        res = milnor_computation(f, budget, max_order)
    except BudgetExceeded as exc:
        return IsolationCertificate.assumed(f"Groebner budget exhausted: {exc}")
    if res.mu != INF:
        return IsolationCertificate.proven(int(res.mu), res.method)
    if res.method == "graded":
        return IsolationCertificate.refuted("Jacobian quotient is infinite-dimensional")
    return IsolationCertificate.assumed(
        f"local dimension did not stabilize up to m^{max_order}; isolatedness undecided")
