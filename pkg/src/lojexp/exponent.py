"""Lojasiewicz exponent of (weak) weighted homogeneous isolated singularities.

Coordinates in :class:`CoordinateClassification` are numbered from 1, the way
the variables ``z1, ..., zn`` are named; every other API in the package uses
0-based indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .errors import HypothesisError, InconsistentResult, WeightError
from .groebner import IsolationCertificate
from .poly import Polynomial
from .weights import WeightSystem, is_strict, is_weighted_homogeneous

THEOREM_MAIN1 = "theorem-main1"
THEOREM_MAIN4 = "theorem-main4"
SPLITTING_LEMMA = "splitting-lemma"
COROLLARY_MAIN3 = "corollary-main3"


@dataclass(frozen=True)
class CoordinateClassification:
    maximal: Tuple[int, ...]  # M(w), decreasing = I_max_1, I_max_2, ...
    pairing: Tuple[Tuple[int, int], ...]  # (I_max_k, I_min_k)
    minimal: Tuple[int, ...]  # I(f), sorted
    eliminated: Tuple[int, ...]  # M(f), sorted
    ell: int
    reduced_weights: Optional[WeightSystem]
    surviving: Tuple[int, ...]

    def to_dict(self):
        return {
            "M_w": sorted(self.maximal),
            "pairing": [list(p) for p in self.pairing],
            "I_f": list(self.minimal),
            "M_f": list(self.eliminated),
            "ell": self.ell,
            "reduced_type": None if self.reduced_weights is None else self.reduced_weights.to_flag(),
        }


def _pair_monomial(n: int, i: int, j: int):
    alpha = [0] * n
    alpha[i - 1] += 1
    alpha[j - 1] += 1
    return tuple(alpha)


def classify_coordinates(f: Polynomial, ws: WeightSystem) -> CoordinateClassification:
    """Maximal coordinates, their minimal partners, and what survives elimination.

    A partner of ``z_k`` is an index ``i`` with ``z_i z_k`` in the support.
    Each maximal coordinate, taken in decreasing index order, gets the
    smallest partner not already used; with no partner it is its own.
    """
    if not is_weighted_homogeneous(f, ws):
        raise WeightError(f"the polynomial is not weighted homogeneous of type {ws}")
    n, d = ws.n, ws.degree
    support = set(f.support)
    maximal = tuple(sorted((i for i in range(1, n + 1) if d < 2 * ws.weights[i - 1]), reverse=True))
    used: List[int] = []
    pairing = []
    for k in maximal:
        partners = [i for i in range(1, n + 1) if _pair_monomial(n, i, k) in support]
        if not partners:
            choice = k
        else:
            free = [i for i in partners if i not in used]
            # all partners consumed only happens off the isolated locus
            choice = min(free) if free else k
        used.append(choice)
        pairing.append((k, choice))
    minimal = tuple(sorted(set(used)))
    eliminated = tuple(sorted(set(maximal) | set(minimal)))
    surviving = tuple(i for i in range(1, n + 1) if i not in eliminated)
    reduced = None
    if surviving:
        reduced = WeightSystem(d, tuple(ws.weights[i - 1] for i in surviving))
    return CoordinateClassification(maximal, tuple(pairing), minimal, eliminated,
                                    len(eliminated), reduced, surviving)


class MilnorOrlik(NamedTuple):
    value: Fraction
    is_integral: bool


def milnor_orlik(ws: WeightSystem) -> MilnorOrlik:
    """Product of ``d/w_i - 1``; flagged when it is not a positive integer."""
    value = Fraction(1)
    for w in ws.weights:
        value *= Fraction(ws.degree, w) - 1
    return MilnorOrlik(value, value.denominator == 1 and value >= 1)


def sufficiency_degree(L) -> int:
    """C^0-sufficiency degree ``floor(L) + 1``."""
    L = Fraction(L)
    if L <= 0:
        raise ValueError("the exponent must be positive")
    return math.floor(L) + 1


def strict_exponent(ws: WeightSystem) -> Fraction:
    return max(Fraction(ws.degree, w) - 1 for w in ws.weights)


def eliminated_exponent(f: Polynomial, ws: WeightSystem) -> Tuple[Fraction, str, CoordinateClassification]:
    """Exponent from the coordinate elimination; valid for strict input too."""
    cls = classify_coordinates(f, ws)
    if cls.ell == ws.n:
        return Fraction(1), SPLITTING_LEMMA, cls
    L = max(Fraction(ws.degree, ws.weights[i - 1]) - 1 for i in cls.surviving)
    return L, THEOREM_MAIN4, cls


@dataclass(frozen=True)
class ExponentReport:
    L: Fraction
    method: str
    weights: WeightSystem
    classification: Optional[CoordinateClassification]
    sufficiency_degree: int
    mu_milnor_orlik: Optional[Fraction] = None
    mu_groebner: Optional[int] = None
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self):
        cls = self.classification.to_dict() if self.classification else {}
        return {
            "L": str(self.L),
            "method": self.method,
            "type": self.weights.to_flag(),
            "M_w": cls.get("M_w", []),
            "I_f": cls.get("I_f", []),
            "M_f": cls.get("M_f", []),
            "ell": cls.get("ell", 0),
            "sufficiency_degree": str(self.sufficiency_degree),
            "mu_milnor_orlik": None if self.mu_milnor_orlik is None else str(self.mu_milnor_orlik),
            "mu_groebner": None if self.mu_groebner is None else str(self.mu_groebner),
            "warnings": list(self.warnings),
        }


def lojasiewicz_exponent(f: Polynomial, ws: WeightSystem,
                         cert: IsolationCertificate) -> ExponentReport:
    """Exact ``L(f)`` from the weights and, in the weak case, the support.

    Strict types give ``max_i d/w_i - 1``.  Otherwise the maximal and minimal
    coordinates are dropped and the same maximum is taken over the rest, or
    ``L = 1`` when nothing is left.
    """
    if cert.status == "refuted":
        raise HypothesisError("the singularity is not isolated; the exponent formula does not apply")
    if not is_weighted_homogeneous(f, ws):
        raise WeightError(f"the polynomial is not weighted homogeneous of type {ws}")
    ws = ws.normalized()
    warnings = []
    if is_strict(ws):
        L, method = strict_exponent(ws), THEOREM_MAIN1
        cls = classify_coordinates(f, ws)
    else:
        L, method, cls = eliminated_exponent(f, ws)
    mo = milnor_orlik(ws)
    if not mo.is_integral:
        warnings.append(f"Milnor-Orlik product {mo.value} is not a positive integer; "
                        "the isolatedness hypothesis looks violated")
    mu_g = cert.mu if cert.status == "proven" else None
    if cert.status == "assumed":
        warnings.append(cert.note or "isolatedness assumed")
    if mu_g is not None and mo.value != mu_g:
        raise InconsistentResult(f"Groebner mu = {mu_g} but Milnor-Orlik gives {mo.value}")
    return ExponentReport(L, method, ws, cls, sufficiency_degree(L), mo.value, mu_g, tuple(warnings))


def kop_three_variable(f: Polynomial, ws: WeightSystem, mu: int) -> Fraction:
    """``min(max_i d/w_i - 1, mu)``, the three-variable closed form."""
    if f.nvars != 3 or ws.n != 3:
        raise ValueError("the three-variable formula needs exactly three variables")
    return min(strict_exponent(ws), Fraction(mu))
