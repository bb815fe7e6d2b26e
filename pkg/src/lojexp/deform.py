"""One-parameter deformations ``F_t = f + t g`` and semi-weighted-homogeneous germs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import HypothesisError, WeightError
from .exponent import COROLLARY_MAIN3, ExponentReport, lojasiewicz_exponent
from .groebner import DEFAULT_BUDGET, Budget, IsolationCertificate, is_isolated, milnor_number
from .poly import Polynomial, initial_form, weighted_degree
from .weights import WeightSystem, is_strict, is_weighted_homogeneous


@dataclass(frozen=True)
class Deformation:
    base: Polynomial
    perturbation: Polynomial

    def __post_init__(self):
        if self.base.nvars != self.perturbation.nvars:
            raise ValueError("base and perturbation use different variable counts")
        if self.perturbation.constant_term():
            raise ValueError("the perturbation must vanish at the origin")

    def at(self, t) -> Polynomial:
        return self.base + self.perturbation * Fraction(t)


@dataclass(frozen=True)
class DeformationVerdict:
    mu_constant_by_degree: bool
    violating_monomials: Tuple[Tuple[int, ...], ...]
    L_family: Optional[Fraction] = None
    oracle_mu_samples: Tuple[Tuple[Fraction, object], ...] = ()
    mu_base: Optional[int] = None
    conflicts: Tuple[Tuple[Fraction, object], ...] = ()

    def to_dict(self):
        return {
            "mu_constant_by_degree": self.mu_constant_by_degree,
            "violating_monomials": [list(a) for a in self.violating_monomials],
            "L_family": None if self.L_family is None else str(self.L_family),
            "mu_base": None if self.mu_base is None else str(self.mu_base),
            "oracle_mu_samples": [[str(t), str(mu)] for t, mu in self.oracle_mu_samples],
            "conflicts": [[str(t), str(mu)] for t, mu in self.conflicts],
        }


def check_mu_constant_by_degree(defo: Deformation, ws: WeightSystem,
                                cert: Optional[IsolationCertificate] = None) -> DeformationVerdict:
    """Degree criterion: every monomial of ``g`` has weighted degree at least ``d``.

    When it holds, ``L_family`` is the exponent of the base, which then
    stays constant along the family.
    """
    f, g = defo.base, defo.perturbation
    if not is_weighted_homogeneous(f, ws):
        raise WeightError(f"the base is not weighted homogeneous of type {ws}")
    cert = cert or is_isolated(f)
    if cert.status == "refuted":
        raise HypothesisError("the base singularity is not isolated")
    bad = tuple(alpha for alpha in g.support
                if sum(a * w for a, w in zip(alpha, ws.weights)) < ws.degree)
    L = None
    if not bad:
        L = lojasiewicz_exponent(f, ws, cert).L
    return DeformationVerdict(not bad, bad, L, mu_base=cert.mu)


def oracle_mu_samples(defo: Deformation, t_values: Sequence,
                      budget: Budget = DEFAULT_BUDGET) -> List[Tuple[Fraction, object]]:
    """Local Milnor number of ``F_t`` at each sampled ``t``."""
    return [(Fraction(t), milnor_number(defo.at(t), budget)) for t in t_values]


def analyze_deformation(defo: Deformation, ws: WeightSystem, t_values: Sequence,
                        seed: int = 0, retries: int = 3,
                        budget: Budget = DEFAULT_BUDGET) -> DeformationVerdict:
    """Degree criterion plus Groebner corroboration at sampled parameters.

    If the criterion holds but some sample disagrees with ``mu(f)``, fresh
    random parameters are tried and every conflicting sample is kept in the
    verdict rather than overriding the criterion.
    """
    cert = is_isolated(defo.base, budget)
    verdict = check_mu_constant_by_degree(defo, ws, cert)
    samples = oracle_mu_samples(defo, t_values, budget)
    conflicts = []
    if verdict.mu_constant_by_degree and cert.mu is not None:
        conflicts = [(t, mu) for t, mu in samples if mu != cert.mu]
        rng = np.random.default_rng(seed)
        for _ in range(retries if conflicts else 0):
            t = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 8)))
            mu = milnor_number(defo.at(t), budget)
            samples.append((t, mu))
            if mu != cert.mu:
                conflicts.append((t, mu))
    return DeformationVerdict(verdict.mu_constant_by_degree, verdict.violating_monomials,
                              verdict.L_family, tuple(samples), cert.mu, tuple(conflicts))


def semi_weighted_lojasiewicz(f: Polynomial, ws: WeightSystem,
                              budget: Budget = DEFAULT_BUDGET) -> ExponentReport:
    """Exponent of a germ whose weighted initial form is an isolated singularity.

    ``ws.degree`` must equal the weighted degree of ``f``; the answer is the
    exponent of the initial form.
    """
    d = weighted_degree(f, ws)
    if d != ws.degree:
        raise WeightError(f"weighted degree of f is {d}, but the type says {ws.degree}")
    if not is_strict(ws):
        raise HypothesisError(f"need d >= 2 w_i for every weight; type {ws} is weak")
    head = initial_form(f, ws)
    cert = is_isolated(head, budget)
    if cert.status != "proven":
        raise HypothesisError(f"the initial form {head} is not a proven isolated singularity")
    report = lojasiewicz_exponent(head, ws, cert)
    return ExponentReport(report.L, COROLLARY_MAIN3, report.weights, report.classification,
                          report.sufficiency_degree, report.mu_milnor_orlik, report.mu_groebner,
                          report.warnings)
