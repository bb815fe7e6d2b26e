"""Exact Lojasiewicz exponents of weighted homogeneous isolated singularities."""

__version__ = "0.1.0"

from .deform import (Deformation, DeformationVerdict, analyze_deformation,
                     check_mu_constant_by_degree, oracle_mu_samples, semi_weighted_lojasiewicz)
from .errors import (BudgetExceeded, HypothesisError, InconsistentResult, LojexpError,
                     PolynomialSyntaxError, WeightError)
from .exponent import (CoordinateClassification, ExponentReport, classify_coordinates,
                       kop_three_variable, lojasiewicz_exponent, milnor_orlik, sufficiency_degree)
from .groebner import (Budget, GroebnerBasis, IsolationCertificate, buchberger, is_isolated,
                       milnor_number, normal_form, quotient_dimension)
from .poly import (MonomialCurve, Polynomial, UnivariateSeries, compose_with_curve, graded_parts,
                   initial_form, parse_polynomial, partial_derivative, weighted_degree)
from .verify import (PathQuotient, RhoGeometry, path_quotient, sample_inequality_lower,
                     sample_inequality_upper, witness_search)
from .weights import (WeightSolution, WeightSystem, dual_weights, infer_weight_systems, is_strict,
                      is_weighted_homogeneous)
