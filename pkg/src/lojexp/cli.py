"""Command-line front end.

Exit codes:

====  ==========================================================
0     success
1     unexpected internal error
2     command-line usage error
3     polynomial syntax error
4     no admissible weight system / supplied type does not fit
5     a theorem hypothesis fails (singularity not isolated, ...)
6     resource budget exhausted, result indeterminate
7     two independent computations disagree
====  ==========================================================
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .deform import Deformation, analyze_deformation
from .errors import (BudgetExceeded, HypothesisError, InconsistentResult, PolynomialSyntaxError,
                     WeightError)
from .exponent import lojasiewicz_exponent
from .groebner import Budget, IsolationCertificate, is_isolated, milnor_computation
from .poly import parse_polynomial
from .verify import sample_inequality_lower, sample_inequality_upper, witness_search
from .weights import WeightSystem, infer_weight_systems, is_strict, is_weighted_homogeneous

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_WEIGHTS = 4
EXIT_HYPOTHESIS = 5
EXIT_BUDGET = 6
EXIT_INCONSISTENT = 7

DEFAULT_RADII = (1e-1, 1e-2, 1e-3)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, PolynomialSyntaxError):
        return EXIT_PARSE
    if isinstance(exc, WeightError):
        return EXIT_WEIGHTS
    if isinstance(exc, HypothesisError):
        return EXIT_HYPOTHESIS
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, InconsistentResult):
        return EXIT_INCONSISTENT
    if isinstance(exc, ValueError):
        return EXIT_PARSE
    return EXIT_INTERNAL


@dataclass
class AnalysisRequest:
    polynomial: str
    variables: Optional[List[str]] = None
    type: Optional[WeightSystem] = None
    compare_types: List[WeightSystem] = field(default_factory=list)
    assume_isolated: bool = False
    verify: bool = True
    milnor: bool = True
    budget: Budget = Budget()
    seed: int = 0
    samples: int = 1000
    radii: Tuple[float, ...] = DEFAULT_RADII
    complex_: bool = False
    witness_budget: int = 64


def _num(x):
    if x is None:
        return None
    if x == math.inf:
        return "inf"
    return str(Fraction(x))


def run_analyze(req: AnalysisRequest) -> Tuple[dict, int]:
    """Full pipeline for one polynomial; returns (report, exit code).

    Errors never escape: they are recorded in ``report["error"]`` with the
    matching exit code.
    """
    report = {
        "input": {"polynomial": req.polynomial, "variables": req.variables,
                  "type": req.type.to_flag() if req.type else None},
        "warnings": [],
        "error": None,
    }
    try:
        f = parse_polynomial(req.polynomial, req.variables)
        report["input"]["variables"] = req.variables or None
        solution = infer_weight_systems(f)
        report["weight_solution"] = solution.to_dict()
        if req.type is not None:
            ws = req.type
            if not is_weighted_homogeneous(f, ws):
                raise WeightError(f"the polynomial is not weighted homogeneous of type {ws}")
        elif solution.kind == "none":
            raise WeightError("no positive weight system makes the polynomial weighted homogeneous")
        else:
            ws = solution.representative
            if solution.kind == "family":
                report["warnings"].append(
                    f"several weight systems fit; using representative {ws}. "
                    "The weak-case exponent may depend on the chosen type.")
        ws = ws.normalized()
        report["type"] = ws.to_flag()
        report["strict"] = is_strict(ws)

        if req.assume_isolated and not req.milnor:
            cert = IsolationCertificate.assumed("isolatedness assumed on request")
        else:
            cert = is_isolated(f, req.budget)
            if cert.status == "assumed" and not req.assume_isolated:
                raise BudgetExceeded(cert.note + "; rerun with --assume-isolated to proceed")
        report["isolation"] = {"status": cert.status, "mu": cert.mu, "note": cert.note}
        if cert.status == "refuted":
            raise HypothesisError("the singularity at the origin is not isolated")

        exp = lojasiewicz_exponent(f, ws, cert)
        report["exponent"] = exp.to_dict()
        report["classification"] = exp.classification.to_dict() if exp.classification else None
        report["warnings"].extend(exp.warnings)
        if req.compare_types:
            report["other_types"] = []
            for other in req.compare_types:
                alt = lojasiewicz_exponent(f, other, cert)
                report["other_types"].append({"type": other.to_flag(), "L": str(alt.L),
                                              "method": alt.method})

        if req.verify:
            best = witness_search(f, ws, req.witness_budget, req.seed)
            lower = sample_inequality_lower(f, ws, req.radii, req.samples, req.seed, req.complex_)
            upper = sample_inequality_upper(f, ws, req.radii, req.samples, req.seed, req.complex_)
            attained = best is not None and best.value == exp.L
            if best is not None and best.value > exp.L:
                raise InconsistentResult(f"arc quotient {best.value} exceeds the exponent {exp.L}")
            report["verification"] = {
                "seed": req.seed,
                "witness": None if best is None else best.to_dict(),
                "status": "exponent" if attained else "lower bound",
                "lower_sampling": lower.to_dict(),
                "upper_sampling": upper.to_dict(),
            }
            if not attained:
                report["warnings"].append("no candidate arc attained the exponent; "
                                          "the witness is only a lower bound")
        return report, EXIT_OK
    except Exception as exc:  # noqa: BLE001 - every failure becomes a report
        code = exit_code_for(exc)
        report["error"] = {"type": type(exc).__name__, "message": str(exc), "exit_code": code}
        return report, code


def _parse_batch_line(line: str, defaults: AnalysisRequest) -> AnalysisRequest:
    poly, _, typ = line.partition(";")
    req = AnalysisRequest(**{**defaults.__dict__})
    req.polynomial = poly.strip()
    req.type = WeightSystem.parse(typ.strip()) if typ.strip() else None
    return req


def _batch_worker(args):
    line, defaults = args
    try:
        req = _parse_batch_line(line, defaults)
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        return {"input": {"line": line}, "warnings": [],
                "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}, code
    return run_analyze(req)


def run_batch(lines: Sequence[str], defaults: AnalysisRequest, jobs: int = 1):
    """Analyze one request per line (``polynomial[;d:w1,...]``), in input order.

    Blank lines and lines starting with ``#`` are skipped.
    """
    work = [(ln.strip(), defaults) for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_batch_worker, work)
    else:
        for item in work:
            yield _batch_worker(item)


# ---------------------------------------------------------------- formatting

def _text_analyze(rep: dict) -> str:
    lines = [f"polynomial: {rep['input']['polynomial']}"]
    if rep.get("error"):
        lines.append(f"error ({rep['error']['type']}): {rep['error']['message']}")
        return "\n".join(lines)
    exp = rep["exponent"]
    lines.append(f"type: {rep['type']}  ({'strict' if rep['strict'] else 'weak'})")
    lines.append(f"M(w) = {exp['M_w']}  I(f) = {exp['I_f']}  M(f) = {exp['M_f']}  ell = {exp['ell']}")
    lines.append(f"L(f) = {exp['L']}  [{exp['method']}]")
    lines.append(f"C0-sufficiency degree = {exp['sufficiency_degree']}")
    lines.append(f"mu (Milnor-Orlik) = {exp['mu_milnor_orlik']}  mu (Groebner) = {exp['mu_groebner']}")
    for other in rep.get("other_types", []):
        lines.append(f"under type {other['type']}: L = {other['L']} [{other['method']}]")
    ver = rep.get("verification")
    if ver:
        w = ver["witness"]
        lines.append(f"witness arc: a = ({', '.join(w['coefficients'])}), m = {w['exponents']}, "
                     f"quotient = {w['quotient']} via {w['family']} -> {ver['status']}")
        lo, up = ver["lower_sampling"], ver["upper_sampling"]
        lines.append("lower ratio minima: " + ", ".join(f"{x:.4g}" for x in lo["extrema"]))
        lines.append("upper ratio maxima: " + ", ".join(f"{x:.4g}" for x in up["extrema"]))
    for warn in rep.get("warnings", []):
        lines.append(f"warning: {warn}")
    return "\n".join(lines)


def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- argument parsing

def _type_arg(text):
    try:
        return WeightSystem.parse(text)
    except WeightError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _floats(text):
    return tuple(float(x) for x in text.split(","))


def _vars(text):
    return [v.strip() for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lojexp", description=(
        "Lojasiewicz exponent, Milnor number and C0-sufficiency degree of weighted "
        "homogeneous isolated singularities, with independent verification."))
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=_vars, help="comma-separated variable names, in order")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-spairs", type=int, default=Budget.max_spairs)
    common.add_argument("--max-terms", type=int, default=Budget.max_terms)
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--radii", type=_floats, default=DEFAULT_RADII)
    sampling.add_argument("--samples", type=int, default=1000)
    sampling.add_argument("--seed", type=int, default=0)
    sampling.add_argument("--complex", dest="complex_", action="store_true",
                          help="sample complex points instead of real ones")
    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", type=_type_arg, help="weight system as d:w1,...,wn")
    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument("--assume-isolated", action="store_true")
    analysis.add_argument("--no-verify", dest="verify", action="store_false")
    analysis.add_argument("--compare-type", type=_type_arg, action="append", default=[],
                          help="also report L under this type (repeatable)")

    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common, sampling, typed, analysis],
                       help="exponent, Milnor number and verification")
    a.add_argument("polynomial")
    w = sub.add_parser("infer-weights", parents=[common], help="weight systems fitting f")
    w.add_argument("polynomial")
    m = sub.add_parser("milnor", parents=[common], help="Milnor number via Groebner bases")
    m.add_argument("polynomial")
    v = sub.add_parser("verify", parents=[common, sampling, typed], help="arc witnesses and sampling")
    v.add_argument("polynomial")
    v.add_argument("--witness-budget", type=int, default=64)
    d = sub.add_parser("deform", parents=[common, typed], help="mu-constancy of f + t g")
    d.add_argument("polynomial")
    d.add_argument("--perturbation", required=True)
    d.add_argument("--t-samples", default="0,1,2", help="comma-separated rationals")
    d.add_argument("--seed", type=int, default=0)
    b = sub.add_parser("batch", parents=[common, sampling, analysis], help="one request per line")
    b.add_argument("path")
    b.add_argument("--jobs", type=int, default=1)
    return p


def _budget(args) -> Budget:
    return Budget(args.max_spairs, args.max_terms)


def _request(args, polynomial) -> AnalysisRequest:
    return AnalysisRequest(
        polynomial=polynomial, variables=args.vars, type=getattr(args, "type", None),
        compare_types=args.compare_type, assume_isolated=args.assume_isolated,
        verify=args.verify, budget=_budget(args), seed=args.seed, samples=args.samples,
        radii=args.radii, complex_=args.complex_)


def _cmd_infer(args):
    f = parse_polynomial(args.polynomial, args.vars)
    sol = infer_weight_systems(f)
    rep = sol.to_dict()
    text = f"kind: {sol.kind}"
    if sol.representative:
        text += f"\nrepresentative: {sol.representative}  (strict: {is_strict(sol.representative)})"
    if sol.cone_basis:
        text += "\nbasis (d, w1, ...): " + "; ".join(
            "(" + ", ".join(map(str, v)) + ")" for v in sol.cone_basis)
    _emit(rep, args.format, text)
    return EXIT_OK if sol.kind != "none" else EXIT_WEIGHTS


def _cmd_milnor(args):
    f = parse_polynomial(args.polynomial, args.vars)
    res = milnor_computation(f, _budget(args))
    rep = {"mu": _num(res.mu), "method": res.method, "isolated": res.mu != math.inf}
    _emit(rep, args.format, f"mu = {rep['mu']}  ({res.method})")
    return EXIT_OK if res.mu != math.inf else EXIT_HYPOTHESIS


def _cmd_verify(args):
    f = parse_polynomial(args.polynomial, args.vars)
    ws = args.type or infer_weight_systems(f).representative
    if ws is None:
        raise WeightError("no positive weight system makes the polynomial weighted homogeneous")
    if not is_weighted_homogeneous(f, ws):
        raise WeightError(f"the polynomial is not weighted homogeneous of type {ws}")
    best = witness_search(f, ws, args.witness_budget, args.seed)
    lower = sample_inequality_lower(f, ws, args.radii, args.samples, args.seed, args.complex_)
    upper = sample_inequality_upper(f, ws, args.radii, args.samples, args.seed, args.complex_)
    rep = {"type": ws.to_flag(), "seed": args.seed,
           "witness": None if best is None else best.to_dict(),
           "lower_sampling": lower.to_dict(), "upper_sampling": upper.to_dict()}
    text = (f"type {ws}\nbest arc quotient: {best.value if best else 'none'}"
            f" ({best.family if best else ''})\n"
            f"lower minima: {', '.join(f'{x:.4g}' for x in lower.extrema)} (spread {lower.spread:.3g})\n"
            f"upper maxima: {', '.join(f'{x:.4g}' for x in upper.extrema)} (spread {upper.spread:.3g})")
    _emit(rep, args.format, text)
    return EXIT_OK


def _cmd_deform(args):
    f = parse_polynomial(args.polynomial, args.vars)
    names = args.vars
    if names is None:
        from .poly import _infer_variables, _tokenize
        names = _infer_variables([v for k, v, _ in _tokenize(args.polynomial) if k == "id"])
    g = parse_polynomial(args.perturbation, names)
    ws = args.type or infer_weight_systems(f).representative
    if ws is None:
        raise WeightError("no positive weight system makes the base weighted homogeneous")
    ts = [Fraction(t) for t in args.t_samples.split(",") if t.strip()]
    verdict = analyze_deformation(Deformation(f, g), ws, ts, seed=args.seed, budget=_budget(args))
    rep = {"type": ws.to_flag(), **verdict.to_dict()}
    text = (f"type {ws}\nmu-constant by degree: {verdict.mu_constant_by_degree}\n"
            f"violating monomials: {[list(a) for a in verdict.violating_monomials]}\n"
            f"L along the family: {verdict.L_family}\n"
            f"mu(f) = {verdict.mu_base}; samples: "
            + ", ".join(f"t={t}: {mu}" for t, mu in verdict.oracle_mu_samples))
    _emit(rep, args.format, text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        rep, code = run_analyze(_request(args, args.polynomial))
        _emit(rep, args.format, _text_analyze(rep))
        return code
    if args.command == "batch":
        defaults = _request(args, "")
        defaults.type = None
        try:
            with open(args.path) as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        worst = EXIT_OK
        for rep, code in run_batch(lines, defaults, args.jobs):
            _emit(rep, args.format, _text_analyze(rep) + "\n")
            worst = worst or code
        return worst
    handlers = {"infer-weights": _cmd_infer, "milnor": _cmd_milnor, "verify": _cmd_verify,
                "deform": _cmd_deform}
    try:
        return handlers[args.command](args)
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
