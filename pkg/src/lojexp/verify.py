"""Independent checks on the exponent: exact arc quotients and sphere sampling.

Exact side: along a monomial arc ``phi`` the ratio
``ord(grad f(phi(t))) / ord(phi(t))`` is a lower bound for ``L(f)``.
:func:`witness_search` maximizes it over coordinate axes, weight-action
curves ``t . a`` and polar points, and should land exactly on ``L(f)``.

Numeric side: the weighted gradient norm
``||grad_w f||_w = (sum_i |rho^w_i df/dz_i|^2)^(1/2)`` compared with powers
of ``rho(z) = (sum_i |z_i|^(2/w_i))^(1/2)`` on the spheres ``rho = r``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import LojexpError
from .exponent import classify_coordinates
from .poly import MonomialCurve, Polynomial, compose_with_curve, gradient, weighted_degree
from .weights import WeightSystem, is_strict, is_weighted_homogeneous

INF = math.inf

POLAR_GRID = tuple(sorted({Fraction(p, q) for p in range(-3, 4) for q in (1, 2, 3)}))


class NonFiniteSample(LojexpError, FloatingPointError):
    def __init__(self, point, value):
        self.point = point
        self.value = value
        super().__init__(f"non-finite value {value} at sample {point}")


# ---------------------------------------------------------------- exact arc quotients

@dataclass(frozen=True)
class PathQuotient:
    curve: MonomialCurve
    numerator: object  # int or math.inf
    denominator: int
    family: str = ""

    @property
    def value(self):
        if self.numerator == INF:
            return INF
        return Fraction(self.numerator, self.denominator)

    def to_dict(self):
        return {
            "coefficients": [str(a) for a in self.curve.coefficients],
            "exponents": list(self.curve.exponents),
            "ord_grad": "inf" if self.numerator == INF else str(self.numerator),
            "ord_curve": str(self.denominator),
            "quotient": "inf" if self.value == INF else str(self.value),
            "family": self.family,
        }


def path_quotient(f: Polynomial, curve: MonomialCurve, grad: Optional[Sequence[Polynomial]] = None,
                  family: str = "") -> PathQuotient:
    """Exact ``ord(grad f o phi) / ord(phi)``; infinite when phi lies in the critical locus."""
    if curve.nvars != f.nvars:
        raise ValueError("curve and polynomial have different variable counts")
    grad = gradient(f) if grad is None else grad
    num = min(compose_with_curve(g, curve).order for g in grad)
    return PathQuotient(curve, num, curve.order, family)


class _GradientTable:
    """Exponent matrices of the partial derivatives, for batched orders."""

    def __init__(self, f: Polynomial):
        self.grad = gradient(f)
        self.tables = [(np.array(g.support, dtype=np.int64).reshape(-1, f.nvars), g) for g in self.grad]

    def orders(self, coeffs: Sequence[Sequence[Fraction]], exps: np.ndarray) -> np.ndarray:
        """ord(grad f o phi) for each curve; exact, ties resolved symbolically."""
        m = len(coeffs)
        zero = np.array([[a == 0 for a in row] for row in coeffs], dtype=bool)
        best = np.full(m, np.iinfo(np.int64).max, dtype=np.int64)
        for A, g in self.tables:
            if A.shape[0] == 0:
                continue
            E = exps @ A.T  # (m, terms)
            dead = (zero.astype(np.int64) @ (A > 0).T.astype(np.int64)) > 0
            E = np.where(dead, np.iinfo(np.int64).max, E)
            lo = E.min(axis=1)
            ties = (E == lo[:, None]).sum(axis=1)
            for r in np.nonzero((ties > 1) & (lo < np.iinfo(np.int64).max))[0]:
                curve = MonomialCurve(tuple(coeffs[r]), tuple(int(x) for x in exps[r]))
                o = compose_with_curve(g, curve).order
                lo[r] = np.iinfo(np.int64).max if o == INF else o
            best = np.minimum(best, lo)
        return best


def path_quotients_batch(f: Polynomial, curves: Sequence[MonomialCurve]) -> List[object]:
    """Quotient values for many curves at once; agrees with :func:`path_quotient`."""
    if not curves:
        return []
    table = _GradientTable(f)
    coeffs = [c.coefficients for c in curves]
    exps = np.array([c.exponents for c in curves], dtype=np.int64)
    nums = table.orders(coeffs, exps)
    out = []
    big = np.iinfo(np.int64).max
    for c, num in zip(curves, nums):
        out.append(INF if num == big else Fraction(int(num), c.order))
    return out


def random_rational(rng: np.random.Generator, bound: int = 10, nonzero: bool = True) -> Fraction:
    while True:
        p = int(rng.integers(-bound, bound + 1))
        q = int(rng.integers(1, bound + 1))
        if p or not nonzero:
            return Fraction(p, q)


def random_curves(n: int, count: int, rng: np.random.Generator, max_exponent: int = 12,
                  zero_probability: float = 0.25) -> List[MonomialCurve]:
    """Random monomial arcs with small rational coefficients (some set to 0)."""
    out = []
    while len(out) < count:
        a = [Fraction(0) if rng.random() < zero_probability else random_rational(rng) for _ in range(n)]
        if not any(a):
            continue
        m = [int(x) for x in rng.integers(1, max_exponent + 1, size=n)]
        out.append(MonomialCurve(tuple(a), tuple(m)))
    return out


def _polar_points(f: Polynomial, grad, k: int, allowed: Sequence[int], max_points: int):
    """Rational points a with a_k = 1, zero off ``allowed``, where every
    partial except the k-th vanishes."""
    others = [i for i in allowed if i != k]
    n = f.nvars
    if len(POLAR_GRID) ** len(others) > max_points:
        return
    checks = [g for j, g in enumerate(grad) if j != k]
    for values in itertools.product(POLAR_GRID, repeat=len(others)):
        a = [Fraction(0)] * n
        a[k] = Fraction(1)
        for i, v in zip(others, values):
            a[i] = v
        if all(g.evaluate_exact(a) == 0 for g in checks):
            yield tuple(a)


def witness_search(f: Polynomial, ws: WeightSystem, budget: int = 64, seed: int = 0,
                   polar_limit: int = 20000) -> PathQuotient:
    """Largest exact arc quotient over the candidate families.

    Families: coordinate axes; weight-action curves ``t . a`` through the
    unit points and through ``budget`` random rational points; the same
    restricted to the coordinates that survive elimination (weak types);
    and weight-action curves through rational polar points of each
    minimal-weight coordinate.  The result is a certified lower bound.
    """
    if not is_weighted_homogeneous(f, ws):
        raise ValueError(f"the polynomial is not weighted homogeneous of type {ws}")
    n, w = f.nvars, ws.weights
    grad = gradient(f)
    rng = np.random.default_rng(seed)
    candidates: List[Tuple[MonomialCurve, str]] = []
    for i in range(n):
        candidates.append((MonomialCurve.axis(n, i), f"axis z{i + 1}"))
    for i in range(n):
        e = [0] * n
        e[i] = 1
        candidates.append((MonomialCurve.weight_action(e, w), f"weight action through e{i + 1}"))

    scopes = [("", tuple(range(n)))]
    if not is_strict(ws):
        cls = classify_coordinates(f, ws)
        if cls.surviving:
            scopes.append((" (surviving coordinates)", tuple(i - 1 for i in cls.surviving)))
    for label, scope in scopes:
        for _ in range(budget):
            a = [Fraction(0)] * n
            for i in scope:
                a[i] = random_rational(rng)
            candidates.append((MonomialCurve.weight_action(a, w), "random weight action" + label))
        wmin = min(w[i] for i in scope)
        for k in scope:
            if w[k] != wmin:
                continue
            for a in _polar_points(f, grad, k, scope, polar_limit):
                candidates.append((MonomialCurve.weight_action(a, w), f"polar point of z{k + 1}" + label))

    best = None
    for curve, family in candidates:
        q = path_quotient(f, curve, grad, family)
        if q.value == INF:
            continue
        if best is None or q.value > best.value:
            best = q
    return best


# ---------------------------------------------------------------- rho geometry and sampling

class RhoGeometry:
    """The weighted gauge ``rho`` and gradient norm attached to a weight system."""

    def __init__(self, ws: WeightSystem):
        self.ws = ws
        self.w = np.array(ws.weights, dtype=float)

    def rho(self, z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        return np.sqrt(np.sum(np.abs(z) ** (2.0 / self.w), axis=1))

    def act(self, s, z: np.ndarray) -> np.ndarray:
        """Weighted action ``s . z = (s^w_1 z_1, ..., s^w_n z_n)`` for real ``s > 0``."""
        s = np.asarray(s, dtype=float).reshape(-1, 1)
        return np.atleast_2d(z) * s ** self.w

    def to_sphere(self, u: np.ndarray, r: float) -> np.ndarray:
        """Move nonzero ``u`` onto ``S_r`` via ``(r / rho(u)) . u``."""
        return self.act(r / self.rho(u), u)

    def weighted_gradient_norm(self, grad: Sequence[Polynomial], z: np.ndarray) -> np.ndarray:
        z = np.atleast_2d(z)
        rho = self.rho(z)
        total = np.zeros(z.shape[0])
        for wi, g in zip(self.w, grad):
            total += np.abs(rho ** wi * g.evaluate(z)) ** 2
        return np.sqrt(total)


@dataclass(frozen=True)
class SamplingResult:
    radii: Tuple[float, ...]
    extrema: Tuple[float, ...]
    kind: str  # "min" or "max"
    exponent: float
    witnesses: Tuple[Tuple[complex, ...], ...] = field(default_factory=tuple)

    @property
    def spread(self) -> float:
        """max/min of the per-radius extrema."""
        return max(self.extrema) / min(self.extrema) if min(self.extrema) > 0 else INF

    @property
    def decays(self) -> bool:
        return detect_decay(self.radii, self.extrema)

    def to_dict(self):
        return {
            "kind": self.kind,
            "exponent": self.exponent,
            "radii": list(self.radii),
            "extrema": list(self.extrema),
            "spread": self.spread,
            "decays": self.decays,
        }


def detect_decay(radii: Sequence[float], values: Sequence[float], factor: float = 10.0,
                 decades: float = 2.0) -> bool:
    """Values fall monotonically as the radius shrinks, by ``factor`` over ``decades``."""
    order = np.argsort(radii)[::-1]
    r = np.asarray(radii, dtype=float)[order]
    v = np.asarray(values, dtype=float)[order]
    if len(r) < 2 or math.log10(r[0] / r[-1]) < decades - 1e-12:
        return False
    if np.any(np.diff(v) > 0):
        return False
    return bool(v[-1] == 0 or v[0] / v[-1] >= factor)


def _draw(rng, m, n, complex_):
    u = rng.standard_normal((m, n))
    if complex_:
        u = u + 1j * rng.standard_normal((m, n))
    return u


def _check_finite(values, points):
    bad = ~np.isfinite(values)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise NonFiniteSample(tuple(points[i]), values[i])


def _sample(f, ws, radii, samples, seed, complex_, exponent, kind, direction=None, spread=None):
    geo = RhoGeometry(ws)
    grad = gradient(f)
    rng = np.random.default_rng(seed)
    extrema, witnesses = [], []
    for r in radii:
        if r <= 0:
            raise ValueError("radii must be positive")
        u = _draw(rng, samples, f.nvars, complex_)
        if direction is not None:
            u = np.asarray(direction, dtype=u.dtype)[None, :] + (spread * r) * u
        u = u[np.linalg.norm(u, axis=1) > 0]
        z = geo.to_sphere(u, r)
        ratio = geo.weighted_gradient_norm(grad, z) / geo.rho(z) ** exponent
        _check_finite(ratio, z)
        i = int(np.argmin(ratio) if kind == "min" else np.argmax(ratio))
        extrema.append(float(ratio[i]))
        witnesses.append(tuple(complex(x) if complex_ else float(x) for x in z[i]))
    return SamplingResult(tuple(float(r) for r in radii), tuple(extrema), kind, float(exponent),
                          tuple(witnesses))


def sample_inequality_lower(f: Polynomial, ws: WeightSystem, radii: Sequence[float],
                            samples_per_radius: int = 1000, seed: int = 0, complex_: bool = False,
                            direction: Optional[Sequence[float]] = None,
                            spread: float = 1.0) -> SamplingResult:
    """Per-radius minima of ``||grad_w f||_w / rho^d`` over ``S_r``.

    For an isolated weighted homogeneous ``f`` these stay bounded away from
    zero.  With ``direction`` given, samples cluster around that direction
    with a perturbation of size ``spread * r``, which exposes decay towards a
    critical ray.
    """
    return _sample(f, ws, radii, samples_per_radius, seed, complex_, ws.degree, "min",
                   direction, spread)


def sample_inequality_upper(f: Polynomial, ws: WeightSystem, radii: Sequence[float],
                            samples_per_radius: int = 1000, seed: int = 0,
                            complex_: bool = False) -> SamplingResult:
    """Per-radius maxima of ``||grad_w f||_w / rho^(d_w(f))``; bounded as r shrinks."""
    if f.is_zero():
        raise ValueError("the zero polynomial is excluded")
    return _sample(f, ws, radii, samples_per_radius, seed, complex_, weighted_degree(f, ws), "max")


def sample_euclidean_lower(f: Polynomial, exponent, radii: Sequence[float],
                           samples_per_radius: int = 1000, seed: int = 0,
                           complex_: bool = False) -> SamplingResult:
    """Per-radius minima of ``|grad f(z)| / |z|^exponent`` on Euclidean spheres."""
    grad = gradient(f)
    rng = np.random.default_rng(seed)
    extrema, witnesses = [], []
    for r in radii:
        u = _draw(rng, samples_per_radius, f.nvars, complex_)
        z = r * u / np.linalg.norm(u, axis=1, keepdims=True)
        norm = np.sqrt(sum(np.abs(g.evaluate(z)) ** 2 for g in grad))
        ratio = norm / r ** float(exponent)
        _check_finite(ratio, z)
        i = int(np.argmin(ratio))
        extrema.append(float(ratio[i]))
        witnesses.append(tuple(z[i]))
    return SamplingResult(tuple(float(r) for r in radii), tuple(extrema), "min", float(exponent),
                          tuple(witnesses))
