"""Weight systems: validation, inference and the strict/weak split."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .errors import WeightError
from .poly import Polynomial

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class WeightSystem:
    """A type ``(d; w_1, ..., w_n)`` with positive integer entries."""

    degree: int
    weights: Tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise WeightError("a weight system needs at least one weight")
        if int(self.degree) < 1 or any(x < 1 for x in w):
            raise WeightError(f"degree and weights must be positive integers: {self.degree}; {w}")
        object.__setattr__(self, "degree", int(self.degree))
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return len(self.weights)

    def normalized(self) -> "WeightSystem":
        g = reduce(math.gcd, self.weights, self.degree)
        return WeightSystem(self.degree // g, tuple(x // g for x in self.weights))

    def scaled(self, k: int) -> "WeightSystem":
        return WeightSystem(self.degree * k, tuple(x * k for x in self.weights))

    def permuted(self, perm: Sequence[int]) -> "WeightSystem":
        """Weights reordered so that new position ``i`` holds old ``perm[i]``."""
        return WeightSystem(self.degree, tuple(self.weights[p] for p in perm))

    def as_vector(self) -> Vector:
        return (Fraction(self.degree),) + tuple(Fraction(x) for x in self.weights)

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        """Read ``"d:w1,w2,...,wn"``."""
        try:
            d, ws = text.split(":")
            return cls(int(d), tuple(int(x) for x in ws.split(",")))
        except ValueError as exc:
            raise WeightError(f"malformed type {text!r}; expected d:w1,...,wn") from exc

    def to_flag(self) -> str:
        return f"{self.degree}:{','.join(map(str, self.weights))}"

    def __str__(self):
        return f"({self.degree}; {', '.join(map(str, self.weights))})"


def is_weighted_homogeneous(f: Polynomial, ws: WeightSystem) -> bool:
    if f.nvars != ws.n:
        raise WeightError(f"{ws} has {ws.n} weights but the polynomial has {f.nvars} variables")
    return all(sum(a * w for a, w in zip(alpha, ws.weights)) == ws.degree for alpha in f.support)


def dual_weights(ws: WeightSystem) -> Tuple[Fraction, ...]:
    return tuple(Fraction(ws.degree, w) for w in ws.weights)


def is_strict(ws: WeightSystem) -> bool:
    """``d >= 2 w_i`` for every weight."""
    return all(ws.degree >= 2 * w for w in ws.weights)


# ---------------------------------------------------------------- exact linear algebra

def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Vector]:
    """Rational basis of ``{x : rows @ x = 0}`` by Gauss-Jordan elimination."""
    m = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return ncols - len(nullspace(rows, ncols))


def _integral_primitive(v: Sequence[Fraction]) -> Tuple[int, ...]:
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * lcm) for x in v]
    g = reduce(math.gcd, ints, 0) or 1
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------- inference

@dataclass(frozen=True)
class WeightSolution:
    """All types ``(d; w)`` making a polynomial weighted homogeneous.

    Vectors in ``cone_basis`` are ordered ``(d, w_1, ..., w_n)``.
    """

    kind: str
    representative: Optional[WeightSystem] = None
    cone_basis: Tuple[Vector, ...] = field(default_factory=tuple)

    def contains(self, ws: WeightSystem) -> bool:
        """True when ``ws`` (up to scaling) solves the homogeneity equations."""
        if self.kind == "none" or not self.cone_basis:
            return False
        if len(self.cone_basis[0]) != ws.n + 1:
            return False
        base = [list(v) for v in self.cone_basis]
        return rank(base + [list(ws.as_vector())], ws.n + 1) == len(base)

    def to_dict(self):
        return {
            "kind": self.kind,
            "representative": None if self.representative is None else {
                "d": self.representative.degree, "w": list(self.representative.weights)},
            "cone_basis": [[str(x) for x in v] for v in self.cone_basis],
        }


def _homogeneity_rows(f: Polynomial):
    # unknowns (d, w_1..w_n); one equation <alpha, w> - d = 0 per monomial
    return [[Fraction(-1)] + [Fraction(a) for a in alpha] for alpha in f.support]


def _interior_point(basis: Sequence[Vector]) -> Optional[Vector]:
    """Exact positive point of span(basis), or None if the open cone is empty.

    An LP finds a well-centred float point; it is rounded to rationals and
    positivity is then checked exactly.
    """
    B = np.array([[float(x) for x in v] for v in basis]).T  # (n+1, k)
    dim, k = B.shape
    # variables: c (k), s; maximize s with B c >= s, s <= 1
    cost = np.zeros(k + 1)
    cost[-1] = -1.0
    A_ub = np.hstack([-B, np.ones((dim, 1))])
    b_ub = np.zeros(dim)
    bounds = [(-1e3, 1e3)] * k + [(None, 1.0)]
    res = linprog(cost, A_ub=A_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] <= 1e-9:
        return None
    c = res.x[:k]
    for limit in (10, 100, 10 ** 4, 10 ** 6, 10 ** 9):
        cq = [Fraction(x).limit_denominator(limit) for x in c]
        x = tuple(sum((ci * v[j] for ci, v in zip(cq, basis)), Fraction(0)) for j in range(dim))
        if all(v > 0 for v in x):
            return x
    return None


def _smallest_degree_point(basis: Sequence[Vector]) -> Optional[Vector]:
    """Point of the cone with w_i >= 1 minimizing d, then the weight sum."""
    B = np.array([[float(x) for x in v] for v in basis]).T
    dim, k = B.shape
    A_ub = -B[1:]
    b_ub = -np.ones(dim - 1)
    bounds = [(None, None)] * k
    first = linprog(B[0], A_ub=A_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if first.status != 0:
        return None
    d_star = first.fun
    second = linprog(B[1:].sum(axis=0), A_ub=np.vstack([A_ub, B[0]]),
                     b_ub=np.append(b_ub, d_star + 1e-9), bounds=bounds, method="highs")
    sol = second.x if second.status == 0 else first.x
    for limit in (10, 100, 10 ** 4, 10 ** 6):
        cq = [Fraction(x).limit_denominator(limit) for x in sol]
        x = tuple(sum((ci * v[j] for ci, v in zip(cq, basis)), Fraction(0)) for j in range(dim))
        if all(v > 0 for v in x):
            return x
    return None


def infer_weight_systems(f: Polynomial) -> WeightSolution:
    """Solve ``<w, alpha> = d`` over the support, restricted to positive solutions."""
    if f.is_zero():
        raise WeightError("cannot infer weights for the zero polynomial")
    n = f.nvars
    basis = nullspace(_homogeneity_rows(f), n + 1)
    if not basis:
        return WeightSolution("none")
    if len(basis) == 1:
        v = basis[0]
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            ints = [abs(x) for x in _integral_primitive(v)]
            ws = WeightSystem(ints[0], tuple(ints[1:]))
            return WeightSolution("unique", ws, (ws.as_vector(),))
        return WeightSolution("none")
    if _interior_point(basis) is None:
        return WeightSolution("none")
    point = _smallest_degree_point(basis) or _interior_point(basis)
    ints = _integral_primitive(point)
    rep = WeightSystem(ints[0], tuple(ints[1:]))
    if not is_weighted_homogeneous(f, rep):
        raise WeightError(f"internal error: representative {rep} does not fit")
    return WeightSolution("family", rep, tuple(basis))


def resolve_weights(f: Polynomial, ws: Optional[WeightSystem] = None) -> WeightSystem:
    """Validate a supplied type, or infer one."""
    if ws is not None:
        if not is_weighted_homogeneous(f, ws):
            raise WeightError(f"the polynomial is not weighted homogeneous of type {ws}")
        return ws
    sol = infer_weight_systems(f)
    if sol.kind == "none":
        raise WeightError("no positive weight system makes the polynomial weighted homogeneous")
    return sol.representative
