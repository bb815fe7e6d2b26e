"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` maps exponent tuples to nonzero :class:`fractions.Fraction`
coefficients.  Terms iterate in graded reverse lexicographic order (largest
first), so printing and hashing are deterministic.

Text grammar accepted by :func:`parse_polynomial`::

    poly    := [sign] term (sign term)*
    sign    := "+" | "-"
    term    := factor ("*" factor)*
    factor  := number | ident ["^" integer]
    number  := integer ["/" integer]
    ident   := [A-Za-z_][A-Za-z0-9_]*

Whitespace is ignored.  Decimal literals such as ``1.5`` are rejected.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import PolynomialSyntaxError

Exponent = Tuple[int, ...]

INF = math.inf


def grevlex_key(alpha: Exponent):
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(alpha), tuple(-a for a in reversed(alpha)))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, np.integer)):
        return Fraction(int(c))
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over Q."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, object]] = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: Dict[Exponent, Fraction] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != nvars:
                raise ValueError(f"exponent {alpha} has length {len(alpha)}, expected {nvars}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = _coerce(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
                if not clean[alpha]:
                    del clean[alpha]
        self._n = nvars
        self._terms = dict(sorted(clean.items(), key=lambda it: grevlex_key(it[0]), reverse=True))
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # terms must already be clean; only ordering is applied
        p = cls.__new__(cls)
        p._n = nvars
        p._terms = dict(sorted(terms.items(), key=lambda it: grevlex_key(it[0]), reverse=True))
        p._hash = None
        return p

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> "Polynomial":
        return cls(len(alpha), {tuple(alpha): c})

    # basic accessors
    @property
    def nvars(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(a) for a in self._terms)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self._n)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if other._n != self._n:
            raise ValueError(f"variable counts differ: {self._n} vs {other._n}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self._n, _coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return Polynomial._raw(self._n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce(other)
            if not c:
                return Polynomial.zero(self._n)
            return Polynomial._raw(self._n, {a: c * v for a, v in self._terms.items()})
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                out[e] = out.get(e, 0) + c * d
        return Polynomial._raw(self._n, {a: c for a, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self._n}, {self.to_string()!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        """Render in the parser's grammar; ``parse_polynomial`` inverts it."""
        names = list(names) if names is not None else default_names(self._n)
        if len(names) != self._n:
            raise ValueError("need one name per variable")
        if not self._terms:
            return "0"
        parts = []
        for alpha, c in self._terms.items():
            factors = []
            for name, a in zip(names, alpha):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # numeric evaluation
    def evaluate(self, points) -> np.ndarray:
        """Evaluate at each row of ``points`` (shape ``(m, n)``), float or complex."""
        pts = np.asarray(points)
        if pts.ndim == 1:
            pts = pts[None, :]
        if pts.shape[1] != self._n:
            raise ValueError("point dimension does not match variable count")
        out = np.zeros(pts.shape[0], dtype=np.result_type(pts.dtype, np.float64))
        for alpha, c in self._terms.items():
            term = np.full(pts.shape[0], float(c), dtype=out.dtype)
            for j, a in enumerate(alpha):
                if a:
                    term = term * pts[:, j] ** a
            out = out + term
        return out

    def evaluate_exact(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for alpha, c in self._terms.items():
            term = c
            for x, a in zip(point, alpha):
                if a:
                    term *= Fraction(x) ** a
            total += term
        return total


def default_names(n: int):
    return [f"z{i + 1}" for i in range(n)]


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))"
)
_INDEXED = re.compile(r"([A-Za-z_]+?)(\d+)$")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolynomialSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "num" and not value.isdigit():
            raise PolynomialSyntaxError(
                f"non-rational coefficient literal {value!r} (use integers or p/q)", text, start
            )
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _infer_variables(idents: Sequence[str]):
    """Default variable list: indexed names by index, else first appearance."""
    seen = list(dict.fromkeys(idents))
    if not seen:
        return ["z1"]
    matches = [_INDEXED.match(v) for v in seen]
    if all(matches) and len({m.group(1) for m in matches}) == 1:
        prefix = matches[0].group(1)
        indices = [int(m.group(2)) for m in matches]
        if min(indices) >= 1 and all(str(i) == m.group(2) for i, m in zip(indices, matches)):
            return [f"{prefix}{i}" for i in range(1, max(indices) + 1)]
    return seen


def parse_polynomial(text: str, variables: Optional[Sequence[str]] = None) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial`.

    When ``variables`` is omitted, names sharing a prefix and numbered from 1
    (``z1``, ``z4``, ...) are ordered by their index and fill the gaps up to
    the largest index; any other names are ordered by first appearance.
    """
    tokens = _tokenize(text)
    if variables is None:
        variables = _infer_variables([v for k, v, _ in tokens if k == "id"])
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError(f"variable names are not distinct: {variables}")
    index = {v: i for i, v in enumerate(variables)}
    n = len(variables)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tok = tokens[pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolynomialSyntaxError(f"expected {want}, found {got!r}", text, tok[2])
        pos += 1
        return tok

    def integer():
        tok = take("num")
        return int(tok[1])

    def factor():
        tok = peek()
        if tok[0] == "num":
            num = integer()
            if peek()[1] == "/":
                take("op", "/")
                dtok = peek()
                den = integer()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", text, dtok[2])
                return Fraction(num, den), (0,) * n
            return Fraction(num), (0,) * n
        if tok[0] == "id":
            take()
            if tok[1] not in index:
                raise PolynomialSyntaxError(f"unknown variable {tok[1]!r}", text, tok[2])
            e = 1
            if peek()[1] == "^":
                take("op", "^")
                e = integer()
            alpha = [0] * n
            alpha[index[tok[1]]] = e
            return Fraction(1), tuple(alpha)
        raise PolynomialSyntaxError(f"expected a number or variable, found {tok[1] or 'end of input'!r}",
                                    text, tok[2])

    def term():
        c, alpha = factor()
        while peek()[1] == "*":
            take("op", "*")
            c2, beta = factor()
            c *= c2
            alpha = tuple(a + b for a, b in zip(alpha, beta))
        return c, alpha

    terms: Dict[Exponent, Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        c, alpha = term()
        terms[alpha] = terms.get(alpha, 0) + sign * c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
            continue
        raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", text, tok[2])
    return Polynomial(n, terms)


# ---------------------------------------------------------------- calculus and grading

def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """Exact derivative with respect to variable ``i`` (0-based)."""
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for alpha, c in f.items():
        if alpha[i]:
            beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            out[beta] = c * alpha[i]
    return Polynomial._raw(f.nvars, out)


def gradient(f: Polynomial):
    return [partial_derivative(f, i) for i in range(f.nvars)]


def _weights_of(ws) -> Tuple[int, ...]:
    return tuple(getattr(ws, "weights", ws))


def weighted_degree(f: Polynomial, ws):
    """Minimal weighted degree over the support; ``math.inf`` for zero.

    ``ws`` is a WeightSystem or a plain weight sequence.
    """
    w = _weights_of(ws)
    if len(w) != f.nvars:
        raise ValueError("weight count does not match variable count")
    if f.is_zero():
        return INF
    return min(sum(a * b for a, b in zip(alpha, w)) for alpha in f.support)


def graded_parts(f: Polynomial, ws) -> Dict[int, Polynomial]:
    """Split ``f`` into weighted homogeneous parts, keyed by ascending degree."""
    w = _weights_of(ws)
    if len(w) != f.nvars:
        raise ValueError("weight count does not match variable count")
    buckets: Dict[int, Dict[Exponent, Fraction]] = {}
    for alpha, c in f.items():
        j = sum(a * b for a, b in zip(alpha, w))
        buckets.setdefault(j, {})[alpha] = c
    return {j: Polynomial._raw(f.nvars, buckets[j]) for j in sorted(buckets)}


def initial_form(f: Polynomial, ws) -> Polynomial:
    if f.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    parts = graded_parts(f, ws)
    return parts[min(parts)]


# ---------------------------------------------------------------- univariate series and curves

class UnivariateSeries:
    """Finite series in one variable ``t`` with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, object]] = None):
        clean = {}
        for k, c in (terms or {}).items():
            if k < 0:
                raise ValueError("negative t-exponent")
            c = _coerce(c)
            if c:
                clean[int(k)] = c
        self._terms = dict(sorted(clean.items()))

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return dict(self._terms)

    @property
    def order(self):
        """Smallest exponent present; ``math.inf`` for the zero series."""
        return next(iter(self._terms)) if self._terms else INF

    def is_zero(self):
        return not self._terms

    def __add__(self, other: "UnivariateSeries"):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return UnivariateSeries(out)

    def __mul__(self, other: "UnivariateSeries"):
        out: Dict[int, Fraction] = {}
        for k, c in self._terms.items():
            for j, d in other._terms.items():
                out[k + j] = out.get(k + j, 0) + c * d
        return UnivariateSeries(out)

    def __eq__(self, other):
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "UnivariateSeries(0)"
        body = " + ".join(f"{c}*t^{k}" for k, c in self._terms.items())
        return f"UnivariateSeries({body})"


def series_order(s: UnivariateSeries):
    return s.order


@dataclass(frozen=True)
class MonomialCurve:
    """The arc ``t -> (a_1 t^m_1, ..., a_n t^m_n)``."""

    coefficients: Tuple[Fraction, ...]
    exponents: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(_coerce(c) for c in self.coefficients)
        m = tuple(int(e) for e in self.exponents)
        if len(a) != len(m):
            raise ValueError("coefficient and exponent vectors differ in length")
        if not any(a):
            raise ValueError("the zero curve is excluded")
        if any(e < 1 for e, c in zip(m, a) if c):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "coefficients", a)
        object.__setattr__(self, "exponents", m)

    @classmethod
    def weight_action(cls, point: Sequence, weights: Sequence[int]) -> "MonomialCurve":
        """``t . a = (t^w_1 a_1, ..., t^w_n a_n)``."""
        return cls(tuple(point), tuple(weights))

    @classmethod
    def axis(cls, n: int, i: int, exponent: int = 1) -> "MonomialCurve":
        a = [0] * n
        a[i] = 1
        return cls(tuple(a), tuple([exponent] * n))

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    @property
    def order(self) -> int:
        return min(m for a, m in zip(self.coefficients, self.exponents) if a)


def compose_with_curve(f: Polynomial, curve: MonomialCurve) -> UnivariateSeries:
    """Exact substitution ``z_i -> a_i t^m_i``."""
    if curve.nvars != f.nvars:
        raise ValueError("curve and polynomial have different variable counts")
    out: Dict[int, Fraction] = {}
    a, m = curve.coefficients, curve.exponents
    for alpha, c in f.items():
        coeff = c
        k = 0
        for ai, mi, e in zip(a, m, alpha):
            if e:
                if not ai:
                    coeff = 0
                    break
                coeff *= ai ** e
                k += mi * e
        if coeff:
            out[k] = out.get(k, 0) + coeff
    return UnivariateSeries(out)


def vectorized_terms(f: Polynomial):
    """(exponent matrix, float coefficient vector) for batch numerics."""
    if f.is_zero():
        return np.zeros((0, f.nvars), dtype=np.int64), np.zeros(0)
    A = np.array(f.support, dtype=np.int64)
    c = np.array([float(v) for v in f.terms.values()])
    return A, c


def from_terms(nvars: int, items: Iterable[Tuple[Sequence[int], object]]) -> Polynomial:
    out: Dict[Exponent, Fraction] = {}
    for alpha, c in items:
        alpha = tuple(alpha)
        out[alpha] = out.get(alpha, 0) + _coerce(c)
    return Polynomial(nvars, out)
