"""Sparse multivariate integer polynomials.

Monomials are tuples of ``(variable, exponent)`` pairs sorted by variable
(natural order), exponents positive.  A polynomial maps monomials to nonzero
Python ints, so coefficients never overflow.

Terms print in descending graded-lex order, e.g. ``- 2*e1*e3^2 + e2``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping

from .multigraph import sort_key

Monomial = tuple[tuple[str, int], ...]
ONE: Monomial = ()


class NotQuadraticError(ArithmeticError):
    pass


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, k in b:
        d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items(), key=lambda t: sort_key(t[0])))


def _norm_mono(m) -> Monomial:
    d: dict[str, int] = {}
    for v, k in m:
        if k < 0:
            raise ValueError(f"negative exponent for {v}")
        if k:
            d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items(), key=lambda t: sort_key(t[0])))


def mono_degree(m: Monomial) -> int:
    return sum(k for _, k in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= k for v, k in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    d = dict(b)
    for v, k in a:
        d[v] -= k
    return tuple(sorted(((v, k) for v, k in d.items() if k), key=lambda t: sort_key(t[0])))


def mono_from(vars_: Iterable[str]) -> Monomial:
    d: dict[str, int] = {}
    for v in vars_:
        d[v] = d.get(v, 0) + 1
    return tuple(sorted(d.items(), key=lambda t: sort_key(t[0])))


def term_key(m: Monomial):
    """Sort key putting larger monomials first (graded lex, e1 > e2 > ...)."""
    return (-mono_degree(m), tuple((sort_key(v), -k) for v, k in m))


def mono_str(m: Monomial) -> str:
    return "*".join(v if k == 1 else f"{v}^{k}" for v, k in m)


class Polynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        # monomials are re-sorted and merged, so any pair order is accepted
        out: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            m = _norm_mono(m)
            out[m] = out.get(m, 0) + c
        self.terms: dict[Monomial, int] = {m: c for m, c in out.items() if c}
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls({ONE: c}) if c else cls()

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        return cls({m: c})

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]))

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return min(self.terms.items(), key=lambda t: term_key(t[0]))

    def variables(self) -> list[str]:
        vs = {v for m in self.terms for v, _ in m}
        return sorted(vs, key=sort_key)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def coefficients(self) -> list[int]:
        return [c for _, c in self.sorted_terms()]

    def normalized(self) -> "Polynomial":
        """Sign flipped if needed so the leading coefficient is positive."""
        if self.terms and self.leading_term()[1] < 0:
            return -self
        return self

    def __str__(self):
        return to_str(self)

    def __repr__(self):
        return f"Polynomial({to_str(self)!r})"


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


ZERO = Polynomial()


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def negate(p: Polynomial) -> Polynomial:
    return -p


def evaluate(p: Polynomial, assignment: Mapping[str, int]) -> int:
    total = 0
    for m, c in p.terms.items():
        val = c
        for v, k in m:
            try:
                val *= assignment[v] ** k
            except KeyError:
                raise KeyError(f"missing value for variable {v!r}") from None
        total += val
    return total


def substitute(p: Polynomial, var: str, value: int) -> Polynomial:
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        k = dict(m).get(var, 0)
        if k:
            c = c * value ** k
            m = tuple(t for t in m if t[0] != var)
        if c:
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Polynomial._wrap(out)


def degree_in(p: Polynomial, v: str) -> int:
    return max((dict(m).get(v, 0) for m in p.terms), default=0)


def is_linear_in_every_variable(p: Polynomial) -> bool:
    return all(k <= 1 for m in p.terms for _, k in m)


def collect(p: Polynomial, v: str) -> dict[int, Polynomial]:
    """Coefficients of ``p`` as a univariate polynomial in ``v``."""
    parts: dict[int, dict[Monomial, int]] = {}
    for m, c in p.terms.items():
        k = 0
        rest = []
        for var, e in m:
            if var == v:
                k = e
            else:
                rest.append((var, e))
        parts.setdefault(k, {})[tuple(rest)] = c
    return {k: Polynomial._wrap(t) for k, t in parts.items()}


def coefficient_slices(p: Polynomial, v: str) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(A, B, C)`` with ``p = A*v^2 + B*v + C``."""
    parts = collect(p, v)
    if any(k > 2 for k in parts):
        raise NotQuadraticError(f"not quadratic in {v}")
    return parts.get(2, ZERO), parts.get(1, ZERO), parts.get(0, ZERO)


def discriminant(p: Polynomial, v: str) -> Polynomial:
    a, b, c = coefficient_slices(p, v)
    return b * b - 4 * a * c


def monomial_content(p: Polynomial) -> tuple[Monomial, Polynomial]:
    """GCD monomial of all terms and the cofactor."""
    if not p.terms:
        raise ValueError("zero polynomial has no monomial content")
    it = iter(p.terms)
    common = dict(next(it))
    for m in it:
        d = dict(m)
        common = {v: min(k, d[v]) for v, k in common.items() if v in d}
    g = tuple(sorted(common.items(), key=lambda t: sort_key(t[0])))
    return g, Polynomial._wrap({mono_div(m, g): c for m, c in p.terms.items()})


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial | None:
    """``p / q`` if ``q`` divides ``p`` exactly over the integers, else ``None``."""
    if not q.terms:
        raise ZeroDivisionError("division by zero polynomial")
    lm_q, lc_q = q.leading_term()
    rem = Polynomial(p.terms)
    quot: dict[Monomial, int] = {}
    while rem.terms:
        lm, lc = rem.leading_term()
        if not mono_divides(lm_q, lm) or lc % lc_q:
            return None
        m = mono_div(lm, lm_q)
        c = lc // lc_q
        quot[m] = c
        rem = rem - Polynomial({m: c}) * q
    return Polynomial._wrap(quot)


def perfect_square_root(p: Polynomial) -> Polynomial | None:
    """``r`` with ``r*r == p`` and positive leading coefficient, or ``None``."""
    if not p.terms:
        return ZERO
    r = _sqrt(p)
    if r is None:
        return None
    r = r.normalized()
    return r if r * r == p else None


def _sqrt(p: Polynomial) -> Polynomial | None:
    vs = p.variables()
    if not vs:
        c = p.terms.get(ONE, 0)
        if c < 0:
            return None
        s = math.isqrt(c)
        return Polynomial.const(s) if s * s == c else None
    x = vs[0]
    parts = collect(p, x)
    top = max(parts)
    if top % 2:
        return None
    d = top // 2
    lead = _sqrt(parts[top])
    if lead is None:
        return None
    roots = {d: lead}
    two_lead = 2 * lead
    xp = Polynomial.var(x)
    for j in range(d - 1, -1, -1):
        # coefficient of x^(d+j) in r^2 equals 2*r_d*r_j + sum over a+b=d+j with j<a,b<d
        acc = parts.get(d + j, ZERO)
        for a in range(j + 1, d):
            b = d + j - a
            if j < b < d:
                acc = acc - roots[a] * roots[b]
        q = exact_divide(acc, two_lead)
        if q is None:
            return None
        roots[j] = q
    r = ZERO
    for k, c in roots.items():
        r = r + c * (xp ** k)
    return r


# -- text format -------------------------------------------------------------


def to_str(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = mono_str(m)
        else:
            body = f"{a}*{mono_str(m)}"
        if i == 0:
            out.append(f"- {body}" if sign == "-" else body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*?)\s*(?=[+-]|$)")


def parse(text: str) -> Polynomial:
    """Inverse of :func:`to_str` (also accepts a leading ``+`` and extra spaces)."""
    s = text.strip()
    if s == "0":
        return ZERO
    out = ZERO
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign
        factors = []
        for f in m.group(2).split("*"):
            f = f.strip()
            if not f:
                raise ValueError(f"empty factor in {m.group(2)!r}")
            if f.isdigit():
                coeff *= int(f)
            else:
                name, _, k = f.partition("^")
                if not re.match(r"^[A-Za-z_][A-Za-z0-9_.]*$", name) or (k and not k.isdigit()):
                    raise ValueError(f"bad factor {f!r}")
                factors.extend([name] * (int(k) if k else 1))
        out = out + Polynomial({mono_from(factors): coeff})
        pos = m.end()
    return out
