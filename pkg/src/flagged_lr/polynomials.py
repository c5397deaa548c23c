"""Integer polynomials, Demazure operators and key/Schur expansions.

Polynomials are finitely supported maps from exponent vectors to integers.
The Demazure operator acts monomial-wise through the closed form forced by
the geometric-series division, so no rational arithmetic appears anywhere.
"""

from __future__ import annotations

import json

from .core import (
    as_partition,
    is_partition,
    longest_element,
    reduced_word,
    sort_to_partition,
    validate_flag,
)
from .tableaux import SkewShape, enumerate_tableaux, reading_word, word_weight

__all__ = [
    "IntPolynomial",
    "demazure_Ti",
    "demazure_Ti_by_division",
    "demazure_Tw",
    "key_polynomial",
    "schur",
    "flagged_skew_schur",
    "expand_in_schur",
    "expand_in_key",
    "coefficient_table_by_demazure",
    "coefficient_by_demazure",
]


class IntPolynomial:
    """A polynomial in n variables with integer coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, n: int) -> "IntPolynomial":
        return cls(n)

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> "IntPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "IntPolynomial":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(self.n, out)

    def __neg__(self):
        return IntPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(self.n, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, IntPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def swap(self, i: int) -> "IntPolynomial":
        """The action of the transposition s_i on the variables."""
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i - 1], f[i] = f[i], f[i - 1]
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return IntPolynomial(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            vars_part = " ".join(
                f"x{i + 1}" + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(e)
                if a
            )
            bits.append(f"{c}" + (f" * {vars_part}" if vars_part else ""))
        return " + ".join(bits)

    def to_json(self) -> str:
        return json.dumps(
            [
                {"exponents": list(e), "coefficient": self.terms[e]}
                for e in sorted(self.terms, reverse=True)
            ]
        )


def demazure_Ti(f: IntPolynomial, i: int) -> IntPolynomial:
    """The Demazure operator (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).

    Acts monomial-wise: with a, b the exponents of x_i, x_{i+1}, a monomial
    maps to the sum over exponent pairs (a, b), (a-1, b+1), ..., (b, a) when
    a >= b, and to minus the sum over the pairs strictly between when a < b
    (empty for b = a + 1).
    """
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"operator index {i} out of range for ambient {f.n}")
    out = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a >= b:
            span = range(b, a + 1)
            sign = 1
        else:
            span = range(a + 1, b)
            sign = -1
        for t in span:
            g = list(e)
            g[i - 1], g[i] = t, a + b - t
            g = tuple(g)
            out[g] = out.get(g, 0) + sign * c
    return IntPolynomial(f.n, out)


def demazure_Ti_by_division(f: IntPolynomial, i: int) -> IntPolynomial:
    """Oracle: literally divide x_i f - x_{i+1} s_i f by x_i - x_{i+1}."""
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"operator index {i} out of range for ambient {f.n}")
    n = f.n
    num = IntPolynomial.variable(n, i) * f - IntPolynomial.variable(n, i + 1) * f.swap(i)
    quotient = {}
    divisor_hi = IntPolynomial.variable(n, i)
    divisor_lo = IntPolynomial.variable(n, i + 1)
    while not num.is_zero():
        lead = max(num.terms, key=lambda e: (e[i - 1], e))
        if lead[i - 1] == 0:
            raise ArithmeticError("division left a remainder")
        c = num.terms[lead]
        q = list(lead)
        q[i - 1] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        mono = IntPolynomial.monomial(q, c)
        num = num - mono * divisor_hi + mono * divisor_lo
    return IntPolynomial(n, quotient)


def demazure_Tw(f: IntPolynomial, w) -> IntPolynomial:
    """Composition T_{i_1} ... T_{i_k} along a reduced word for w."""
    for i in reversed(reduced_word(w)):
        f = demazure_Ti(f, i)
    return f


def key_polynomial(alpha) -> IntPolynomial:
    """kappa_alpha: the sorting permutation applied to the dominant monomial."""
    adag, w = sort_to_partition(alpha)
    return demazure_Tw(IntPolynomial.monomial(adag), w)


def schur(lam, n: int) -> IntPolynomial:
    """Sum of weight monomials over semistandard tableaux with entries <= n."""
    lam = as_partition(lam, n)
    shape = SkewShape(lam, (0,) * n)
    terms = {}
    for t in enumerate_tableaux(shape, (n,) * n):
        e = word_weight(reading_word(t), n)
        terms[e] = terms.get(e, 0) + 1
    return IntPolynomial(n, terms)


def flagged_skew_schur(mu, gam, row_bounds) -> IntPolynomial:
    """Generating polynomial of the flagged skew tableaux of shape mu/gam.

    Equals the ordinary skew Schur polynomial when every bound is the
    ambient length.
    """
    mu = as_partition(mu)
    gam = as_partition(gam, len(mu))
    if len(row_bounds) != len(mu):
        raise ValueError("ambient lengths differ")
    n = max(len(mu), max(row_bounds, default=0))
    terms = {}
    for t in enumerate_tableaux(SkewShape(mu, gam), row_bounds):
        e = word_weight(reading_word(t), n)
        terms[e] = terms.get(e, 0) + 1
    return IntPolynomial(n, terms)


def expand_in_schur(f: IntPolynomial):
    """Write a symmetric polynomial as a dict partition -> coefficient.

    Greedy elimination on the lexicographically greatest exponent vector;
    the remainder must reach exactly zero.
    """
    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    out = {}
    prev = None
    while not f.is_zero():
        lead = max(e for e in f.terms if is_partition(e))
        if prev is not None and lead >= prev:
            raise ArithmeticError("schur elimination failed to make progress")
        prev = lead
        c = f.terms[lead]
        out[lead] = c
        f = f - c * schur(lead, f.n)
    return out


def _key_order(e):
    return tuple(reversed(e))


def expand_in_key(f: IntPolynomial):
    """Write f as a dict composition -> multiplicity over key polynomials.

    Uses the term order under which kappa_alpha's extreme monomial is x^alpha
    (reverse lexicographic on exponent vectors read right to left).  The
    triangularity of that order is not assumed: any failure to make progress
    raises instead of looping.  Negative multiplicities are reported as-is.
    """
    out = {}
    prev = None
    while not f.is_zero():
        lead = max(f.terms, key=_key_order)
        if prev is not None and _key_order(lead) >= _key_order(prev):
            raise ArithmeticError(
                f"key elimination failed to make progress at {lead}"
            )
        prev = lead
        c = f.terms[lead]
        out[lead] = c
        f = f - c * key_polynomial(lead)
    return out


def coefficient_table_by_demazure(lam, mu, gam, phi):
    """Full Schur expansion of the symmetrized dominant-monomial product."""
    n = len(mu)
    if not len(lam) == len(gam) == n:
        raise ValueError("ambient lengths differ")
    validate_flag(phi, n)
    f = IntPolynomial.monomial(as_partition(lam)) * flagged_skew_schur(mu, gam, phi)
    g = demazure_Tw(f, longest_element(n))
    return expand_in_schur(g)


def coefficient_by_demazure(lam, mu, gam, nu, phi) -> int:
    """The nu-coefficient in the Schur expansion route."""
    if len(nu) != len(mu):
        raise ValueError("ambient lengths differ")
    return coefficient_table_by_demazure(lam, mu, gam, phi).get(tuple(nu), 0)
