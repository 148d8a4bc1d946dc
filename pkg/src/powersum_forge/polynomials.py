"""Sparse exact polynomials in one and two variables.

Coefficients are ``fractions.Fraction``; zero coefficients are never
stored.  These classes are small expansion engines used to verify
identities by brute-force cancellation, not a general symbolic layer:
addition, multiplication, integer powers, evaluation, and (for the
univariate case) exact division are all the algebra the rest of the
library needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
NEG_INFINITY = float("-inf")


def _as_items(source) -> Iterable[tuple]:
    if isinstance(source, Mapping):
        return source.items()
    return source


class Polynomial:
    """Univariate polynomial over the rationals, stored sparsely."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        acc: dict[int, Fraction] = {}
        for deg, raw in _as_items(coeffs):
            d = int(deg)
            if d != deg or d < 0:
                raise ValueError(f"invalid degree {deg!r}")
            acc[d] = acc.get(d, Fraction(0)) + Fraction(raw)
        self._coeffs = {d: c for d, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls({degree: coeff})

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        """Largest degree present, or -inf for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else NEG_INFINITY

    @property
    def lowest_degree(self):
        return min(self._coeffs) if self._coeffs else NEG_INFINITY

    def coefficient(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def evaluate(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((c * x**d for d, c in self._coeffs.items()), Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, Fraction(0)) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({d: c * other for d, c in self._coeffs.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, Fraction(0)) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        """Exact long division over the rationals."""
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._coeffs)
        quo: dict[int, Fraction] = {}
        d_div = other.degree
        lead = other.coefficient(d_div)
        while rem and max(rem) >= d_div:
            d = max(rem)
            q = rem[d] / lead
            k = d - d_div
            quo[k] = quo.get(k, Fraction(0)) + q
            for dd, cc in other._coeffs.items():
                nd = dd + k
                nv = rem.get(nd, Fraction(0)) - q * cc
                if nv:
                    rem[nd] = nv
                else:
                    rem.pop(nd, None)
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        inner = ", ".join(f"{d}: {c}" for d, c in sorted(self._coeffs.items()))
        return f"Polynomial({{{inner}}})"


class BivariatePoly:
    """Polynomial in two variables, keyed by (degree_u, degree_v)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Scalar] | Iterable = ()):
        acc: dict[tuple[int, int], Fraction] = {}
        for key, raw in _as_items(coeffs):
            i, j = int(key[0]), int(key[1])
            if i < 0 or j < 0:
                raise ValueError(f"invalid exponent pair {key!r}")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + Fraction(raw)
        self._coeffs = {k: c for k, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def monomial(cls, deg_u: int, deg_v: int, coeff: Scalar = 1) -> "BivariatePoly":
        return cls({(deg_u, deg_v): coeff})

    @property
    def coefficients(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, deg_u: int, deg_v: int) -> Fraction:
        return self._coeffs.get((deg_u, deg_v), Fraction(0))

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        u, v = Fraction(u), Fraction(v)
        return sum((c * u**i * v**j for (i, j), c in self._coeffs.items()), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BivariatePoly(out)

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePoly({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = BivariatePoly.monomial(0, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        inner = ", ".join(f"{k}: {c}" for k, c in sorted(self._coeffs.items()))
        return f"BivariatePoly({{{inner}}})"
