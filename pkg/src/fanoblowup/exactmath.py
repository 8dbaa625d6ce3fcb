"""Exact rational arithmetic and dense univariate polynomials.

Every scalar in this package is a ``fractions.Fraction`` (arbitrary precision,
always normalized, exact comparisons).  Polynomials are dense coefficient
tuples over those rationals, in the single variable ``t`` used by the Zariski
decompositions; they support exact ring arithmetic, Horner evaluation and
exact definite integration.  No floating point enters anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

__all__ = ["Rational", "RationalLike", "as_rational", "binom", "Poly", "ZERO", "ONE", "T"]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, string like ``"3/2"``, or Fraction to an exact Fraction.

    Floats are rejected: silently converting a binary float would smuggle
    rounding into an exact pipeline.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an exact rational (int, Fraction, or 'p/q')")
    return Fraction(value)


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 when k > n, error on negative input."""
    return comb(n, k)


class Poly:
    """Dense univariate polynomial in t with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are stripped,
    so the zero polynomial is the empty tuple and otherwise the leading
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def constant(value: RationalLike) -> "Poly":
        return Poly([as_rational(value)])

    @staticmethod
    def _coerce(value) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.constant(value)
        return None

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self._coeffs])

    def __add__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact evaluation at x by Horner's rule."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        """Exact definite integral over [lo, hi].

        Evaluates the antiderivative difference sum c_i (hi^{i+1} - lo^{i+1})/(i+1).
        """
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            raise ValueError(f"integration bounds out of order: {lo} > {hi}")
        total = Fraction(0)
        for i, c in enumerate(self._coeffs):
            if c:
                total += c * (hi ** (i + 1) - lo ** (i + 1)) / (i + 1)
        return total

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])
