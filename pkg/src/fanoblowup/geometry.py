"""Divisor-class calculus on the blow-up Y of a P^1-bundle over a Fano base.

Setup: V is a Fano variety of dimension n-1 with an ample line bundle L such
that -K_V ~ r*L (r > 1), and B ~ l*L is a smooth divisor (0 <= l < r+1).
X = P(L + O) is the P^1-bundle over V and Y is the blow-up of X along the
copy of B sitting on the infinity section.  All intersection numbers used by
the invariants live in the span of three divisor classes on Y:

    V_0      the (strict transform of the) zero section,
    Vbar_inf the strict transform of the infinity section,
    A        the pullback to Y of -K_V.

The calculus is generated by three monomial rules (adopted as axioms):

    V_0^k . A^(n-k)      = (-1/r)^(k-1)    * vol(V)   for k >= 1,
    Vbar^k . A^(n-k)     = ((1-l)/r)^(k-1) * vol(V)   for k >= 1,
    V_0 . Vbar_inf = 0,   A^n = 0.

Everything else (vol Y, the volume profiles, S and beta) factors through the
top-power functional these rules define.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Poly, RationalLike, as_rational, binom

__all__ = ["Construction", "ClassPoly", "DerivedClasses", "derived_classes", "top_power", "vol_x"]


@dataclass(frozen=True)
class Construction:
    """Parameters (n, r, l, vol_v) of the blow-up Y.

    n      dimension of Y (>= 2); the base V has dimension n-1
    r      Fano proportionality of the base: -K_V ~ r*L, r > 1
    l      proportionality of the branch divisor: B ~ l*L, 0 <= l < r+1
    vol_v  anti-canonical volume (-K_V)^(n-1) of the base, > 0
    """

    n: int
    r: Fraction
    l: Fraction
    vol_v: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "l", as_rational(self.l))
        object.__setattr__(self, "vol_v", as_rational(self.vol_v))
        if self.r <= 1:
            raise ValueError(f"r must exceed 1, got {self.r}")
        if not (0 <= self.l < self.r + 1):
            raise ValueError(f"l must satisfy 0 <= l < r+1 = {self.r + 1}, got {self.l}")
        if self.vol_v <= 0:
            raise ValueError(f"vol_v must be positive, got {self.vol_v}")


def _as_poly(value: Poly | RationalLike) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(as_rational(value))


@dataclass(frozen=True)
class ClassPoly:
    """A divisor class x*V_0 + y*Vbar_inf + z*A with Poly coefficients.

    Coefficients may depend on the Zariski parameter t; constant classes carry
    degree-0 polynomials.  Addition and scaling are componentwise.
    """

    v0: Poly
    vinf: Poly
    a: Poly

    def __post_init__(self) -> None:
        object.__setattr__(self, "v0", _as_poly(self.v0))
        object.__setattr__(self, "vinf", _as_poly(self.vinf))
        object.__setattr__(self, "a", _as_poly(self.a))

    @staticmethod
    def zero() -> "ClassPoly":
        return ClassPoly(Poly(), Poly(), Poly())

    def is_zero(self) -> bool:
        return not (self.v0 or self.vinf or self.a)

    def __add__(self, other: "ClassPoly") -> "ClassPoly":
        if not isinstance(other, ClassPoly):
            return NotImplemented
        return ClassPoly(self.v0 + other.v0, self.vinf + other.vinf, self.a + other.a)

    def __sub__(self, other: "ClassPoly") -> "ClassPoly":
        if not isinstance(other, ClassPoly):
            return NotImplemented
        return ClassPoly(self.v0 - other.v0, self.vinf - other.vinf, self.a - other.a)

    def __neg__(self) -> "ClassPoly":
        return ClassPoly(-self.v0, -self.vinf, -self.a)

    def __mul__(self, scale: Poly | RationalLike) -> "ClassPoly":
        s = _as_poly(scale)
        return ClassPoly(self.v0 * s, self.vinf * s, self.a * s)

    __rmul__ = __mul__


@dataclass(frozen=True)
class DerivedClasses:
    """Named classes derived from the basis: H, E, F and -K_Y."""

    h: ClassPoly
    e: ClassPoly
    f: ClassPoly
    anti_k: ClassPoly


def derived_classes(c: Construction) -> DerivedClasses:
    """Classes derived from (n, r, l) in the {V_0, Vbar_inf, A} basis.

        H      = V_0 + (1/r) A                relative hyperplane class
        E      = V_0 + (1/r) A - Vbar_inf     exceptional divisor of Y -> X
        F      = Vbar_inf + ((l-1)/r) A - V_0 strict transform of the pullback of B
        -K_Y   = V_0 + Vbar_inf + A

    At l = 0 there is no blow-up and E, F are returned as written even though
    the zero class is the geometric truth there; callers must not treat them
    as effective in that degenerate case.
    """
    r, l = c.r, c.l
    h = ClassPoly(1, 0, Fraction(1) / r)
    e = ClassPoly(1, -1, Fraction(1) / r)
    f = ClassPoly(-1, 1, (l - 1) / r)
    anti_k = ClassPoly(1, 1, 1)
    return DerivedClasses(h=h, e=e, f=f, anti_k=anti_k)


def top_power(c: Construction, cls: ClassPoly) -> Poly:
    """Exact top intersection power (x V_0 + y Vbar_inf + z A)^n as a Poly in t.

    Expanding multinomially, the mixed V_0.Vbar_inf terms and A^n vanish, and
    the two ladders collapse to

        vol(V) * [ sum_{k=1..n} C(n,k) x^k z^(n-k) (-1/r)^(k-1)
                 + sum_{k=1..n} C(n,k) y^k z^(n-k) ((1-l)/r)^(k-1) ].

    The l = 1 case needs no special branch: ((1-l)/r)^0 = 1 kills every
    ladder rung above k = 1.
    """
    n = c.n
    q0 = Fraction(-1) / c.r
    qinf = (1 - c.l) / c.r
    acc = Poly()
    for k in range(1, n + 1):
        zpow = cls.a ** (n - k)
        ck = binom(n, k)
        acc = acc + ck * q0 ** (k - 1) * cls.v0 ** k * zpow
        acc = acc + ck * qinf ** (k - 1) * cls.vinf ** k * zpow
    return c.vol_v * acc


def vol_x(c: Construction) -> Fraction:
    """Anti-canonical volume of the bundle X = P(L + O) itself (the l = 0 case).

    Closed form ((r+1)^n - (r-1)^n) * vol(V) / r^(n-1); agrees with
    top_power of -K at l = 0 (enforced by test).
    """
    n, r = c.n, c.r
    return ((r + 1) ** n - (r - 1) ** n) / r ** (n - 1) * c.vol_v
