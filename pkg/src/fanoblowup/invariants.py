"""S- and beta-invariants of the horizontal divisors, and the classification.

For a prime divisor D on the Fano Y, the expected order of vanishing is

    S_Y(D) = (1 / vol Y) * integral_0^2 vol(-K_Y - t D) dt

and beta(D) = 1 - S_Y(D) since a prime divisor has log discrepancy 1.  Both
horizontal divisors satisfy beta(V_0) + beta(Vbar_inf) = 0 exactly; at l = 2
both vanish (Futaki vanishing) and the K-stability of Y reduces to that of
the pair (V, a(n,r) B), while for l != 2 exactly one beta is negative and the
corresponding divisor destabilizes Y.  Everything here is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactmath import RationalLike, as_rational
from .geometry import Construction, derived_classes, top_power
from .nef import HorizontalDivisor, volume_profile

__all__ = [
    "vol_y",
    "s_invariant",
    "beta",
    "coefficient_a",
    "futaki_check",
    "ReducesToPair",
    "KUnstable",
    "Classification",
    "classify",
    "InvariantReport",
    "report",
]


def vol_y(c: Construction) -> Fraction:
    """Anti-canonical volume (-K_Y)^n, via the top-power functional."""
    value = top_power(c, derived_classes(c).anti_k)
    assert value.degree <= 0
    return value(0)


def s_invariant(c: Construction, d: HorizontalDivisor) -> Fraction:
    """Exact S_Y(D): normalized integral of the piecewise volume profile."""
    total = Fraction(0)
    for lo, hi, poly in volume_profile(c, d):
        total += poly.integrate(lo, hi)
    return total / vol_y(c)


def beta(c: Construction, d: HorizontalDivisor) -> Fraction:
    """beta(D) = 1 - S_Y(D); negative beta certifies K-instability."""
    return 1 - s_invariant(c, d)


def coefficient_a(n: int, r: RationalLike) -> Fraction:
    """Pair coefficient a(n, r) for the l = 2 reduction to (V, aB).

        a(n,r) = (r^(n+1) - (r-1)^(n+1) - (n+1)(r-1)^n) / (2(n+1)(r^n - (r-1)^n))

    Always lies in (0, 1/2).
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    r = as_rational(r)
    if r <= 1:
        raise ValueError(f"r must exceed 1, got {r}")
    num = r ** (n + 1) - (r - 1) ** (n + 1) - (n + 1) * (r - 1) ** n
    den = 2 * (n + 1) * (r ** n - (r - 1) ** n)
    return num / den


def futaki_check(c: Construction) -> bool:
    """True iff both horizontal betas vanish exactly.  Only meaningful at l = 2."""
    if c.l != 2:
        raise ValueError(f"Futaki vanishing is only claimed at l = 2, got l = {c.l}")
    return (
        beta(c, HorizontalDivisor.ZERO_SECTION) == 0
        and beta(c, HorizontalDivisor.INFINITY_SECTION) == 0
    )


@dataclass(frozen=True)
class ReducesToPair:
    """l = 2: K-stability of Y is equivalent to that of the pair (V, aB)."""

    a: Fraction

    kind = "reduces-to-pair"

    def describe(self) -> str:
        return f"{self.kind} a={self.a}"


@dataclass(frozen=True)
class KUnstable:
    """l != 2: Y is K-unstable, destabilized by the divisor with beta < 0."""

    destabilizer: HorizontalDivisor
    beta: Fraction

    kind = "k-unstable"

    def describe(self) -> str:
        return f"{self.kind} destabilizer={self.destabilizer.value} beta={self.beta}"


Classification = Union[ReducesToPair, KUnstable]


def classify(c: Construction) -> Classification:
    """Classify Y: reduces-to-pair at l = 2, otherwise K-unstable.

    The destabilizer is chosen by the exact sign of the computed betas, never
    by a precomputed rule; exactly one of the two is strictly negative since
    they sum to zero and are nonzero for l != 2.
    """
    if c.l == 2:
        return ReducesToPair(coefficient_a(c.n, c.r))
    beta_zero = beta(c, HorizontalDivisor.ZERO_SECTION)
    beta_inf = beta(c, HorizontalDivisor.INFINITY_SECTION)
    assert beta_zero + beta_inf == 0
    if beta_zero < 0 < beta_inf:
        return KUnstable(HorizontalDivisor.ZERO_SECTION, beta_zero)
    if beta_inf < 0 < beta_zero:
        return KUnstable(HorizontalDivisor.INFINITY_SECTION, beta_inf)
    raise ArithmeticError(f"no strictly negative beta at l = {c.l}; betas are {beta_zero}, {beta_inf}")


@dataclass(frozen=True)
class InvariantReport:
    """All exact invariants of one construction, with their coupled identities."""

    vol_y: Fraction
    s_v0: Fraction
    s_vinf: Fraction
    beta_v0: Fraction
    beta_vinf: Fraction
    classification: Classification

    def __post_init__(self) -> None:
        if self.beta_v0 != 1 - self.s_v0 or self.beta_vinf != 1 - self.s_vinf:
            raise ValueError("beta must equal 1 - S for a prime divisor")
        if self.beta_v0 + self.beta_vinf != 0:
            raise ValueError("horizontal betas must sum to zero")


def report(c: Construction) -> InvariantReport:
    """Compute the full invariant report for one construction."""
    s_v0 = s_invariant(c, HorizontalDivisor.ZERO_SECTION)
    s_vinf = s_invariant(c, HorizontalDivisor.INFINITY_SECTION)
    return InvariantReport(
        vol_y=vol_y(c),
        s_v0=s_v0,
        s_vinf=s_vinf,
        beta_v0=1 - s_v0,
        beta_vinf=1 - s_vinf,
        classification=classify(c),
    )
