"""Finite-m refinement data along Vbar_inf and its limit coefficient a(n, r).

Restricting the graded sections of -m K_Y to Vbar_inf (the l = 2 setting) and
splitting each weight-j piece into movable and fixed parts gives

    movable degree  (m r - |m - j|) L     for 0 <= j <= 2m,
    fixed part      (j - m) B             for m < j <= 2m, else 0,

so with N_{m,j} = h^0(V, (m r - |m - j|) L) the fixed-part coefficient of an
m-basis-type divisor is

    a_m = (1 / (m N_m)) * sum_j N_{m,j} a_{m,j},      N_m = sum_j N_{m,j},

which converges to the pair coefficient a(n, r) as m grows.  The dimension
counts h^0 are pluggable so bases other than projective space can be added
without touching the summation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple

from .exactmath import binom
from .geometry import Construction
from .invariants import coefficient_a

__all__ = [
    "HilbertFunction",
    "hilbert_projective_space",
    "ProfileRow",
    "BasisProfile",
    "basis_profile",
    "a_m",
    "ConvergenceRow",
    "convergence_table",
]


@dataclass(frozen=True)
class HilbertFunction:
    """Section-dimension counter k -> dim H^0(V, kL) for one polarized base.

    dim is the dimension of V and index the proportionality r with
    -K_V ~ index * L; both are checked against a Construction before use.
    """

    description: str
    dim: int
    index: Fraction
    h: Callable[[int], int] = field(compare=False)

    def __call__(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"section count needs a nonnegative degree, got {k}")
        return self.h(k)


def hilbert_projective_space(s: int, d: int) -> HilbertFunction:
    """P^s polarized by L = O(d): h(k) = C(kd + s, s), index r = (s+1)/d."""
    if s < 1 or d < 1:
        raise ValueError(f"need s >= 1 and d >= 1, got s={s}, d={d}")
    return HilbertFunction(
        description=f"P^{s} with L = O({d})",
        dim=s,
        index=Fraction(s + 1, d),
        h=lambda k: binom(k * d + s, s),
    )


class ProfileRow(NamedTuple):
    j: int
    sections: int  # N_{m,j}, dimension of the movable part
    fixed: int     # a_{m,j}, multiple of B split off as fixed part


@dataclass(frozen=True)
class BasisProfile:
    """Weight-by-weight refinement data (N_{m,j}, a_{m,j}) at level m."""

    m: int
    rows: tuple[ProfileRow, ...]

    @property
    def total_sections(self) -> int:
        """N_m, the total dimension over all weights."""
        return sum(row.sections for row in self.rows)


def _check_base(c: Construction, h: HilbertFunction) -> None:
    if h.dim != c.n - 1 or h.index != c.r:
        raise ValueError(
            f"base mismatch: {h.description} realizes r = {h.index} in dimension {h.dim}, "
            f"but the construction needs r = {c.r} in dimension {c.n - 1}"
        )


def basis_profile(c: Construction, h: HilbertFunction, m: int) -> BasisProfile:
    """Rows (j, N_{m,j}, a_{m,j}) for j = 0..2m.

    Defined only at l = 2, and only for m with m*r integral so that every
    movable twist (m r - |m - j|) L is an honest line-bundle power; the
    smallest valid stride is the denominator of r.
    """
    if c.l != 2:
        raise ValueError(f"refinement data is only defined at l = 2, got l = {c.l}")
    _check_base(c, h)
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    mr = m * c.r
    if mr.denominator != 1:
        raise ValueError(
            f"m*r = {mr} is not an integer for m = {m}; use multiples of {c.r.denominator}"
        )
    rows = []
    for j in range(2 * m + 1):
        degree = int(mr) - abs(m - j)
        rows.append(ProfileRow(j=j, sections=h(degree), fixed=max(0, j - m)))
    profile = BasisProfile(m=m, rows=tuple(rows))
    assert profile.total_sections > 0
    return profile


def a_m(c: Construction, h: HilbertFunction, m: int) -> Fraction:
    """Exact fixed-part coefficient a_m = sum_j N_{m,j} a_{m,j} / (m N_m)."""
    profile = basis_profile(c, h, m)
    weighted = sum(row.sections * row.fixed for row in profile.rows)
    return Fraction(weighted, m * profile.total_sections)


class ConvergenceRow(NamedTuple):
    m: int
    a_m: Fraction
    error: Fraction  # |a_m - a(n, r)|, strictly positive at finite m


def convergence_table(c: Construction, h: HilbertFunction, ms: Iterable[int]) -> list[ConvergenceRow]:
    """a_m against the limit a(n, r) for each requested m, sorted by m."""
    target = coefficient_a(c.n, c.r)
    rows = []
    for m in sorted(ms):
        value = a_m(c, h, m)
        error = abs(value - target)
        assert error > 0, f"finite-m value unexpectedly equals the limit at m = {m}"
        rows.append(ConvergenceRow(m=m, a_m=value, error=error))
    return rows
