"""Exact rational bounds on the limiting frequency of the letter 1.

Every bound has the two-sided form |freq - 1/2| <= epsilon and is valid
conditional on the limiting frequency existing; that caveat travels with
every rendered bound.  All arithmetic is exact (fractions of integers);
decimal renderings are display-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automaton import DegreeProfile
from .polynomials import RationalGF, WeightPoly

HALF = Fraction(1, 2)

CONDITIONAL_CAVEAT = "valid provided the limiting frequency exists"


class DegenerateDenominatorError(ValueError):
    """The denominator carries no monomials to bound with (D = 0)."""


@dataclass(frozen=True)
class MonomialList:
    """Monomials (coefficient, ones, length) with every length >= 1."""

    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for c, o, n in self.entries:
            if n < 1:
                raise ValueError(f"length must be >= 1, got {n}")
            if not 0 <= o <= n:
                raise ValueError(f"need 0 <= ones <= length, got {o}, {n}")

    @classmethod
    def from_poly(cls, poly: WeightPoly) -> "MonomialList":
        """Collect the non-constant monomials of a weight polynomial."""
        entries = tuple(
            (c, a, a + b) for (a, b), c in poly.sorted_terms() if a + b >= 1
        )
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)


def _entries(m: MonomialList | WeightPoly) -> tuple[tuple[int, int, int], ...]:
    if isinstance(m, WeightPoly):
        m = MonomialList.from_poly(m)
    if not m.entries:
        raise ValueError("empty monomial list")
    return m.entries


def minratio(m: MonomialList | WeightPoly) -> Fraction:
    """Minimum of ones/length over the monomials; coefficients are ignored."""
    return min(Fraction(o, n) for _, o, n in _entries(m))


def maxratio(m: MonomialList | WeightPoly) -> Fraction:
    """Maximum of ones/length over the monomials; coefficients are ignored."""
    return max(Fraction(o, n) for _, o, n in _entries(m))


@dataclass(frozen=True)
class Bound:
    """Two-sided bound |freq - 1/2| <= epsilon, with provenance and rigor flag."""

    epsilon: Fraction
    provenance: str
    rigor: str = "rigorous"

    def __post_init__(self) -> None:
        if not 0 <= self.epsilon <= HALF:
            raise ValueError(f"epsilon out of range: {self.epsilon}")
        if self.rigor not in ("rigorous", "semi-rigorous"):
            raise ValueError(f"unknown rigor flag {self.rigor!r}")

    @property
    def lower(self) -> Fraction:
        return HALF - self.epsilon

    @property
    def upper(self) -> Fraction:
        return HALF + self.epsilon

    def render(self) -> str:
        return (
            f"epsilon = {self.epsilon} ({decimal(self.epsilon)}), "
            f"{self.lower} <= freq <= {self.upper} "
            f"[{self.rigor}; {self.provenance}; {CONDITIONAL_CAVEAT}]"
        )


def decimal(value: Fraction) -> str:
    """Display-only decimal rendering at 6 significant digits."""
    return f"{float(value):.6g}"


def bound_from_term(min_ones: int, max_ones: int, n: int) -> Bound:
    """Bound from one series term: every length-n survivor has its ones-count
    between the extremes, so the block-partition argument pins the frequency
    between min_ones/n and max_ones/n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= min_ones <= max_ones <= n:
        raise ValueError(f"need 0 <= {min_ones} <= {max_ones} <= {n}")
    eps = max(HALF - Fraction(min_ones, n), Fraction(max_ones, n) - HALF)
    return Bound(eps, provenance=f"series-term({n})")


def bound_from_denominator(gf: RationalGF) -> Bound:
    """Asymptotic bound from the denominator 1 - D: the extreme ones-ratios of
    D's monomials bound every sufficiently deep series term."""
    d = gf.d_poly()
    if d.is_zero():
        raise DegenerateDenominatorError("denominator is 1; no monomials to bound with")
    monomials = MonomialList.from_poly(d)
    eps = max(HALF - minratio(monomials), maxratio(monomials) - HALF)
    return Bound(eps, provenance="denominator")


def best_bound(profile: DegreeProfile) -> tuple[int, Bound]:
    """Smallest epsilon over the profile's lengths; ties broken by smallest n."""
    if profile.N < 1:
        raise ValueError("profile must cover at least length 1")
    best_n = None
    best: Bound | None = None
    for n in range(1, profile.N + 1):
        b = bound_from_term(profile.min_ones[n], profile.max_ones[n], n)
        if best is None or b.epsilon < best.epsilon:
            best_n, best = n, b
    assert best_n is not None and best is not None
    return best_n, best
