"""Eventual linear quasi-polynomial structure of min-ones sequences.

The per-length minimum ones-count of words avoiding a factor set settles,
empirically, into m_n = c * floor(n / M) + k_(n mod M) from some onset on.
Detecting that structure, extracting the successive maxima of m_n / n in
closed form, and turning the limit c/M into a bound gives sharper,
semi-rigorous estimates: the fitted pattern is only verified inside the
computed window and is assumed to persist beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import HALF, Bound


class NoFitFoundError(ValueError):
    """No modulus within limits satisfies the shift relation."""


@dataclass(frozen=True)
class QuasiPolyFit:
    """Eventual fit m_n = slope * floor(n / modulus) + constants[n mod modulus]."""

    modulus: int
    slope: int
    constants: tuple[int, ...]
    onset: int
    window: tuple[int, int]

    @property
    def limit(self) -> Fraction:
        """Limiting ones-ratio slope/modulus."""
        return Fraction(self.slope, self.modulus)

    def predict(self, n: int) -> int:
        return self.slope * (n // self.modulus) + self.constants[n % self.modulus]


def fit_quasipoly(
    m: Sequence[int], max_modulus: int | None = None
) -> QuasiPolyFit:
    """Find the smallest modulus M with m[n + M] = m[n] + c from some onset on.

    The slope is read off the tail, the onset is the first index from which
    the shift relation holds through the end of the data, and the onset must
    fall in the first half of the window (otherwise the evidence is deemed
    too thin and the modulus is rejected).  Ascending search makes the
    returned modulus minimal by construction.
    """
    N = len(m) - 1
    if max_modulus is None:
        max_modulus = max(1, N // 4)
    if max_modulus < 1:
        raise ValueError("max_modulus must be >= 1")
    if N + 1 < 4 * max_modulus:
        raise ValueError(
            f"need at least {4 * max_modulus} values to test modulus {max_modulus}"
        )
    for modulus in range(1, max_modulus + 1):
        slope = m[N] - m[N - modulus]
        onset = 0
        for n in range(N - modulus, -1, -1):
            if m[n + modulus] - m[n] != slope:
                onset = n + 1
                break
        if onset <= N // 2:
            constants = []
            for i in range(modulus):
                n = N - ((N - i) % modulus)  # largest index in residue class i
                constants.append(m[n] - slope * (n // modulus))
            return QuasiPolyFit(modulus, slope, tuple(constants), onset, (onset, N))
    raise NoFitFoundError(
        f"no modulus <= {max_modulus} fits; data too short or not quasi-polynomial"
    )


@dataclass(frozen=True)
class MaximaReport:
    """Successive maxima of m_n / n and their eventual closed form.

    Beyond the onset the records all fall in one residue class i*, where
    they equal (slope * j + intercept) / (modulus * j + i*) for j >= first_j.
    """

    records: tuple[tuple[int, Fraction], ...]
    modulus: int
    slope: int
    residue: int
    intercept: int
    first_j: int
    attained: bool
    first_attained_n: int | None

    def formula(self) -> str:
        return (
            f"({self.slope} m + {self.intercept})/({self.modulus} m + {self.residue})"
        )

    def value(self, j: int) -> Fraction:
        return Fraction(
            self.slope * j + self.intercept, self.modulus * j + self.residue
        )


def successive_maxima(m: Sequence[int], fit: QuasiPolyFit) -> MaximaReport:
    """Scan the running maxima of m_n / n and classify the eventual records.

    Records with a previously attained ratio are skipped, so each ratio keeps
    its earliest n.  The trailing records must agree with the fit; any
    mismatch means the fit does not describe this sequence.
    """
    N = len(m) - 1
    records: list[tuple[int, Fraction]] = []
    best = Fraction(-1)
    for n in range(1, N + 1):
        r = Fraction(m[n], n)
        if r > best:
            records.append((n, r))
            best = r
    if not records or records[-1][0] < fit.onset:
        raise ValueError("no records beyond the fit onset; window too short")
    residue = records[-1][0] % fit.modulus
    tail_start = len(records) - 1
    while tail_start > 0:
        n_prev = records[tail_start - 1][0]
        if n_prev % fit.modulus != residue or n_prev < fit.onset:
            break
        tail_start -= 1
    for n, r in records[tail_start:]:
        if m[n] != fit.predict(n):
            raise ValueError(f"record at n={n} disagrees with the fitted values")
    intercept = fit.constants[residue]
    first_j = (records[tail_start][0] - residue) // fit.modulus
    limit = fit.limit
    first_attained_n = next((n for n, r in records if r == limit), None)
    return MaximaReport(
        records=tuple(records),
        modulus=fit.modulus,
        slope=fit.slope,
        residue=residue,
        intercept=intercept,
        first_j=first_j,
        attained=first_attained_n is not None,
        first_attained_n=first_attained_n,
    )


def semi_rigorous_bound(
    fit: QuasiPolyFit, maxima: MaximaReport | None = None
) -> Bound:
    """Bound from the fitted limit c/M.

    Semi-rigorous by default (the fit is conjectural beyond its window);
    upgraded to rigorous when the limit is attained at a finite length,
    since the attaining term already certifies the same epsilon.
    """
    eps = abs(HALF - fit.limit)
    rigor = "rigorous" if maxima is not None and maxima.attained else "semi-rigorous"
    provenance = (
        f"semi-rigorous-limit(M={fit.modulus}, c={fit.slope}, "
        f"onset={fit.onset}, window={fit.window[0]}..{fit.window[1]})"
    )
    return Bound(eps, provenance=provenance, rigor=rigor)
