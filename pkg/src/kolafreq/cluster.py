"""Goulden-Jackson cluster method with letter-tracking weights.

Words over {1, 2} avoiding a factor-free set S are enumerated by weight
x1^(#1s) x2^(#2s) t^(length).  Marked overlapping occurrences of S-words
form clusters; one unknown C_v per v in S satisfies

    C_v = -weight(v) - sum_u sum_L weight(v[L:]) * C_u,

summed over overlap lengths L for which the length-L suffix of u equals the
length-L prefix of v, and the full enumerator is

    weight(W) = 1 / (1 - (x1 + x2) t - sum_v C_v).

Two evaluation strategies are provided: solving the linear system exactly
over polynomials (rational closed form, small S) and iterating the same
equations degree by degree (truncated series, scales to large S).
"""

from __future__ import annotations

from typing import Callable, Optional

from .avoided import WordsLike, as_words, ensure_factor_free
from .polynomials import (
    RationalGF,
    Series,
    WeightPoly,
    mpz,
    pack_coefficients,
    unpack_signed,
)

Progress = Optional[Callable[[int, int], None]]
Cancel = Optional[Callable[[], bool]]


class ComputationCancelled(RuntimeError):
    """Raised when a cooperative cancellation callback returns True."""


def overlap_suffix_lengths(u: str, v: str) -> set[int]:
    """All L >= 1 below both lengths with the length-L suffix of u equal to
    the length-L prefix of v."""
    if not u or not v:
        raise ValueError("words must be nonempty")
    return {L for L in range(1, min(len(u), len(v))) if u[-L:] == v[:L]}


def _checked_words(S: WordsLike) -> tuple[str, ...]:
    words = as_words(S)
    if "" in words:
        raise ValueError("the empty word cannot be avoided")
    ensure_factor_free(words)
    return words


# -- rational closed form -----------------------------------------------------


def weight_gf(S: WordsLike) -> RationalGF:
    """Weight enumerator of words avoiding S, as a canonical rational function.

    The cluster system is solved by fraction-free (Bareiss) elimination over
    the integer polynomial ring; no pivoting is needed because every leading
    principal minor has constant term 1.
    """
    words = _checked_words(S)
    one = WeightPoly.one()
    letters = WeightPoly.letter_sum()
    if not words:
        return RationalGF.canonical(one, one - letters)
    m = len(words)
    A = [[WeightPoly.zero() for _ in range(m)] for _ in range(m)]
    rhs = []
    for i, v in enumerate(words):
        A[i][i] = one
        rhs.append(-WeightPoly.from_word(v))
        for j, u in enumerate(words):
            tails: dict[tuple[int, int], int] = {}
            for L in overlap_suffix_lengths(u, v):
                tail = v[L:]
                key = (tail.count("1"), len(tail) - tail.count("1"))
                tails[key] = tails.get(key, 0) + 1
            if tails:
                A[i][j] = A[i][j] + WeightPoly(tails)
    det, y = _bareiss_solve(A, rhs)
    cluster_sum = WeightPoly.zero()
    for yi in y:
        cluster_sum = cluster_sum + yi
    denominator = det - det * letters - cluster_sum
    return RationalGF.canonical(det, denominator)


def _bareiss_solve(
    A: list[list[WeightPoly]], rhs: list[WeightPoly]
) -> tuple[WeightPoly, list[WeightPoly]]:
    """Fraction-free solve of A y/det = rhs: returns (det, y) with y = det * solution."""
    m = len(A)
    M = [row[:] + [rhs[i]] for i, row in enumerate(A)]
    zero = WeightPoly.zero()
    prev = WeightPoly.one()
    for k in range(m - 1):
        pivot = M[k][k]
        for i in range(k + 1, m):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, m + 1):
                lhs = pivot * row_i[j] if row_i[j] else zero
                if mik and row_k[j]:
                    lhs = lhs - mik * row_k[j]
                row_i[j] = lhs.exact_div(prev) if lhs else zero
            row_i[k] = zero
        prev = pivot
    det = M[m - 1][m - 1]
    y = [zero] * m
    for i in range(m - 1, -1, -1):
        acc = det * M[i][m]
        for j in range(i + 1, m):
            if M[i][j] and y[j]:
                acc = acc - M[i][j] * y[j]
        y[i] = acc.exact_div(M[i][i]) if acc else zero
    return det, y


# -- truncated series ---------------------------------------------------------
#
# Degree-n slices are dense coefficient vectors packed into single big
# integers (one signed digit per x1-exponent), so a slice convolution is one
# integer multiplication.  Packing is a ring homomorphism; only the final
# word-counting slices are decoded, and their coefficients are at most 2^n,
# so a digit width of N + 2 bits is always sufficient.


def weight_series(
    S: WordsLike,
    terms: int,
    *,
    progress: Progress = None,
    should_cancel: Cancel = None,
) -> Series:
    """First slices p_0..p_terms of the weight enumerator of words avoiding S.

    Iterates the cluster equations degree by degree: every tail monomial has
    positive degree, so each degree-n cluster slice depends only on strictly
    smaller degrees, and the language slices follow from
    p_n = (x1 + x2) p_(n-1) + sum_k C_k p_(n-k).
    """
    if terms < 0:
        raise ValueError("terms must be >= 0")
    words = _checked_words(S)
    width = terms + 2
    zero = mpz(0)
    packed = [zero] * (terms + 1)
    packed[0] = mpz(1)
    if not words:
        equations: list[tuple[int, int, list[tuple[int, int, int]]]] = []
        min_len = terms + 1
    else:
        equations = []
        for v in words:
            tails = []
            for iu, u in enumerate(words):
                for L in overlap_suffix_lengths(u, v):
                    tail = v[L:]
                    tails.append((iu, len(tail), tail.count("1")))
            equations.append((len(v), v.count("1"), tails))
        min_len = min(len(w) for w in words)
    max_lookback = max((len(w) - 1 for w in words), default=0)
    cluster_total = [zero] * (terms + 1)
    history: list[dict[int, object]] = [{} for _ in words]
    for n in range(1, terms + 1):
        if should_cancel is not None and should_cancel():
            raise ComputationCancelled(f"cancelled at degree {n} of {terms}")
        for iv, (length, ones, tails) in enumerate(equations):
            if n < length:
                continue
            acc = zero
            if n == length:
                acc = acc - (mpz(1) << (width * ones))
            for iu, tail_deg, tail_ones in tails:
                prior = history[iu].get(n - tail_deg)
                if prior is not None:
                    acc = acc - (prior << (width * tail_ones))
            if acc:
                history[iv][n] = acc
                cluster_total[n] = cluster_total[n] + acc
        stale = n - max_lookback
        if stale >= 0:
            for h in history:
                h.pop(stale, None)
        acc = packed[n - 1] + (packed[n - 1] << width)
        for k in range(min_len, n + 1):
            ck = cluster_total[k]
            if ck:
                acc = acc + ck * packed[n - k]
        packed[n] = acc
        if progress is not None:
            progress(n, terms)
    slices = []
    for n in range(terms + 1):
        row = unpack_signed(packed[n], n + 1, width)
        if any(c < 0 for c in row):
            raise AssertionError(f"negative count decoded in slice {n}")
        slices.append(tuple(row))
    return Series(tuple(slices))


def series_from_gf(
    gf: RationalGF,
    terms: int,
    *,
    progress: Progress = None,
    should_cancel: Cancel = None,
) -> Series:
    """Expand numerator/denominator to the given order via the induced recurrence.

    Works for any well-formed rational function; a scalar bound pre-pass
    picks a packing width certified to hold every decoded coefficient.
    """
    if terms < 0:
        raise ValueError("terms must be >= 0")
    if gf.denominator.constant_term != 1:
        raise ValueError("denominator constant term must be 1")
    num_slices = {n: row for n, row in gf.numerator.slices().items() if n <= terms}
    den_slices = {
        n: row for n, row in gf.denominator.slices().items() if 0 < n <= terms
    }
    num_abs = {n: sum(abs(c) for c in row) for n, row in num_slices.items()}
    den_abs = {n: sum(abs(c) for c in row) for n, row in den_slices.items()}
    bound = [0] * (terms + 1)
    for n in range(terms + 1):
        b = num_abs.get(n, 0)
        for k, dk in den_abs.items():
            if k <= n:
                b += dk * bound[n - k]
        bound[n] = b
    width = max(max((b.bit_length() for b in bound), default=1), 1) + 2
    num_packed = {n: pack_coefficients(row, width) for n, row in num_slices.items()}
    den_packed = {n: pack_coefficients(row, width) for n, row in den_slices.items()}
    zero = mpz(0)
    packed = [zero] * (terms + 1)
    for n in range(terms + 1):
        if should_cancel is not None and should_cancel():
            raise ComputationCancelled(f"cancelled at degree {n} of {terms}")
        acc = num_packed.get(n, zero)
        for k, dk in den_packed.items():
            if k <= n and packed[n - k]:
                acc = acc - dk * packed[n - k]
        packed[n] = acc
        if progress is not None:
            progress(n, terms)
    slices = tuple(
        tuple(unpack_signed(packed[n], n + 1, width)) for n in range(terms + 1)
    )
    return Series(slices)
