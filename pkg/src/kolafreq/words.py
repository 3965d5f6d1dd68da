"""Kolakoski word generation, run lengths, and factor search.

Letters are the characters "1" and "2" and words are plain strings, which
keeps factor search (`in`) at C speed even for multi-megabyte prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Iterable

_SWAP = str.maketrans("12", "21")
_DIGITS = bytes.maketrans(bytes([1, 2]), b"12")


def swap_letters(word: str) -> str:
    """Interchange the letters 1 and 2."""
    return word.translate(_SWAP)


@dataclass(frozen=True)
class PrefixStats:
    """Census of the letter 1 in a length-n prefix."""

    n: int
    ones: int

    def __post_init__(self) -> None:
        if not 0 <= self.ones <= self.n:
            raise ValueError(f"need 0 <= ones <= n, got ones={self.ones}, n={self.n}")

    @property
    def ratio(self) -> Fraction:
        """Empirical frequency of 1 over the prefix."""
        if self.n == 0:
            raise ValueError("ratio undefined for the empty prefix")
        return Fraction(self.ones, self.n)


def prefix_stats(word: str) -> PrefixStats:
    return PrefixStats(len(word), word.count("1"))


def kolakoski_prefix(n: int, first_letter: int | str = 2) -> str:
    """First n letters of the self-run-length word starting with `first_letter`.

    Self-reading two-pointer construction: each new run's length is dictated
    by the already-generated sequence, so the whole prefix is built in one
    O(n) pass.  Starting with 2 gives the classical word; starting with 1
    gives the variant whose tail agrees with it.
    """
    first = str(first_letter)
    if first not in ("1", "2"):
        raise ValueError("first_letter must be 1 or 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ""
    # Seeds cover the initial self-referential runs; from there the read
    # pointer always trails the write position.
    if first == "2":
        seq = [2, 2]
        read = 1
    else:
        seq = [1, 2, 2]
        read = 2
    append = seq.append
    while len(seq) < n:
        letter = 3 - seq[-1]
        run = seq[read]
        append(letter)
        if run == 2:
            append(letter)
        read += 1
    return bytes(seq[:n]).translate(_DIGITS).decode("ascii")


def run_lengths(word: str) -> list[int]:
    """Lengths of the maximal runs of equal letters, in order."""
    return [sum(1 for _ in group) for _, group in groupby(word)]


def contains_any_factor(word: str, factors: Iterable[str]) -> bool:
    """True iff some element of `factors` occurs as a contiguous factor of `word`."""
    return any(f in word for f in factors)
