"""Words the Kolakoski word provably avoids, generated by run-length expansion.

If a word w never occurs in the Kolakoski word, neither does any word whose
run-length sequence contains w.  Iterating that observation from the
single-letter word 3 grows a binary tree of avoided words; level d doubles
the previous level, and levels 1..d together form a factor-free set of
2^(d+1) - 2 words, closed under swapping the letters.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union


class CollisionError(RuntimeError):
    """Two distinct expansions produced the same word."""


class NotFactorFreeError(ValueError):
    """A word of the set occurs inside another word of the set."""

    def __init__(self, inner: str, outer: str):
        super().__init__(f"{inner!r} is a factor of {outer!r}")
        self.witness = (inner, outer)


def expand(runs: Sequence[int] | str, start: int | str) -> str:
    """Inflate a run-length word into letters, padding unit end runs.

    Alternating blocks are laid down with runs[i] copies in block i, the
    first block using `start`.  A run of length 1 at either end would not
    survive a run-length reading on its own, so the result is padded there
    with one copy of the neighbouring letter; this forces the run-length
    sequence of the output to contain `runs` as a factor.
    """
    counts = [int(r) for r in runs]
    if not counts:
        raise ValueError("runs must be nonempty")
    if any(r not in (1, 2, 3) for r in counts):
        raise ValueError("run entries must be in {1, 2, 3}")
    first = str(start)
    if first not in ("1", "2"):
        raise ValueError("start must be 1 or 2")
    other = "2" if first == "1" else "1"
    parts = []
    sym = first
    for r in counts:
        parts.append(sym * r)
        sym = "2" if sym == "1" else "1"
    word = "".join(parts)
    last_sym = first if len(counts) % 2 == 1 else other
    if counts[0] == 1:
        word = other + word
    if counts[-1] == 1:
        word = word + ("2" if last_sym == "1" else "1")
    return word


@dataclass
class AvoidSet:
    """Avoided words from tree levels 1..depth, sorted by (length, lex)."""

    depth: int
    words: tuple[str, ...]
    levels: Mapping[int, frozenset[str]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word: str) -> bool:
        return word in set(self.words)


def avoided_set(d: int) -> AvoidSet:
    """Generate levels 1..d of the avoided-word tree.

    Raises CollisionError if two expansions coincide, which would falsify
    the 2^(d+1) - 2 count; no collision is known to occur.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    levels: dict[int, frozenset[str]] = {}
    seen: dict[str, int] = {}
    for k in range(1, d + 1):
        if k == 1:
            children = [expand([3], s) for s in "12"]
        else:
            children = [
                expand(parent, s)
                for parent in sorted(levels[k - 1], key=lambda w: (len(w), w))
                for s in "12"
            ]
        for w in children:
            if w in seen:
                raise CollisionError(
                    f"{w!r} generated at level {k} and level {seen[w]}"
                )
            seen[w] = k
        levels[k] = frozenset(children)
    words = tuple(sorted(seen, key=lambda w: (len(w), w)))
    if len(words) != 2 ** (d + 1) - 2:
        raise CollisionError(f"expected {2 ** (d + 1) - 2} words, got {len(words)}")
    return AvoidSet(d, words, levels)


def verify_factor_free(words: Iterable[str]) -> tuple[bool, tuple[str, str] | None]:
    """Check that no word is a contiguous factor of another.

    Returns (True, None) on success, else (False, (inner, outer)).
    """
    ws = sorted(set(words), key=lambda w: (len(w), w))
    for i, small in enumerate(ws):
        for big in ws[i + 1 :]:
            if small in big:
                return False, (small, big)
    return True, None


WordsLike = Union[AvoidSet, Iterable[str]]


def as_words(S: WordsLike) -> tuple[str, ...]:
    """Normalize a word collection to a sorted, deduplicated tuple."""
    if isinstance(S, AvoidSet):
        return S.words
    ws = tuple(sorted(set(S), key=lambda w: (len(w), w)))
    for w in ws:
        if set(w) - {"1", "2"}:
            raise ValueError(f"word {w!r} contains letters outside {{1, 2}}")
    return ws


def ensure_factor_free(words: Sequence[str]) -> None:
    ok, witness = verify_factor_free(words)
    if not ok:
        raise NotFactorFreeError(*witness)


def read_word_file(path: str | os.PathLike) -> tuple[str, ...]:
    """Parse a word-set file: one word per line, '#' starts a comment line."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            if set(s) - {"1", "2"}:
                raise ValueError(f"{path}:{lineno}: invalid word {s!r}")
            words.append(s)
    return tuple(words)
