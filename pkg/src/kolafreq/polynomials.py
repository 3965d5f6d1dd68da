"""Exact integer polynomials in the two letter-count variables.

A monomial x1^a x2^b stands for words containing a ones and b twos; the
length variable t is implied (t-degree = a + b), never stored, and
reconstructed only for display.  All coefficients are arbitrary-precision
integers; nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

try:
    from gmpy2 import mpz  # GMP-backed integers speed up the packed kernels
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    mpz = int

Key = tuple[int, int]


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where none was expected."""


def _grlex(key: Key) -> tuple[int, int]:
    a, b = key
    return (a + b, a)


class WeightPoly:
    """Sparse polynomial with exact integer coefficients, keyed by (ones, twos)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    if a < 0 or b < 0:
                        raise ValueError(f"negative exponent in {(a, b)}")
                    clean[(a, b)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "WeightPoly":
        return cls()

    @classmethod
    def one(cls) -> "WeightPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "WeightPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, ones: int, twos: int, coeff: int = 1) -> "WeightPoly":
        return cls({(ones, twos): coeff})

    @classmethod
    def from_word(cls, word: str) -> "WeightPoly":
        """Weight of a single word: x1^(#1s) x2^(#2s)."""
        ones = word.count("1")
        return cls({(ones, len(word) - ones): 1})

    @classmethod
    def letter_sum(cls) -> "WeightPoly":
        """x1 + x2, the weight of one free letter position."""
        return cls({(1, 0): 1, (0, 1): 1})

    # -- accessors ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def constant_term(self) -> int:
        return self.terms.get((0, 0), 0)

    def t_degree(self) -> int:
        """Maximal a + b over stored terms; -1 for the zero polynomial."""
        return max((a + b for a, b in self.terms), default=-1)

    def coefficient(self, ones: int, twos: int) -> int:
        return self.terms.get((ones, twos), 0)

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def swap_vars(self) -> "WeightPoly":
        """Interchange x1 and x2."""
        return WeightPoly({(b, a): c for (a, b), c in self.terms.items()})

    def slices(self) -> dict[int, list[int]]:
        """Dense coefficient vectors per t-degree, indexed by the x1-exponent."""
        out: dict[int, list[int]] = {}
        for (a, b), c in self.terms.items():
            n = a + b
            if n not in out:
                out[n] = [0] * (n + 1)
            out[n][a] = c
        return out

    def evaluate(self, x1_value: int, x2_value: int) -> int:
        return sum(c * x1_value**a * x2_value**b for (a, b), c in self.terms.items())

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {(0, 0): other})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "WeightPoly":
        return WeightPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "WeightPoly | int") -> "WeightPoly":
        if isinstance(other, int):
            other = WeightPoly.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return WeightPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "WeightPoly | int") -> "WeightPoly":
        if isinstance(other, int):
            other = WeightPoly.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return WeightPoly(out)

    def __rsub__(self, other: int) -> "WeightPoly":
        return WeightPoly.constant(other) - self

    def __mul__(self, other: "WeightPoly | int") -> "WeightPoly":
        if isinstance(other, int):
            if other == 0:
                return WeightPoly()
            return WeightPoly({k: c * other for k, c in self.terms.items()})
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[Key, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return WeightPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "WeightPoly":
        if e < 0:
            raise ValueError("negative power")
        out = WeightPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def exact_div(self, divisor: "WeightPoly") -> "WeightPoly":
        """Divide by a polynomial known to divide exactly (graded-lex long division)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return WeightPoly()
        if len(divisor.terms) == 1 and (0, 0) in divisor.terms:
            c = divisor.terms[(0, 0)]
            if c == 1:
                return self
            if any(v % c for v in self.terms.values()):
                raise InexactDivisionError(f"coefficients not divisible by {c}")
            return WeightPoly({k: v // c for k, v in self.terms.items()})
        d_lead = max(divisor.terms, key=_grlex)
        d_lc = divisor.terms[d_lead]
        da, db = d_lead
        rem = dict(self.terms)
        quo: dict[Key, int] = {}
        while rem:
            lead = max(rem, key=_grlex)
            la, lb = lead
            lc = rem[lead]
            if la < da or lb < db or lc % d_lc:
                raise InexactDivisionError(f"{lead} not divisible by {d_lead}")
            qk = (la - da, lb - db)
            qc = lc // d_lc
            quo[qk] = qc
            for (a, b), c in divisor.terms.items():
                k = (a + qk[0], b + qk[1])
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return WeightPoly(quo)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        return format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"WeightPoly({self.terms!r})"


def format_terms(terms: Sequence[tuple[Key, int]]) -> str:
    """Human-readable sum with the t variable reconstructed from a + b."""
    if not terms:
        return "0"
    pieces = []
    for (a, b), c in terms:
        factors = []
        if abs(c) != 1 or (a, b) == (0, 0):
            factors.append(str(abs(c)))
        for name, e in (("x1", a), ("x2", b), ("t", a + b)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


# -- packed homogeneous slices ----------------------------------------------
#
# A degree-n slice (dense vector indexed by the x1-exponent) is packed into a
# single big integer with one signed digit of `width` bits per coefficient.
# Packing is evaluation at x1 = 2^width, which is a ring homomorphism, so
# sums and products of packed slices are exact regardless of intermediate
# digit growth; only values that are eventually *decoded* need their true
# coefficients to fit in a signed digit.


def pack_coefficients(coeffs: Sequence[int], width: int):
    acc = mpz(0)
    for c in reversed(coeffs):
        acc = (acc << width) + c
    return acc


def unpack_signed(packed, count: int, width: int) -> list[int]:
    x = mpz(packed)
    mask = (mpz(1) << width) - 1
    full = mpz(1) << width
    half = mpz(1) << (width - 1)
    out = []
    for _ in range(count):
        d = x & mask
        if d >= half:
            d -= full
        out.append(int(d))
        x = (x - d) >> width
    if x:
        raise OverflowError("unconsumed residue while unpacking; digit width too small")
    return out


# -- truncated series --------------------------------------------------------


@dataclass(frozen=True)
class Series:
    """Truncated weight series: slices[n][a] is the coefficient of x1^a x2^(n-a) t^n."""

    slices: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.slices) - 1

    def poly(self, n: int) -> WeightPoly:
        return WeightPoly({(a, n - a): c for a, c in enumerate(self.slices[n]) if c})

    def coefficient(self, n: int, ones: int) -> int:
        return self.slices[n][ones]

    def min_ones(self, n: int) -> int | None:
        for a, c in enumerate(self.slices[n]):
            if c:
                return a
        return None

    def max_ones(self, n: int) -> int | None:
        row = self.slices[n]
        for a in range(len(row) - 1, -1, -1):
            if row[a]:
                return a
        return None

    def word_count(self, n: int) -> int:
        return sum(self.slices[n])

    def validate_counting(self) -> None:
        """Assert the invariants of a word-counting series."""
        if self.slices[0] != (1,):
            raise AssertionError("constant slice must be exactly 1")
        for n, row in enumerate(self.slices):
            if len(row) != n + 1:
                raise AssertionError(f"slice {n} is not homogeneous of degree {n}")
            if any(c < 0 for c in row):
                raise AssertionError(f"negative coefficient in slice {n}")
            if sum(row) > 2**n:
                raise AssertionError(f"slice {n} counts more than 2^{n} words")


# -- rational generating functions -------------------------------------------


@dataclass(frozen=True)
class RationalGF:
    """Quotient of weight polynomials, denominator normalized to constant term 1."""

    numerator: WeightPoly
    denominator: WeightPoly

    @classmethod
    def canonical(cls, num: WeightPoly, den: WeightPoly) -> "RationalGF":
        """Reduce to lowest terms and scale so the denominator's constant is +1."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.constant_term == 0:
            raise ValueError("denominator must have a nonzero constant term")
        c = gcd(num.content(), den.content())
        if c > 1:
            num = WeightPoly({k: v // c for k, v in num.terms.items()})
            den = WeightPoly({k: v // c for k, v in den.terms.items()})
        g = _poly_gcd(num, den)
        if g.t_degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.constant_term < 0:
            num, den = -num, -den
        if den.constant_term != 1:
            raise ValueError("cannot normalize denominator constant term to 1")
        return cls(num, den)

    def d_poly(self) -> WeightPoly:
        """D in the 1 - D form of the denominator."""
        return WeightPoly.one() - self.denominator

    def equivalent(self, other: "RationalGF") -> bool:
        """Equality as rational functions (cross-multiplication; no gcd needed)."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


_PROBE_POINTS = ((2**64 + 3, 2**64 - 5), (2**96 + 9, 2**96 - 17))


def _poly_gcd(f: WeightPoly, g: WeightPoly) -> WeightPoly:
    """Gcd of two polynomials; fast integer-point probe with a symbolic fallback.

    A nontrivial common factor divides both values at any integer point, so a
    coprime evaluation pair certifies gcd 1 unless the factor evaluates to +-1
    there; two independent large points make that practically impossible, and
    the canonical-form consumers cross-check their results against independent
    series oracles anyway.
    """
    if f.is_zero() or g.is_zero():
        return WeightPoly.one()
    for x1v, x2v in _PROBE_POINTS:
        if gcd(f.evaluate(x1v, x2v), g.evaluate(x1v, x2v)) == 1:
            return WeightPoly.one()
    return _sympy_gcd(f, g)


def _sympy_gcd(f: WeightPoly, g: WeightPoly) -> WeightPoly:
    import sympy

    x1, x2 = sympy.symbols("x1 x2")
    fp = sympy.Poly.from_dict(dict(f.terms), x1, x2)
    gp = sympy.Poly.from_dict(dict(g.terms), x1, x2)
    h = fp.gcd(gp)
    return WeightPoly({(int(a), int(b)): int(c) for (a, b), c in h.as_dict().items()})
