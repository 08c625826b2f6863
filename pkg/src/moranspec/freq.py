"""Exact frequencies in the rational span of ``1, rho**-1, ..., rho**-(r-1)``.

Because ``q*x**r - p`` is the minimal polynomial of rho, those powers are
linearly independent over Q and every ``rho**-e`` folds into exactly one
coordinate via ``rho**-r = q/p``. Coordinate ``i`` collects the levels
``n = i (mod r)``, so a frequency with two nonzero coordinates straddles
two branches of the measure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import gmpy2
from gmpy2 import mpfr

from .exact import parse_rational
from .measure import ContractionRatio, MoranMeasure

__all__ = [
    "Frequency",
    "ZeroWitness",
    "format_frequency",
    "from_zero_form",
    "monomial",
    "parse_frequency",
    "subtract",
    "to_real",
]


@dataclass(frozen=True)
class Frequency:
    """``sum(coefficients[i] * rho**-i)`` for the tagged ratio.

    Equality and hashing are structural, so frequencies can be stored in
    sets. Arithmetic between different ratios raises ``ValueError``.
    """

    coefficients: tuple[Fraction, ...]
    ratio: ContractionRatio

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != self.ratio.r:
            raise ValueError(f"expected {self.ratio.r} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, ratio: ContractionRatio) -> "Frequency":
        return cls((Fraction(0),) * ratio.r, ratio)

    @classmethod
    def rational(cls, ratio: ContractionRatio, value) -> "Frequency":
        return cls((Fraction(value),) + (Fraction(0),) * (ratio.r - 1), ratio)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates."""
        return tuple(i for i, c in enumerate(self.coefficients) if c)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check(self, other: "Frequency") -> None:
        if not isinstance(other, Frequency):
            raise TypeError(f"expected Frequency, got {type(other).__name__}")
        if other.ratio != self.ratio:
            raise ValueError(f"ratio mismatch: {self.ratio} vs {other.ratio}")

    def __add__(self, other: "Frequency") -> "Frequency":
        self._check(other)
        return Frequency(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.ratio)

    def __sub__(self, other: "Frequency") -> "Frequency":
        self._check(other)
        return Frequency(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)), self.ratio)

    def __neg__(self) -> "Frequency":
        return Frequency(tuple(-a for a in self.coefficients), self.ratio)

    def scale(self, factor) -> "Frequency":
        """Multiply by a rational scalar."""
        f = Fraction(factor)
        return Frequency(tuple(f * a for a in self.coefficients), self.ratio)

    def sort_key(self) -> tuple[Fraction, ...]:
        """Canonical total order used for deterministic output."""
        return self.coefficients

    def __lt__(self, other: "Frequency") -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_frequency(self)


@dataclass(frozen=True)
class ZeroWitness:
    """Certificate ``lambda = rho**-level * numerator / digit``."""

    level: int
    numerator: int
    digit: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if self.numerator == 0 or self.numerator % self.digit == 0:
            raise ValueError(f"numerator {self.numerator} is divisible by digit {self.digit}")

    def __str__(self) -> str:
        return f"{self.numerator}/{self.digit}@{self.level}"


def monomial(ratio: ContractionRatio, e: int) -> Frequency:
    """``rho**-e`` for any integer ``e`` (negative e gives positive powers of rho)."""
    j, i = divmod(e, ratio.r)
    coeffs = [Fraction(0)] * ratio.r
    coeffs[i] = ratio.inverse_base**j
    return Frequency(tuple(coeffs), ratio)


def from_zero_form(measure: MoranMeasure, n: int, a: int) -> Frequency:
    """The zero ``rho**-n * a / N_n`` of the Fourier transform."""
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    N = measure.digit(n)
    if a == 0 or a % N == 0:
        raise ValueError(f"{a} is divisible by N_{n} = {N}; not a zero")
    return monomial(measure.ratio, n).scale(Fraction(a, N))


def subtract(f1: Frequency, f2: Frequency) -> Frequency:
    return f1 - f2


def to_real(f: Frequency, precision_bits: int = 128) -> mpfr:
    """Numeric value of ``f`` as an MPFR float with ``precision_bits`` bits."""
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")
    if f.is_zero:
        return mpfr(0, precision_bits)
    ratio = f.ratio
    # guard bits absorb cancellation between coordinates and coefficient size
    size = max(c.numerator.bit_length() + c.denominator.bit_length() for c in f.coefficients)
    with gmpy2.context(gmpy2.get_context(), precision=precision_bits + 64 + size):
        inv_rho = gmpy2.root(mpfr(ratio.q) / ratio.p, ratio.r)
        total = mpfr(0)
        power = mpfr(1)
        for c in f.coefficients:
            if c:
                total += gmpy2.mpq(c.numerator, c.denominator) * power
            power *= inv_rho
    return mpfr(total, precision_bits)


def format_frequency(f: Frequency) -> str:
    """Vector literal ``c0:c1:...:c(r-1)``."""
    return ":".join(str(c) for c in f.coefficients)


def parse_frequency(text: str, measure: MoranMeasure) -> Frequency:
    """Parse a vector literal ``c0:...:c(r-1)`` or a zero-form literal ``a/N@n``."""
    t = text.strip()
    if "@" in t:
        head, _, level = t.partition("@")
        num, sep, den = head.partition("/")
        try:
            if not sep:
                raise ValueError
            a, N, n = int(num), int(den), int(level)
        except ValueError:
            raise ValueError(f"malformed zero-form literal {text!r}; expected a/N@n") from None
        if n < 1:
            raise ValueError(f"level in {text!r} must be >= 1")
        if measure.digit(n) != N:
            raise ValueError(f"{text!r}: digit at level {n} is {measure.digit(n)}, not {N}")
        return from_zero_form(measure, n, a)
    parts = t.split(":")
    if len(parts) != measure.r:
        raise ValueError(f"{text!r}: expected {measure.r} ':'-separated coefficients")
    return Frequency(tuple(parse_rational(p) for p in parts), measure.ratio)


def parse_family(text: str, measure: MoranMeasure) -> list[Frequency]:
    """Comma-separated frequency literals."""
    items = [s for s in (x.strip() for x in text.split(","))]
    if not items or any(not s for s in items):
        raise ValueError(f"malformed family {text!r}")
    return [parse_frequency(s, measure) for s in items]


def sorted_frequencies(freqs: Iterable[Frequency]) -> list[Frequency]:
    return sorted(freqs, key=Frequency.sort_key)
