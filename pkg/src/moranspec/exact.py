"""Integer and rational number-theory primitives.

Rationals are :class:`fractions.Fraction`, which is normalized on
construction (lowest terms, positive denominator, zero as 0/1).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction

__all__ = [
    "Rational",
    "integer_root",
    "is_prime",
    "lcm",
    "multiplicative_order",
    "padic_valuation",
    "perfect_power_decompose",
    "parse_rational",
]


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of n >= 0, or None if n is not a perfect k-th power."""
    if n < 0 or k < 1:
        raise ValueError("integer_root needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    if k == 2:
        x = isqrt(n)
        return x if x * x == n else None
    # float estimate, then fix up with exact integer comparisons
    x = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k)
    lo, hi = max(x - 2, 0), x + 2
    if lo**k > n or hi**k < n:
        lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def perfect_power_decompose(n: int) -> tuple[int, int]:
    """Write ``n = base**exponent`` with the exponent as large as possible.

    >>> perfect_power_decompose(64)
    (2, 6)
    """
    if n < 2:
        raise ValueError(f"perfect_power_decompose needs n >= 2, got {n}")
    for e in range(n.bit_length(), 1, -1):
        b = integer_root(n, e)
        if b is not None and b >= 2:
            return b, e
    return n, 1


def multiplicative_order(a: int, m: int) -> int:
    """Smallest s >= 1 with a**s == 1 (mod m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"order of {a} mod {m} undefined: gcd({a}, {m}) = {gcd(a, m)}")
    a %= m
    x, s = a, 1
    while x != 1:
        x = x * a % m
        s += 1
    return s


def padic_valuation(n: int, d: int) -> int:
    """Largest v with d**v dividing n."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if d < 2:
        raise ValueError(f"base must be >= 2, got {d}")
    n = abs(n)
    v = 0
    while n % d == 0:
        n //= d
        v += 1
    return v


def is_prime(n: int) -> bool:
    # trial division; digit cardinalities are small
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def parse_rational(text: str) -> Fraction:
    """Parse ``-3/5`` or ``2``; decimals and whitespace inside are rejected."""
    t = text.strip()
    num, sep, den = t.partition("/")
    try:
        if not _is_int_literal(num) or (sep and not _is_int_literal(den, signed=False)):
            raise ValueError
        return Fraction(int(num), int(den) if sep else 1)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def _is_int_literal(s: str, signed: bool = True) -> bool:
    if signed and s[:1] in "+-":
        s = s[1:]
    return s.isascii() and s.isdigit()
