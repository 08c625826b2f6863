"""Exact membership in the zero set of the Fourier transform.

The zero set is the union over levels ``n >= 1`` of
``rho**-n * a / N_n`` with ``a`` an integer not divisible by ``N_n``
(negative ``a`` included; the transform is conjugate symmetric).
"""
from __future__ import annotations

from .freq import Frequency, ZeroWitness, from_zero_form, sorted_frequencies
from .measure import MoranMeasure

__all__ = ["all_witnesses", "enumerate_zeros", "is_zero", "level_bound", "zero_membership"]


def level_bound(measure: MoranMeasure, u: int) -> int:
    """Largest ``j`` with ``q**j <= M*|u|``.

    A witness at level ``n = i + j*r`` needs ``a = N_n*u*p**j / (v*q**j)``
    to be an integer. Since ``gcd(p, q) = 1`` and ``gcd(u, v) = 1``, ``q**j``
    must divide ``N_n*u``, hence ``q**j <= N_n*|u| <= M*|u|``. With ``q >= 2``
    this caps ``j`` and the search below terminates.
    """
    q = measure.q
    assert q >= 2, "q >= 2 is guaranteed by p < q"
    cap = measure.M * abs(u)
    j, power = 0, q
    while power <= cap:
        j += 1
        power *= q
    return j


def zero_membership(measure: MoranMeasure, f: Frequency) -> ZeroWitness | None:
    """Return the witness with the smallest level if ``f`` is a zero, else None."""
    if f.ratio != measure.ratio:
        raise ValueError(f"frequency is tagged with {f.ratio}, measure has {measure.ratio}")
    support = f.support
    if len(support) != 1:
        # zero, or spread over two branches (linear independence of rho**-i)
        return None
    i = support[0]
    c = f.coefficients[i]
    u, v = c.numerator, c.denominator
    p, q, r = measure.p, measure.q, measure.r
    j_max = level_bound(measure, u)
    for j in range(0 if i else 1, j_max + 1):
        n = i + j * r
        N = measure.digit(n)
        num = N * u * p**j
        den = v * q**j
        if num % den == 0:
            a = num // den
            if a % N:
                return ZeroWitness(n, a, N)
    return None


def all_witnesses(measure: MoranMeasure, f: Frequency) -> list[ZeroWitness]:
    """Every representation of ``f`` as a zero, ordered by level."""
    if f.ratio != measure.ratio:
        raise ValueError(f"frequency is tagged with {f.ratio}, measure has {measure.ratio}")
    if len(f.support) != 1:
        return []
    i = f.support[0]
    u, v = f.coefficients[i].numerator, f.coefficients[i].denominator
    p, q, r = measure.p, measure.q, measure.r
    out = []
    for j in range(0 if i else 1, level_bound(measure, u) + 1):
        n = i + j * r
        N = measure.digit(n)
        num, den = N * u * p**j, v * q**j
        if num % den == 0 and (num // den) % N:
            out.append(ZeroWitness(n, num // den, N))
    return out


def is_zero(measure: MoranMeasure, f: Frequency) -> bool:
    return zero_membership(measure, f) is not None


def enumerate_zeros(measure: MoranMeasure, n_max: int, a_max: int) -> list[Frequency]:
    """Distinct zeros ``rho**-n * a / N_n`` with ``n <= n_max`` and ``0 < |a| <= a_max``.

    Returned in canonical (coefficient-lexicographic) order.
    """
    if n_max < 1 or a_max < 1:
        raise ValueError("n_max and a_max must be >= 1")
    out: set[Frequency] = set()
    for n in range(1, n_max + 1):
        N = measure.digit(n)
        for a in range(1, a_max + 1):
            if a % N:
                f = from_zero_form(measure, n, a)
                out.add(f)
                out.add(-f)
    return sorted_frequencies(out)
