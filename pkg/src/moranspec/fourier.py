"""Numeric Fourier transform of a Moran measure with certified error bounds.

The transform is the infinite product of mask polynomials
``M_N(x) = (1/N) * sum_{j<N} exp(-2*pi*i*j*x)`` evaluated at ``rho**n * xi``.
It is truncated after ``K`` factors; since ``|M_N(x) - 1| <= pi*(N-1)*|x|``
and ``|M_N| <= 1``, the discarded tail moves the product by at most
``exp(pi*(M-1)*|xi|*rho**(K+1)/(1-rho)) - 1``.

Numeric zeros are advisory. Exact membership lives in :mod:`moranspec.zeros`.
"""
from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import gmpy2
from gmpy2 import mpc, mpfr

from .measure import MoranMeasure

__all__ = [
    "CertifiedComplex",
    "PrecisionError",
    "ft_eval",
    "mask_value",
    "max_precision_bits",
    "sample_ft",
    "tail_bound",
    "write_csv",
]

DEFAULT_PRECISION = 128
PRECISION_CAP = 4096


class PrecisionError(ArithmeticError):
    """The requested tolerance needs more bits than the configured cap."""


def max_precision_bits() -> int:
    """Precision cap, overridable through ``MORAN_MAX_PRECISION_BITS``."""
    env = os.environ.get("MORAN_MAX_PRECISION_BITS")
    if env is None:
        return PRECISION_CAP
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"MORAN_MAX_PRECISION_BITS must be an integer, got {env!r}") from None
    if value < 53:
        raise ValueError("MORAN_MAX_PRECISION_BITS must be >= 53")
    return value


@dataclass(frozen=True)
class CertifiedComplex:
    """``re + i*im`` within ``error_bound`` (absolute) of the true value."""

    re: mpfr
    im: mpfr
    error_bound: mpfr
    terms: int = 0
    precision: int = 0

    @property
    def value(self) -> mpc:
        return mpc(self.re, self.im)

    def __abs__(self) -> mpfr:
        return gmpy2.hypot(self.re, self.im)


def _ctx(bits: int):
    return gmpy2.context(gmpy2.get_context(), precision=bits)


def _to_mpfr(xi) -> mpfr:
    if isinstance(xi, Fraction):
        return mpfr(gmpy2.mpq(xi.numerator, xi.denominator))
    return mpfr(xi)


def mask_value(N: int, xi) -> mpc:
    """``(1/N) * sum_{j=0}^{N-1} exp(-2*pi*i*j*xi)`` at the current MPFR precision."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if isinstance(xi, (int, Fraction)):
        # exact reduction mod 1 for rational input
        x = _to_mpfr(Fraction(xi) % 1)
    else:
        x = _to_mpfr(xi)
        # reduce mod 1 first so large arguments keep their fractional digits
        x -= gmpy2.floor(x)
    theta = -2 * gmpy2.const_pi() * x
    w = mpc(gmpy2.cos(theta), gmpy2.sin(theta))
    total = mpc(1)
    for _ in range(N - 1):
        total = total * w + 1
    return total / N


def _log2(x: float) -> float:
    return math.log2(x) if x > 0 else 0.0


def _rho(measure: MoranMeasure) -> mpfr:
    return gmpy2.root(mpfr(measure.p) / measure.q, measure.r)


def tail_bound(measure: MoranMeasure, xi, K: int) -> mpfr:
    """Bound on ``|prod_{n>K} M_{N_n}(rho**n xi) - 1|``; nonincreasing in ``K``."""
    with _ctx(max(64, gmpy2.get_context().precision)):
        rho = _rho(measure)
        s = gmpy2.const_pi() * (measure.M - 1) * abs(_to_mpfr(xi)) * rho ** (K + 1) / (1 - rho)
        # round up slightly so floating error cannot undercut the bound
        return gmpy2.expm1(s) * (1 + mpfr(2) ** -40)


def _terms_needed(measure: MoranMeasure, xi_abs: float, target: float) -> int:
    """Smallest K with ``tail_bound(K) <= target``: float estimate, then exact checks."""
    if xi_abs == 0:
        return 0
    rho = (measure.p / measure.q) ** (1.0 / measure.r)
    # exp(s) - 1 <= target  <=>  s <= log1p(target)
    need = math.log1p(target) * (1 - rho) / (math.pi * (measure.M - 1) * xi_abs)
    K = max(0, math.ceil(math.log(need) / math.log(rho)) - 1) if need < 1 else 0
    while tail_bound(measure, xi_abs, K) > target:
        K += 1
    while K > 0 and tail_bound(measure, xi_abs, K - 1) <= target:
        K -= 1
    return K


def ft_eval(measure: MoranMeasure, xi, tol: float = 1e-12, precision: int | None = None) -> CertifiedComplex:
    """Fourier transform at ``xi`` with total certified error at most ``tol``.

    ``xi`` may be an int, float, ``Fraction`` or ``gmpy2.mpfr``; for
    irrational frequencies pass :func:`moranspec.freq.to_real` output.
    The working precision grows with ``log2|xi|`` (argument reduction eats
    the integer digits) and is capped by :func:`max_precision_bits`.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    cap = max_precision_bits()
    with _ctx(max(cap, 64)):
        x_in = _to_mpfr(xi)
    if not gmpy2.is_finite(x_in):
        raise ValueError(f"xi must be finite, got {xi}")
    if abs(x_in) >= mpfr(2) ** cap:
        raise PrecisionError(f"|xi| ~ 2^{int(gmpy2.log2(abs(x_in)))} exceeds the {cap}-bit cap")
    xi_abs = float(abs(x_in))
    K = _terms_needed(measure, xi_abs, tol / 2)
    want = max(DEFAULT_PRECISION, math.ceil(-_log2(tol)) + 32)
    bits = want + math.ceil(_log2(xi_abs + 1)) + math.ceil(_log2(K + 1)) + 16
    if precision is not None:
        bits = max(bits, precision)
    if bits > cap:
        raise PrecisionError(f"need {bits} bits for tol={tol} at |xi|={xi_abs:g}; cap is {cap}")
    with _ctx(bits):
        x = +x_in
        rho = _rho(measure)
        eps = mpfr(2) ** (-bits + 4)
        prod = mpc(1)
        arg = x
        # x itself may have been rounded on the way in
        err_arg = abs(x) * eps
        rounding = mpfr(0)
        for n in range(1, K + 1):
            arg *= rho
            err_arg = err_arg * rho + abs(arg) * eps
            N = measure.digit(n)
            prod *= mask_value(N, arg)
            # Lipschitz constant pi*(N-1) for the argument error, N-term sum rounding
            rounding += gmpy2.const_pi() * (N - 1) * err_arg + (N + 2) * eps
        err = tail_bound(measure, abs(x), K) + rounding * (1 + rounding)
        if err > tol:
            raise PrecisionError(f"certified error {float(err):.3g} exceeds tol={tol}")
        return CertifiedComplex(prod.real, prod.imag, err, K, bits)


def sample_ft(measure: MoranMeasure, xi_min: float, xi_max: float, count: int, tol: float = 1e-12) -> list[dict]:
    """Evaluate on ``count`` evenly spaced points of ``[xi_min, xi_max]``.

    Rows are dicts with keys ``xi, re, im, abs, err``; a row whose
    evaluation failed carries ``error`` text and NaN values instead.
    """
    if not xi_min < xi_max:
        raise ValueError("need xi_min < xi_max")
    if count < 2:
        raise ValueError("count must be >= 2")
    lo, hi = Fraction(xi_min), Fraction(xi_max)
    rows = []
    for k in range(count):
        xi = lo + (hi - lo) * k / (count - 1)
        try:
            v = ft_eval(measure, xi, tol)
        except PrecisionError as exc:
            nan = mpfr("nan")
            rows.append({"xi": xi, "re": nan, "im": nan, "abs": nan, "err": nan, "error": str(exc)})
            continue
        rows.append({"xi": xi, "re": v.re, "im": v.im, "abs": abs(v), "err": v.error_bound})
    return rows


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        with _ctx(128):
            x = _to_mpfr(x)
    if not gmpy2.is_finite(x):
        return "nan"
    if x == 0:
        return "0.0000000000000000e+00"
    mant, exp, _ = x.digits(10, 17)
    sign = "-" if mant.startswith("-") else ""
    mant = mant.lstrip("-")
    return f"{sign}{mant[0]}.{mant[1:]}e{exp - 1:+03d}"


def write_csv(rows: list[dict], out: str | Path | io.TextIOBase | None = None) -> str:
    """Render rows as CSV (header ``xi,re,im,abs,err``, LF endings, 17 significant digits)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["xi", "re", "im", "abs", "err"])
    for row in rows:
        w.writerow([_fmt(row[k]) for k in ("xi", "re", "im", "abs", "err")])
    text = buf.getvalue()
    if isinstance(out, (str, Path)):
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    elif out is not None:
        out.write(text)
    return text
