"""Moran measures with consecutive digits.

A measure is fixed by a contraction ratio ``rho = (p/q)**(1/r)`` and an
eventually periodic sequence of prime digit cardinalities ``N_1, N_2, ...``;
level ``n`` contributes the uniform measure on ``rho**n * {0, ..., N_n - 1}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

from .exact import integer_root, is_prime, perfect_power_decompose

__all__ = [
    "ConfigError",
    "ContractionRatio",
    "DigitSequence",
    "MoranMeasure",
    "canonicalize_ratio",
    "digit_at",
    "load_measure",
    "parse_measure_config",
    "sup_digit",
]


class ConfigError(ValueError):
    """Malformed measure description. ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _power_exponent(n: int) -> int:
    # 1 is an m-th power for every m; 0 acts as the identity for gcd
    return 0 if n == 1 else perfect_power_decompose(n)[1]


@dataclass(frozen=True)
class ContractionRatio:
    """Canonical ``(p, q, r)`` with ``rho = (p/q)**(1/r)``.

    Canonical means ``q*x**r - p`` is the minimal polynomial of rho. Build
    through :func:`canonicalize_ratio` unless the triple is known canonical.
    """

    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        p, q, r = self.p, self.q, self.r
        if not (1 <= p < q):
            raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
        if r < 1:
            raise ValueError(f"need r >= 1, got r={r}")
        if gcd(p, q) != 1:
            raise ValueError(f"p/q must be in lowest terms, gcd({p}, {q}) = {gcd(p, q)}")
        if gcd(gcd(_power_exponent(p), _power_exponent(q)), r) != 1:
            raise ValueError(f"({p}/{q})^(1/{r}) is not canonical; use canonicalize_ratio")

    @property
    def base(self) -> Fraction:
        """``rho**r = p/q``."""
        return Fraction(self.p, self.q)

    @property
    def inverse_base(self) -> Fraction:
        """``rho**-r = q/p``."""
        return Fraction(self.q, self.p)

    def __str__(self) -> str:
        if self.r == 1:
            return f"{self.p}/{self.q}"
        return f"({self.p}/{self.q})^(1/{self.r})"


def canonicalize_ratio(p: int, q: int, r: int) -> ContractionRatio:
    """Rewrite ``(p/q)**(1/r)`` with the smallest admissible root index.

    >>> canonicalize_ratio(4, 9, 4)
    ContractionRatio(p=2, q=3, r=2)
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if not (1 <= p < q):
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p/q must be in lowest terms, gcd({p}, {q}) = {gcd(p, q)}")
    while True:
        m = gcd(_power_exponent(p), _power_exponent(q))
        g = gcd(m, r)
        if g == 1:
            return ContractionRatio(p, q, r)
        p = integer_root(p, m) ** (m // g)
        q = integer_root(q, m) ** (m // g)
        r //= g


@dataclass(frozen=True)
class DigitSequence:
    """Eventually periodic digit cardinalities: ``preperiod`` then ``period`` forever."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "preperiod", tuple(int(x) for x in self.preperiod))
        object.__setattr__(self, "period", tuple(int(x) for x in self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        for d in self.preperiod + self.period:
            if not is_prime(d):
                raise ValueError(f"digit {d} is not prime")

    @classmethod
    def constant(cls, n: int) -> "DigitSequence":
        return cls((), (n,))

    @property
    def sup(self) -> int:
        return max(self.preperiod + self.period)

    @property
    def is_constant(self) -> bool:
        return len(set(self.preperiod + self.period)) == 1

    def __getitem__(self, n: int) -> int:
        return digit_at(self, n)


def digit_at(seq: DigitSequence, n: int) -> int:
    """``N_n`` for ``n >= 1``."""
    if n < 1:
        raise ValueError(f"levels start at 1, got {n}")
    k = len(seq.preperiod)
    if n <= k:
        return seq.preperiod[n - 1]
    return seq.period[(n - k - 1) % len(seq.period)]


def sup_digit(seq: DigitSequence) -> int:
    return seq.sup


@dataclass(frozen=True)
class MoranMeasure:
    ratio: ContractionRatio
    digits: DigitSequence = field()

    @classmethod
    def build(cls, p: int, q: int, r: int = 1, period=(2,), preperiod=()) -> "MoranMeasure":
        """Convenience constructor; the ratio is canonicalized."""
        return cls(canonicalize_ratio(p, q, r), DigitSequence(tuple(preperiod), tuple(period)))

    @property
    def p(self) -> int:
        return self.ratio.p

    @property
    def q(self) -> int:
        return self.ratio.q

    @property
    def r(self) -> int:
        return self.ratio.r

    @property
    def M(self) -> int:
        return self.digits.sup

    def digit(self, n: int) -> int:
        return digit_at(self.digits, n)

    def distinct_digits(self) -> list[int]:
        return sorted(set(self.digits.preperiod + self.digits.period))

    def __str__(self) -> str:
        pre = ",".join(map(str, self.digits.preperiod))
        per = ",".join(map(str, self.digits.period))
        return f"rho={self.ratio} preperiod=[{pre}] period=[{per}]"


_KEY_RE = re.compile(r"\s*([A-Za-z_]+)\s*=\s*")
_INT_RE = re.compile(r"[+-]?\d+")
_REQUIRED = ("p", "q", "r", "period")
_KEYS = _REQUIRED + ("preperiod",)


def _parse_int(text: str, lineno: int, col: int) -> int:
    t = text.strip()
    if not _INT_RE.fullmatch(t):
        raise ConfigError(f"expected an integer, got {t!r}", lineno, col)
    return int(t)


def _parse_list(text: str, lineno: int, col: int) -> list[int]:
    t = text.rstrip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ConfigError(f"expected a list like [3,5], got {t!r}", lineno, col)
    body = t[1:-1]
    if not body.strip():
        return []
    out = []
    offset = col + 1
    for item in body.split(","):
        stripped = item.strip()
        if not _INT_RE.fullmatch(stripped):
            c = offset + (len(item) - len(item.lstrip()))
            raise ConfigError(f"expected an integer list entry, got {stripped!r}", lineno, c)
        out.append(int(stripped))
        offset += len(item) + 1
    return out


def parse_measure_config(text: str) -> MoranMeasure:
    """Parse the line-oriented ``key = value`` measure format.

    Required keys are ``p``, ``q``, ``r`` and ``period``; ``preperiod``
    defaults to empty. ``#`` starts a comment line. Duplicate or unknown
    keys are errors.
    """
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        m = _KEY_RE.match(raw)
        if not m:
            col = len(raw) - len(raw.lstrip()) + 1
            raise ConfigError("expected 'key = value'", lineno, col)
        key = m.group(1)
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno, m.start(1) + 1)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno, m.start(1) + 1)
        rest, col = raw[m.end():], m.end() + 1
        if key in ("period", "preperiod"):
            values[key] = _parse_list(rest, lineno, col)
        else:
            values[key] = _parse_int(rest, lineno, col)
    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise ConfigError(f"missing required key(s): {', '.join(missing)}")
    p, q, r = values["p"], values["q"], values["r"]
    if not values["period"]:
        raise ConfigError("period must be nonempty")
    try:
        ratio = canonicalize_ratio(p, q, r)
        digits = DigitSequence(tuple(values.get("preperiod", [])), tuple(values["period"]))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return MoranMeasure(ratio, digits)


def load_measure(path: str | Path) -> MoranMeasure:
    return parse_measure_config(Path(path).read_text(encoding="utf-8"))
