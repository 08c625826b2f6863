"""Orthogonal exponential families: verification, search, constructions,
regime classification and exact property checkers.

A set ``L`` of frequencies gives mutually orthogonal exponentials in
``L2(mu)`` exactly when every nonzero difference ``l - l'`` is a zero of the
Fourier transform of ``mu`` (a bi-zero set).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence

from .clique import maximum_clique
from .exact import lcm, multiplicative_order
from .freq import Frequency, monomial, sorted_frequencies
from .measure import MoranMeasure
from .zeros import all_witnesses, enumerate_zeros, zero_membership

__all__ = [
    "BizeroVerdict",
    "CongruenceResult",
    "CongruenceScan",
    "GcdRow",
    "HypothesisError",
    "OrthogonalFamily",
    "RegimeClassification",
    "check_equal_cardinality_property",
    "check_exponent_congruence",
    "classify",
    "construct_lambda0",
    "construct_lambda_star",
    "is_bizero_family",
    "max_orthogonal_family",
    "orthogonality_graph",
    "scan_exponent_congruence",
]


class HypothesisError(ValueError):
    """The measure does not satisfy the hypotheses a construction needs."""


@dataclass(frozen=True)
class BizeroVerdict:
    ok: bool
    pair: tuple[Frequency, Frequency] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class OrthogonalFamily:
    members: tuple[Frequency, ...]
    measure: MoranMeasure

    def __post_init__(self) -> None:
        if len(set(self.members)) != len(self.members):
            raise ValueError("family members must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _check_tags(measure: MoranMeasure, members: Iterable[Frequency]) -> None:
    for f in members:
        if f.ratio != measure.ratio:
            raise ValueError(f"frequency {f} is tagged with {f.ratio}, measure has {measure.ratio}")


def is_bizero_family(measure: MoranMeasure, members: Sequence[Frequency]) -> BizeroVerdict:
    """Check that all pairwise differences are zeros.

    Members are visited in canonical order; on failure the first offending
    pair ``(a, b)`` with ``a < b`` is reported.
    """
    members = list(members)
    _check_tags(measure, members)
    if len(set(members)) != len(members):
        raise ValueError("duplicate members in family")
    ordered = sorted_frequencies(members)
    for a, b in combinations(ordered, 2):
        if zero_membership(measure, b - a) is None:
            return BizeroVerdict(False, (a, b))
    return BizeroVerdict(True)


def orthogonality_graph(measure: MoranMeasure, vertices: Sequence[Frequency]) -> list[int]:
    """Bitset adjacency: ``u ~ v`` iff ``u - v`` is a zero."""
    n = len(vertices)
    adj = [0] * n
    for x, y in combinations(range(n), 2):
        d = vertices[x] - vertices[y]
        if len(d.support) == 1 and zero_membership(measure, d) is not None:
            adj[x] |= 1 << y
            adj[y] |= 1 << x
    return adj


def max_orthogonal_family(measure: MoranMeasure, candidates: Iterable[Frequency]) -> OrthogonalFamily:
    """Largest bi-zero subset of ``candidates`` together with 0.

    Families are anchored at 0 (translation does not change differences), so
    only candidates that are themselves zeros can join. Ties go to the
    lexicographically least member list in canonical order.
    """
    candidates = list(candidates)
    _check_tags(measure, candidates)
    zero = Frequency.zero(measure.ratio)
    vertices = sorted_frequencies(
        {f for f in candidates if not f.is_zero and zero_membership(measure, f) is not None}
    )
    adj = orthogonality_graph(measure, vertices)
    clique = maximum_clique(adj)
    members = sorted_frequencies([zero] + [vertices[k] for k in clique])
    return OrthogonalFamily(tuple(members), measure)


def _require(measure: MoranMeasure, q_coprime: bool, p_coprime: bool) -> None:
    p, q = measure.p, measure.q
    for N in measure.distinct_digits():
        if (gcd(q, N) == 1) != q_coprime:
            rel = "=" if q_coprime else ">"
            raise HypothesisError(f"need gcd(q, N) {rel} 1 for every digit; gcd({q}, {N}) = {gcd(q, N)}")
        if (gcd(p, N) == 1) != p_coprime:
            rel = "=" if p_coprime else ">"
            raise HypothesisError(f"need gcd(p, N) {rel} 1 for every digit; gcd({p}, {N}) = {gcd(p, N)}")


def construct_lambda0(measure: MoranMeasure) -> OrthogonalFamily:
    """The M-element family ``{0} u {j * rho**-t / M : 1 <= j < M}``.

    ``t`` is the first level whose digit equals the supremum ``M``. Requires
    every digit to be coprime to both ``p`` and ``q``.
    """
    _require(measure, q_coprime=True, p_coprime=True)
    M = measure.M
    t = next(n for n in range(1, len(measure.digits.preperiod) + len(measure.digits.period) + 1)
             if measure.digit(n) == M)
    base = monomial(measure.ratio, t)
    members = [Frequency.zero(measure.ratio)] + [base.scale(Fraction(j, M)) for j in range(1, M)]
    family = OrthogonalFamily(tuple(members), measure)
    if not is_bizero_family(measure, members):
        raise RuntimeError("construction failed verification")  # pragma: no cover
    return family


def construct_lambda_star(
    measure: MoranMeasure, alpha: int, branch: int = 1, lcm_mode: bool = False
) -> OrthogonalFamily:
    """``alpha`` mutually orthogonal frequencies when every digit divides ``p``.

    Member ``n`` (``1 <= n <= alpha``) is
    ``q**((alpha + n)*s) / N * rho**-(n*s*r + branch)`` with ``s`` the
    multiplicative order of ``q`` modulo the digit ``N``. Differences of
    members ``n1 > n2`` are zeros at level ``n1*s*r + branch`` with numerator
    ``q**((alpha+n1)*s) - q**((alpha+2*n2-n1)*s) * p**((n1-n2)*s)``, which is
    ``1 (mod N)`` because ``q**s = 1`` and ``p = 0 (mod N)``.

    Only constant digit sequences are accepted unless ``lcm_mode`` is set;
    then ``s`` is the lcm of the orders over all digits, each member uses the
    digit at its own level, and the result is verified before returning.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    r = measure.r
    if not 1 <= branch <= r:
        raise ValueError(f"branch must lie in 1..{r}, got {branch}")
    _require(measure, q_coprime=True, p_coprime=False)
    digits = measure.distinct_digits()
    if len(digits) > 1 and not lcm_mode:
        raise HypothesisError("construct_lambda_star needs a constant digit sequence (or lcm_mode)")
    q = measure.q
    s = lcm(*(multiplicative_order(q, N) for N in digits))
    members = []
    for n in range(1, alpha + 1):
        level = n * s * r + branch
        N = measure.digit(level)
        members.append(monomial(measure.ratio, level).scale(Fraction(q ** ((alpha + n) * s), N)))
    verdict = is_bizero_family(measure, members)
    if not verdict:
        if lcm_mode:
            raise HypothesisError(f"lcm-mode family is not bi-zero; offending pair {verdict.pair}")
        raise RuntimeError("construction failed verification")  # pragma: no cover
    return OrthogonalFamily(tuple(members), measure)


@dataclass(frozen=True)
class GcdRow:
    digit: int
    gcd_q: int
    gcd_p: int
    in_preperiod: bool
    in_period: bool


@dataclass(frozen=True)
class RegimeClassification:
    """Regime plus the per-digit gcd report it was derived from.

    ``scope`` is ``"all"`` when the deciding hypotheses hold at every level
    and ``"tail"`` when they hold on the periodic tail only, with the
    preperiod digits that break them listed in ``exceptions``.
    """

    regime: str
    M: int | None
    scope: str
    gcd_table: tuple[GcdRow, ...]
    exceptions: tuple[int, ...] = ()
    reasons: tuple[str, ...] = field(default=())

    @property
    def label(self) -> str:
        return f"{self.regime}({self.M})" if self.regime == "AtMostM" else self.regime


def _gcd_table(measure: MoranMeasure) -> tuple[GcdRow, ...]:
    pre, per = set(measure.digits.preperiod), set(measure.digits.period)
    return tuple(
        GcdRow(N, gcd(measure.q, N), gcd(measure.p, N), N in pre, N in per)
        for N in sorted(pre | per)
    )


def classify(measure: MoranMeasure) -> RegimeClassification:
    """Place the measure in the spectral / bounded / unbounded-finite trichotomy.

    Order of the rules:

    1. ``Spectral`` when r = 1 and ``q / (N_n * p)`` is a positive integer
       for every level n >= 2.
    2. ``AtMostM`` when every tail digit is coprime to p and q.
    3. ``UnboundedFinite`` when every tail digit is coprime to q and shares
       a factor with p.
    4. ``NoInfiniteOrthogonal`` when no tail digit shares a factor with q,
       so only finitely many levels can; an infinite orthogonal set needs
       infinitely many.
    5. ``PossiblyInfinite`` otherwise.

    Rules 2 and 3 are decided on the periodic tail; preperiod digits that
    violate them are reported in ``exceptions`` and set ``scope="tail"``.
    """
    p, q, r = measure.p, measure.q, measure.r
    table = _gcd_table(measure)
    rows = {row.digit: row for row in table}
    pre, per = measure.digits.preperiod, measure.digits.period
    later = set(pre[1:]) | set(per)

    if r == 1 and all(q % (N * p) == 0 for N in later):
        return RegimeClassification(
            "Spectral", None, "all", table,
            reasons=("r = 1 and q/(N*p) is an integer for every digit at levels >= 2: "
                     + ", ".join(f"{q}/({N}*{p}) = {q // (N * p)}" for N in sorted(later)),),
        )

    tail = sorted(set(per))

    def split(pred) -> tuple[bool, tuple[int, ...]]:
        ok_tail = all(pred(rows[N]) for N in tail)
        bad_pre = tuple(sorted({N for N in pre if not pred(rows[N])}))
        return ok_tail, bad_pre

    finite_note = "finitely many levels have gcd(q, N) > 1, so every orthogonal set is finite"

    ok, bad = split(lambda row: row.gcd_q == 1 and row.gcd_p == 1)
    if ok:
        scope = "tail" if bad else "all"
        M = max(tail) if bad else measure.M
        reasons = [f"gcd(q, N) = gcd(p, N) = 1 for every {'tail ' if bad else ''}digit; at most M = {M} "
                   "mutually orthogonal exponentials, attained"]
        if bad:
            reasons.append("preperiod digits " + ", ".join(map(str, bad)) + " break coprimality")
        reasons.append(finite_note)
        return RegimeClassification("AtMostM", M, scope, table, bad, tuple(reasons))

    ok, bad = split(lambda row: row.gcd_q == 1 and row.gcd_p > 1)
    if ok:
        scope = "tail" if bad else "all"
        reasons = [f"gcd(q, N) = 1 and gcd(p, N) > 1 for every {'tail ' if bad else ''}digit; "
                   "orthogonal families of every finite size exist", finite_note]
        if bad:
            reasons.append("preperiod digits " + ", ".join(map(str, bad)) + " break the hypotheses")
        return RegimeClassification("UnboundedFinite", None, scope, table, bad, tuple(reasons))

    if all(rows[N].gcd_q == 1 for N in tail):
        bad = tuple(sorted({N for N in pre if rows[N].gcd_q > 1}))
        return RegimeClassification("NoInfiniteOrthogonal", None, "all", table, bad, (finite_note,))

    return RegimeClassification(
        "PossiblyInfinite", None, "all", table,
        reasons=("infinitely many levels have gcd(q, N) > 1; no bound is decided here",),
    )


@dataclass(frozen=True)
class CongruenceResult:
    identity_holds: bool
    congruent: bool


def check_exponent_congruence(
    measure: MoranMeasure, terms: Sequence[tuple[int, int]]
) -> CongruenceResult:
    """Test ``b1*rho**k + b2*rho**j == b3*rho**u`` exactly.

    ``terms`` is ``((b1, k), (b2, j), (b3, u))``. For r > 1 a true identity
    forces ``k = j = u (mod r)``.
    """
    if measure.r == 1:
        raise ValueError("exponent congruence is vacuous for r = 1")
    (b1, k), (b2, j), (b3, u) = terms
    if 0 in (b1, b2, b3):
        raise ValueError("coefficients must be nonzero")
    if min(k, j, u) < 0:
        raise ValueError("exponents must be nonnegative")
    ratio = measure.ratio
    lhs = monomial(ratio, -k).scale(b1) + monomial(ratio, -j).scale(b2)
    rhs = monomial(ratio, -u).scale(b3)
    r = measure.r
    return CongruenceResult(lhs == rhs, k % r == j % r == u % r)


@dataclass(frozen=True)
class CongruenceScan:
    """Outcome of :func:`scan_exponent_congruence`."""

    cases: int
    identities: tuple[tuple[tuple[int, int], ...], ...]
    counterexamples: tuple[tuple[tuple[int, int], ...], ...]


def scan_exponent_congruence(measure: MoranMeasure, coefficients: Iterable[int], e_max: int) -> CongruenceScan:
    """Every ``b1*rho**k + b2*rho**j == b3*rho**u`` with ``b_i`` from ``coefficients``
    and exponents in ``[0, e_max]``.

    Same exact test as :func:`check_exponent_congruence`, but the identity is
    solved for ``b3`` instead of trying each value, so the cost is one pass
    over ``(k, j, u, b1, b2)``. ``counterexamples`` lists identities whose
    exponents are not congruent mod r.
    """
    if measure.r == 1:
        raise ValueError("exponent congruence is vacuous for r = 1")
    bs = sorted(set(coefficients))
    if 0 in bs:
        raise ValueError("coefficients must be nonzero")
    allowed = set(bs)
    r = measure.r
    # rho**e as (slot, value)
    mono = []
    for e in range(e_max + 1):
        f = monomial(measure.ratio, -e)
        (i,) = f.support
        mono.append((i, f.coefficients[i]))
    identities, bad = [], []
    for k, j, u in product(range(e_max + 1), repeat=3):
        (ik, ck), (ij, cj), (iu, cu) = mono[k], mono[j], mono[u]
        # nonzero terms in different slots can never cancel or merge
        if not ik == ij == iu:
            continue
        for b1 in bs:
            for b2 in bs:
                b3 = (b1 * ck + b2 * cj) / cu
                if b3.denominator == 1 and int(b3) in allowed:
                    terms = ((b1, k), (b2, j), (int(b3), u))
                    identities.append(terms)
                    if not k % r == j % r == u % r:
                        bad.append(terms)
    return CongruenceScan(len(bs) ** 3 * (e_max + 1) ** 3, tuple(identities), tuple(bad))


@dataclass(frozen=True)
class CardinalityViolation:
    first: Frequency
    second: Frequency
    digits_first: tuple[int, ...]
    digits_second: tuple[int, ...]
    digits_difference: tuple[int, ...]


def check_equal_cardinality_property(
    measure: MoranMeasure, n_max: int, a_max: int
) -> list[CardinalityViolation]:
    """Look for zeros whose difference is a zero with no common digit.

    For each ordered pair of enumerated zeros whose difference is again a
    zero, some witness of each of the three must use the same digit ``N``.
    Returns every pair where no such digit exists.
    """
    zeros = enumerate_zeros(measure, n_max, a_max)
    digit_sets = {f: {w.digit for w in all_witnesses(measure, f)} for f in zeros}
    violations = []
    for f1 in zeros:
        for f2 in zeros:
            if f1 == f2:
                continue
            d = f2 - f1
            if len(d.support) != 1:
                continue
            wd = all_witnesses(measure, d)
            if not wd:
                continue
            dd = {w.digit for w in wd}
            if not (digit_sets[f1] & digit_sets[f2] & dd):
                violations.append(CardinalityViolation(
                    f1, f2, tuple(sorted(digit_sets[f1])), tuple(sorted(digit_sets[f2])), tuple(sorted(dd))
                ))
    return violations
