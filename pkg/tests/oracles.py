"""Independent reference computations used by the tests.

Nothing here calls the code paths it is used to check: zeros come from
brute-force scans over (level, numerator), powers of rho from iterated
shift-and-fold, numerics from mpmath, cliques from networkx or plain
subset enumeration.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd

import mpmath


def rho_inverse_power(p, q, r, n):
    """Coefficient vector of rho**-n by multiplying by rho**-1 n times."""
    v = [Fraction(0)] * r
    v[0] = Fraction(1)
    for _ in range(n):
        carry = v[-1]
        v = [Fraction(0)] + v[:-1]
        v[0] += carry * Fraction(q, p)
    return tuple(v)


def digit(preperiod, period, n):
    seq = list(preperiod)
    while len(seq) < n:
        seq.extend(period)
    return seq[n - 1]


def spec_bounds(p, q, r, M, n_max, a_max):
    """Scan ranges that cover the smallest witness of anything built from
    levels <= n_max and numerators <= a_max.

    Moving a zero from block j0 = n0 // r down to block j multiplies its
    numerator by about q**(j0 - j); moving it up multiplies by p**(j - j0)
    and needs q**(j - j0) to divide M*a, so at most log_q(M*a_max) blocks.
    """
    extra, power = 0, 1
    while power < M * a_max:
        power *= q
        extra += 1
    n_bound = n_max + r * extra
    J = n_max // r
    return n_bound, [M * a_max * max(q ** max(J - n // r, 0), p ** (n // r)) for n in range(n_bound + 1)]


def brute_witnesses(p, q, r, preperiod, period, queries, n_max, a_max):
    """For each query vector, the (n, a, N) with least n then least |a|, or None."""
    M = max(list(preperiod) + list(period))
    n_bound, a_bounds = spec_bounds(p, q, r, M, n_max, a_max)
    wanted = {tuple(qv): None for qv in queries}
    for n in range(1, n_bound + 1):
        N = digit(preperiod, period, n)
        base = rho_inverse_power(p, q, r, n)
        idx = next(i for i, c in enumerate(base) if c)
        c = base[idx] / N
        for mag in range(1, a_bounds[n] + 1):
            if mag % N == 0:
                continue
            for a in (mag, -mag):
                vec = [Fraction(0)] * r
                vec[idx] = c * a
                key = tuple(vec)
                if key in wanted and wanted[key] is None:
                    wanted[key] = (n, a, N)
    return wanted


def mp_rho(p, q, r):
    return mpmath.root(mpmath.mpf(p) / q, r)


def mp_value(p, q, r, coeffs):
    rho = mp_rho(p, q, r)
    return sum(mpmath.mpf(c.numerator) / c.denominator * rho ** (-i) for i, c in enumerate(coeffs))


def mp_ft(p, q, r, preperiod, period, xi, terms):
    """Truncated product of mask polynomials, straight from the definition."""
    rho = mp_rho(p, q, r)
    prod = mpmath.mpc(1)
    for n in range(1, terms + 1):
        N = digit(preperiod, period, n)
        x = rho**n * xi
        prod *= sum(mpmath.expjpi(-2 * j * x) for j in range(N)) / N
    return prod


def totient(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def brute_order(a, m):
    for s in range(1, m + 1):
        if pow(a, s, m) == 1 % m:
            return s
    return None


def has_clique_exhaustive(adj_sets, k):
    """Any k-clique, by extending every edge through common neighbours."""
    n = len(adj_sets)
    if k <= 1:
        return n >= k
    def extend(clique, cands):
        if len(clique) == k:
            return True
        for v in sorted(cands):
            if v > clique[-1] and extend(clique + [v], cands & adj_sets[v]):
                return True
        return False
    return any(extend([u], adj_sets[u]) for u in range(n))


def subsets_bizero(members, is_zero, k):
    """Brute force over all k-subsets; returns one bi-zero subset or None."""
    for combo in combinations(members, k):
        if all(is_zero(b - a) for a, b in combinations(combo, 2)):
            return combo
    return None
