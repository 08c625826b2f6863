"""
Maximal orthogonal families when the digits are coprime to p and q
==================================================================

Orthogonal sets of exponentials are cliques in the graph whose edges join
frequencies differing by a zero. When every digit is coprime to p and q, no
family is larger than the largest digit M.
"""

import time

from moranspec import MoranMeasure, construct_lambda0, enumerate_zeros, is_bizero_family, max_orthogonal_family

for m, n_max, a_max in [
    (MoranMeasure.build(1, 2, 1, period=[3]), 8, 40),
    (MoranMeasure.build(2, 3, 2, period=[5, 7]), 8, 30),
]:
    t0 = time.perf_counter()
    cands = enumerate_zeros(m, n_max, a_max)
    fam = max_orthogonal_family(m, cands)
    print(m)
    print(f"  {len(cands)} candidate zeros, largest family {len(fam)} (M = {m.M}), "
          f"{time.perf_counter() - t0:.1f}s")
    print("  search result:", ", ".join(map(str, fam)))

    # the explicit family reaches the bound
    l0 = construct_lambda0(m)
    print("  explicit family:", ", ".join(map(str, l0)), "->", bool(is_bizero_family(m, list(l0))))
