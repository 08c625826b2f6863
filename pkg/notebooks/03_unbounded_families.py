"""
Arbitrarily large orthogonal families when the digits divide p
==============================================================

For rho = 5/7 with five digits per level, families of any finite size exist,
though none is infinite.
"""

from moranspec import MoranMeasure, construct_lambda_star, is_bizero_family

m = MoranMeasure.build(5, 7, 1, period=[5])

for alpha in (2, 5, 10, 20):
    fam = construct_lambda_star(m, alpha)
    largest = max(len(str(f)) for f in fam)
    print(f"alpha={alpha:>2}: orthogonal={bool(is_bizero_family(m, list(fam)))}, "
          f"longest literal {largest} characters")

# the members grow fast; here is the smallest family in full
for f in construct_lambda_star(m, 2):
    print(" ", f)

# the same construction on an irrational ratio, one family per branch
s = MoranMeasure.build(3, 5, 2, period=[3])
for branch in (1, 2):
    fam = construct_lambda_star(s, 4, branch)
    print(f"rho=(3/5)^(1/2), branch {branch}: supports {sorted({f.support for f in fam})}")
