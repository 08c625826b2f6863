"""
Which regime is a measure in?
=============================

The classifier looks at the gcd of each digit with p and q.
"""

from moranspec import MoranMeasure, classify

examples = {
    "rho=1/4, [2]": MoranMeasure.build(1, 4, 1, period=[2]),
    "rho=1/2, [3]": MoranMeasure.build(1, 2, 1, period=[3]),
    "rho=5/7, [5]": MoranMeasure.build(5, 7, 1, period=[5]),
    "rho=1/2, [2] then [3]": MoranMeasure.build(1, 2, 1, preperiod=[2], period=[3]),
    "rho=2/9, [3]": MoranMeasure.build(2, 9, 1, period=[3]),
    "rho=(2/3)^(1/2), [5, 7]": MoranMeasure.build(2, 3, 2, period=[5, 7]),
}

for name, m in examples.items():
    c = classify(m)
    extra = f" (scope {c.scope}, exceptions {list(c.exceptions)})" if c.exceptions else ""
    print(f"{name:<26} {c.label}{extra}")
    for row in c.gcd_table:
        print(f"{'':<28}N={row.digit} gcd(q,N)={row.gcd_q} gcd(p,N)={row.gcd_p}")
