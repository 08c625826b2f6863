"""
Zeros of the Fourier transform
==============================

Exact membership tests for the zero set of a Moran measure.
"""

from fractions import Fraction

from moranspec import MoranMeasure, enumerate_zeros, zero_membership
from moranspec.freq import Frequency, parse_frequency

# rho = 1/2 with three digits {0, 1, 2} at every level
m = MoranMeasure.build(1, 2, 1, period=[3])
print(m)

# 2/3 is a zero at level 1; 1/3 is not a zero at any level
for x in (Fraction(2, 3), Fraction(1, 3), Fraction(40, 3)):
    print(x, "->", zero_membership(m, Frequency.rational(m.ratio, x)))

# an irrational ratio: rho = (2/3)^(1/2), digits alternate 5, 7
s = MoranMeasure.build(2, 3, 2, period=[5, 7])
f = parse_frequency("1/7@2", s)
print("1/7@2 is the vector", f, "with witness", zero_membership(s, f))

# a mix of two branches is never a zero
g = f + parse_frequency("1/5@1", s)
print(g, "->", zero_membership(s, g))

# the first few zeros, with their witnesses
for z in enumerate_zeros(s, 2, 3):
    print(f"{str(z):>10}  {zero_membership(s, z)}")
