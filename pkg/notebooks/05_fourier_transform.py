"""
The Fourier transform on a grid
===============================

Certified evaluation of the infinite mask product, written out as CSV ready
for plotting.
"""

import sys
from fractions import Fraction

from moranspec import MoranMeasure, from_zero_form, to_real
from moranspec.fourier import ft_eval, sample_ft, write_csv

m = MoranMeasure.build(2, 3, 2, period=[5, 7])

# value, certified error and the number of factors used
v = ft_eval(m, Fraction(1, 3))
print(f"ft(1/3) = {complex(v.value):.12f} +- {float(v.error_bound):.1e} using {v.terms} factors")

# at an exact zero the numeric value collapses
z = from_zero_form(m, 3, 2)
print(f"ft({z}) has modulus {float(abs(ft_eval(m, to_real(z, 256)))):.1e}")

# a small grid on stdout; pass a path to write a file instead
rows = sample_ft(m, -4, 4, 9)
write_csv(rows, sys.stdout)
