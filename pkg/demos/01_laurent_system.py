"""
Equations from powers of a Laurent series
=========================================

Build C = x + C_{-1} x^{-1} + C_{-2} x^{-2} + ... with symbolic coefficients,
square it, and read off the equations that make C^2 a polynomial in x.
"""

from catalan_groebner import build_general_system, build_special_system, coefficient, generic_C, series_pow, SystemSpec
from catalan_groebner.polyring import unknowns_ring

# C truncated after C_{-9}; the ring orders C_{-9} > ... > C_{-1} > y
R = unknowns_ring(9)
C = generic_C(9, R)
C2 = series_pow(C, 2)

for k in range(1, 9):
    print(f"(C^2)_{{-{k}}} = {coefficient(C2, -k)}")

# The system for n = 2, m = 2r+1: the first 2r equations come from C^2, the last
# from (C^{2r+1})_{-1} + y.
E = build_special_system(2)
for i, g in enumerate(E, 1):
    print(f"E_{i} = {g}")

# Any (n, m) with n, m not dividing each other; weights lambda_i enter through
# C^{m-i}, including negative powers when n >= 3.
general = build_general_system(SystemSpec(3, 4, (1, 0, 0, 0, 0, 2)))
print(general.to_latex())
