"""
The closed-form basis and the Catalan numbers
=============================================

The even generators carry lambda_t = (-1)^{t+1} c_t / 2^t, the last one
mu_r = (2r+1) c_r / 2^r.  Compare the closed form against Buchberger's output.
"""

from catalan_groebner import closed_form_basis, interreduce, lambda_j, mu_r, catalan
from catalan_groebner.groebner import reduced_groebner_basis
from catalan_groebner.laurent import build_special_system

for j in range(8):
    print(j, catalan(j), lambda_j(j), (-1) ** (j + 1) * 2**j * lambda_j(j))

r = 4
G = closed_form_basis(r)
print("mu_4 =", mu_r(r))
for i, g in enumerate(G, 1):
    print(f"E~_{i} = {g}")

# G is Groebner but not reduced: lambda_r C_{-1}^{r+1} is divisible by the
# leading monomial of the last generator, so interreduction rewrites it.
print(interreduce(G) == reduced_groebner_basis(build_special_system(r)))
