"""
Checking every claim for a range of r
=====================================

``verify_all`` replays each argument (tilde construction, S-pair divisions,
Catalan identities, the central membership) and independently recomputes the
reduced basis with Buchberger.  A mutated basis shows what a failure looks like.
"""

from catalan_groebner import closed_form_basis, lambda_j, verify_all

for r in range(1, 5):
    print(verify_all(r).summary())

lams = [lambda_j(j) for j in range(4)]
lams[3] += 1
report = verify_all(3, basis=closed_form_basis(3, lambdas=lams))
print(report.summary())
print("failed:", report.failures())
