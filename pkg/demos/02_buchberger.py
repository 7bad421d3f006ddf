"""
Buchberger's algorithm on the r = 3 system
==========================================

Compute the reduced lex Groebner basis of E_1, ..., E_7 and look at the run log.
"""

from catalan_groebner import BuchbergerOptions, build_special_system
from catalan_groebner.groebner import RunLog, reduced_groebner_basis

E = build_special_system(3)

for opts in (BuchbergerOptions(), BuchbergerOptions(use_coprime_criterion=False, pair_strategy="fifo")):
    log = RunLog()
    gb = reduced_groebner_basis(E, opts, log)
    print(opts, log.to_json())

# The reduced basis is the same whichever strategy produced it.
for g in gb:
    print(g)
