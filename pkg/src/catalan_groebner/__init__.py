"""Exact Groebner-basis computations for the n = 2, m = 2r+1 Laurent-series
system and its Catalan-number closed form."""

from .exactnum import Rational, binomial, catalan, general_binomial, lambda_j, mu_r, catalan_identity
from .groebner import (
    BuchbergerOptions,
    GroebnerWitness,
    buchberger,
    ideal_equal,
    interreduce,
    is_groebner,
    groebner_witness,
    reduced_groebner_basis,
    s_polynomial,
)
from .laurent import (
    LaurentSeries,
    SystemSpec,
    build_general_system,
    build_special_system,
    coefficient,
    e_poly_direct,
    generic_C,
    series_inverse,
    series_mul,
    series_pow,
)
from .polyring import IdealBasis, Polynomial, Ring, Term, lex_compare, normal_form, unknowns_ring
from .verify import VerificationReport, closed_form_basis, verify_all, verify_central, verify_tilde_construction

__version__ = "0.1.0"

__all__ = [
    "Rational", "binomial", "catalan", "general_binomial", "lambda_j", "mu_r", "catalan_identity",
    "BuchbergerOptions", "GroebnerWitness", "buchberger", "ideal_equal", "interreduce", "is_groebner",
    "groebner_witness", "reduced_groebner_basis", "s_polynomial",
    "LaurentSeries", "SystemSpec", "build_general_system", "build_special_system", "coefficient",
    "e_poly_direct", "generic_C", "series_inverse", "series_mul", "series_pow",
    "IdealBasis", "Polynomial", "Ring", "Term", "lex_compare", "normal_form", "unknowns_ring",
    "VerificationReport", "closed_form_basis", "verify_all", "verify_central", "verify_tilde_construction",
]
