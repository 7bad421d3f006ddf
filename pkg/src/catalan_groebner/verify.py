"""Closed-form Groebner basis G_{2r+1} and machine checks of the claims about it.

Working basis for memberships in I_{2r} is the closed form {E~_1..E~_{2r}}
itself (its leading monomials are distinct variables, so it is trivially
Groebner once the S-pair check passes).  ``cross-buchberger`` recomputes the
reduced basis from the raw equations as the independent route.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import exactnum as xn
from .groebner import BuchbergerOptions, groebner_witness, ideal_equal, interreduce, reduced_groebner_basis
from .laurent import build_special_system, coefficient, e_poly_direct, generic_C, series_pow
from .polyring import IdealBasis, Polynomial, Ring, unknowns_ring, reduce

__all__ = [
    "CLAIMS",
    "CheckResult",
    "VerificationReport",
    "closed_form_basis",
    "expected_reduced_basis",
    "odd_telescoping",
    "verify_tilde_construction",
    "verify_central",
    "check_closed_form",
    "verify_all",
]

CLAIMS = (
    "prop-caso-par",
    "cor-teorem",
    "prop-proposicion03",
    "lemma-catalan",
    "prop-catalan-identity",
    "prop-central",
    "cor-ideales-iguales",
    "thm-proposicion10",
    "cross-buchberger",
)


@dataclass
class CheckResult:
    passed: bool
    witness: str | None = None
    seconds: float = 0.0
    detail: str = ""

    def to_json(self) -> dict:
        return {"passed": self.passed, "witness": self.witness, "seconds": round(self.seconds, 6), "detail": self.detail}


@dataclass
class VerificationReport:
    r: int
    checks: dict[str, CheckResult] = field(default_factory=dict)
    reduced_basis: IdealBasis | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values()) and set(self.checks) == set(CLAIMS)

    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c.passed]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "passed": self.passed,
            "checks": {k: self.checks[k].to_json() for k in CLAIMS if k in self.checks},
            "reduced_basis": [str(g) for g in self.reduced_basis] if self.reduced_basis is not None else None,
        }

    def summary(self) -> str:
        lines = [f"r = {self.r}: {'PASS' if self.passed else 'FAIL'}"]
        for k in CLAIMS:
            c = self.checks.get(k)
            if c is None:
                lines.append(f"  {k:24s} missing")
                continue
            mark = "pass" if c.passed else "FAIL"
            extra = f"  witness: {c.witness}" if c.witness else ""
            lines.append(f"  {k:24s} {mark}  {c.seconds:8.4f}s{extra}")
        return "\n".join(lines)


def _ring(r: int) -> Ring:
    return unknowns_ring(2 * r + 1)


def closed_form_basis(
    r: int,
    lambdas: Sequence | None = None,
    mu=None,
) -> IdealBasis:
    """E~_1, ..., E~_{2r+1} in index order.

    E~_{2t-1} = C_{-2t},  E~_{2t} = C_{-2t-1} + lambda_t C_{-1}^{t+1},
    E~_{2r+1} = mu_r C_{-1}^{r+1} + y.  ``lambdas`` (indexed from 0) and
    ``mu`` override the exact values; used for mutation tests.
    """
    if r < 1:
        raise ValueError("r must be positive")
    R = _ring(r)
    lam = (lambda t: Fraction(lambdas[t])) if lambdas is not None else xn.lambda_j
    mu = xn.mu_r(r) if mu is None else Fraction(mu)
    c1 = R.var("C1")
    gens = []
    for t in range(1, r + 1):
        gens.append(R.var(f"C{2 * t}"))
        gens.append(R.var(f"C{2 * t + 1}") + (c1 ** (t + 1)).scale(lam(t)))
    gens.append((c1 ** (r + 1)).scale(mu) + R.var("y"))
    return IdealBasis(R, gens, label=f"G(r={r})")


def expected_reduced_basis(r: int) -> IdealBasis:
    """The lex-reduced form of G_{2r+1}, written out directly."""
    R = _ring(r)
    lam, mu = xn.lambda_j, xn.mu_r(r)
    c1, y = R.var("C1"), R.var("y")
    gens = [R.var(f"C{2 * t}") for t in range(1, r + 1)]
    gens += [R.var(f"C{2 * t + 1}") + (c1 ** (t + 1)).scale(lam(t)) for t in range(1, r)]
    gens.append(R.var(f"C{2 * r + 1}") - y.scale(lam(r) / mu))
    gens.append(c1 ** (r + 1) + y.scale(1 / mu))
    gens.sort(key=lambda p: p.leading_monomial(), reverse=True)
    return IdealBasis(R, gens, label=f"reduced G(r={r})")


def odd_telescoping(k: int, ring: Ring) -> Polynomial:
    """1/2 E_{2k-1} - sum_{i<k} E~_{2i-1} C_{-2(k-i)+1}; should equal C_{-2k}."""
    out = e_poly_direct(2 * k - 1, ring).scale(Fraction(1, 2))
    for i in range(1, k):
        out = out - ring.var(f"C{2 * i}") * ring.var(f"C{2 * (k - i) - 1}")
    return out


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    return res


def verify_tilde_construction(r: int, basis: IdealBasis | None = None) -> CheckResult:
    """C_{-2j-1} + lambda_j C_{-1}^{j+1} - E_{2j}/2 lies in <E~_1..E~_{2j-1}> for j <= r,
    and each odd E~ telescopes exactly from E_{2k-1}."""
    G = basis or closed_form_basis(r)
    R = G.ring
    for k in range(1, r + 1):
        lhs = odd_telescoping(k, R)
        if lhs != G[2 * k - 2]:
            return CheckResult(False, f"odd k={k}: {lhs - G[2 * k - 2]}")
    for j in range(1, r + 1):
        target = G[2 * j - 1] - e_poly_direct(2 * j, R).scale(Fraction(1, 2))
        rem = reduce(target, G.gens[: 2 * j - 1])
        if rem:
            return CheckResult(False, f"j={j}: {rem}")
    return CheckResult(True, detail=f"j = 1..{r}")


def odd_power_coefficient(r: int, ring: Ring | None = None) -> Polynomial:
    """(C^{2r+1})_{-1} by plain repeated series multiplication."""
    T = 2 * r + 1
    ring = ring or unknowns_ring(T)
    return coefficient(series_pow(generic_C(T, ring), T), -1)


def verify_central(r: int, basis: IdealBasis | None = None) -> CheckResult:
    """(C^{2r+1})_{-1} - mu_r C_{-1}^{r+1} reduces to zero modulo E~_1..E~_{2r}."""
    G = basis or closed_form_basis(r)
    R = G.ring
    mu = G[2 * r].leading_coeff()
    f = odd_power_coefficient(r, R) - (R.var("C1") ** (r + 1)).scale(mu)
    rem = reduce(f, G.gens[: 2 * r])
    if rem:
        return CheckResult(False, str(rem))
    return CheckResult(True, detail=f"mu_{r} = {mu}")


def _gb_check(basis: IdealBasis) -> CheckResult:
    w = groebner_witness(basis)
    if w is None:
        n = len(basis)
        return CheckResult(True, detail=f"{n * (n - 1) // 2} S-pairs reduce to 0")
    return CheckResult(False, f"S{w.pair}: {w.remainder}")


def _cross_check(r: int, G: IdealBasis, opts: BuchbergerOptions | None, seed: int | None) -> tuple[CheckResult, IdealBasis]:
    E = build_special_system(r)
    if seed is not None:
        gens = list(E.gens)
        random.Random(seed).shuffle(gens)
        E = E.with_gens(gens)
    ours = reduced_groebner_basis(E, opts)
    try:
        theirs = interreduce(G)
    except ValueError as exc:
        return CheckResult(False, str(exc)), ours
    if len(ours) != len(theirs):
        return CheckResult(False, f"{len(ours)} vs {len(theirs)} generators"), ours
    for a, b in zip(ours, theirs):
        if a != b:
            return CheckResult(False, f"{a} != {b} (difference {a - b})"), ours
    return CheckResult(True, detail=f"{len(ours)} generators agree"), ours


def check_closed_form(r: int, basis: IdealBasis, opts: BuchbergerOptions | None = None) -> dict[str, CheckResult]:
    """The two checks a candidate closed form must survive: S-pairs and the Buchberger recomputation."""
    return {
        "thm-proposicion10": _timed(lambda: _gb_check(basis)),
        "cross-buchberger": _timed(lambda: _cross_check(r, basis, opts, None)[0]),
    }


def _catalan_link(bound: int) -> CheckResult:
    bad = [j for j in range(bound + 1) if not xn.catalan_lambda_link(j) or xn.lambda_j(j) != xn.lambda_recursive(j)]
    return CheckResult(not bad, f"j={bad[0]}" if bad else None, detail=f"j = 0..{bound}")


def _catalan_identities(bound: int) -> CheckResult:
    bad = [k for k in range(bound + 1) if not (xn.catalan_identity(k) and xn.lambda_identity(k))]
    return CheckResult(not bad, f"r={bad[0]}" if bad else None, detail=f"r = 0..{bound}")


def verify_all(
    r: int,
    basis: IdealBasis | None = None,
    opts: BuchbergerOptions | None = None,
    seed: int | None = None,
) -> VerificationReport:
    """Run every claim check for one r.  Failures are recorded, never raised."""
    G = basis or closed_form_basis(r)
    G2r = G.with_gens(G.gens[: 2 * r])
    E = build_special_system(r)
    E2r = E.with_gens(E.gens[: 2 * r])
    report = VerificationReport(r)

    def guarded(fn):
        def run():
            try:
                return fn()
            except Exception as exc:  # a check must never take the report down
                return CheckResult(False, f"{type(exc).__name__}: {exc}")

        return _timed(run)

    def boolean(fn, detail=""):
        return lambda: CheckResult(True, detail=detail) if fn() else CheckResult(False, "ideals differ")

    c = report.checks
    c["prop-caso-par"] = guarded(lambda: verify_tilde_construction(r, G))
    c["cor-teorem"] = guarded(boolean(lambda: ideal_equal(E2r, G2r, opts)))
    c["prop-proposicion03"] = guarded(lambda: _gb_check(G2r))
    c["lemma-catalan"] = guarded(lambda: _catalan_link(2 * r))
    c["prop-catalan-identity"] = guarded(lambda: _catalan_identities(2 * r))
    c["prop-central"] = guarded(lambda: verify_central(r, G))
    c["cor-ideales-iguales"] = guarded(boolean(lambda: ideal_equal(E, G, opts)))
    c["thm-proposicion10"] = guarded(lambda: _gb_check(G))
    holder = {}

    def cross():
        res, holder["rb"] = _cross_check(r, G, opts, seed)
        return res

    c["cross-buchberger"] = guarded(cross)
    report.reduced_basis = holder.get("rb")
    return report
