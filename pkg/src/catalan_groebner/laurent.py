"""Truncated Laurent series in x^{-1} with polynomial coefficients, and the
equation systems read off from powers of C = x + C_{-1} x^{-1} + C_{-2} x^{-2} + ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import IdealBasis, Polynomial, Ring, embed, unknowns_ring

__all__ = [
    "LaurentSeries",
    "SystemSpec",
    "TruncationError",
    "generic_C",
    "series_mul",
    "series_pow",
    "series_inverse",
    "coefficient",
    "build_special_system",
    "build_general_system",
    "e_poly_direct",
]


class TruncationError(ValueError):
    """Floors disagree, or a coefficient below the floor was requested."""


class LaurentSeries:
    """Finite map exponent -> Polynomial; exponents below ``floor`` are unknown."""

    __slots__ = ("ring", "coeffs", "floor")

    def __init__(self, ring: Ring, coeffs: dict[int, Polynomial], floor: int):
        self.ring = ring
        self.floor = floor
        self.coeffs = {e: c for e, c in coeffs.items() if e >= floor and c}

    @property
    def top(self) -> int | None:
        return max(self.coeffs, default=None)

    @classmethod
    def constant(cls, ring: Ring, value, floor: int) -> "LaurentSeries":
        return cls(ring, {0: ring.const(value)}, floor)

    @classmethod
    def monomial(cls, ring: Ring, exponent: int, floor: int, coeff=1) -> "LaurentSeries":
        c = coeff if isinstance(coeff, Polynomial) else ring.const(coeff)
        return cls(ring, {exponent: c}, floor)

    def __getitem__(self, e: int) -> Polynomial:
        return coefficient(self, e)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        _check(self, other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return LaurentSeries(self.ring, out, self.floor)

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries(self.ring, {e: p * c for e, p in self.coeffs.items()}, self.floor)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSeries)
            and self.ring == other.ring
            and self.floor == other.floor
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        parts = [f"({c})*x^{e}" for e, c in sorted(self.coeffs.items(), reverse=True)]
        return f"LaurentSeries({' + '.join(parts) or '0'} + O(x^{self.floor - 1}))"


def _check(a: LaurentSeries, b: LaurentSeries):
    if a.ring != b.ring:
        raise TruncationError(f"series over different rings: {a.ring} vs {b.ring}")
    if a.floor != b.floor:
        raise TruncationError(f"floor mismatch: {a.floor} vs {b.floor}")


def generic_C(T: int, ring: Ring, floor: int | None = None) -> LaurentSeries:
    """x + C_{-1} x^{-1} + ... + C_{-T} x^{-T}, truncated below ``floor`` (default -T)."""
    if T < 1:
        raise ValueError("need at least one unknown coefficient")
    missing = [f"C{k}" for k in range(1, T + 1) if f"C{k}" not in ring]
    if missing:
        raise KeyError(f"ring {ring} lacks {missing}")
    floor = -T if floor is None else floor
    coeffs = {1: ring.one()}
    for k in range(1, T + 1):
        coeffs[-k] = ring.var(f"C{k}")
    return LaurentSeries(ring, coeffs, floor)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product, dropping exponents below the common floor."""
    _check(a, b)
    floor = a.floor
    out: dict[int, Polynomial] = {}
    for ea, ca in a.coeffs.items():
        for eb, cb in b.coeffs.items():
            e = ea + eb
            if e < floor:
                continue
            prod = ca * cb
            out[e] = out[e] + prod if e in out else prod
    return LaurentSeries(a.ring, out, floor)


def series_pow(a: LaurentSeries, k: int) -> LaurentSeries:
    if k < 0:
        return series_pow(series_inverse(a), -k)
    result = LaurentSeries.constant(a.ring, 1, a.floor)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_inverse(a: LaurentSeries) -> LaurentSeries:
    """b with a*b = 1 at every exponent >= floor.

    The top coefficient of ``a`` must be a nonzero constant and its exponent
    nonnegative; b is solved one exponent at a time from the top down.
    """
    d = a.top
    if d is None:
        raise ZeroDivisionError("inverse of the zero series")
    lead = a.coeffs[d]
    if len(lead) != 1 or any(lead.leading_monomial()):
        raise ZeroDivisionError(f"leading coefficient {lead} is not a nonzero constant")
    if d < 0:
        raise TruncationError("inverse of a series with negative top exponent is not determined above the floor")
    inv_lead = Fraction(1) / lead.leading_coeff()
    ring = a.ring
    b: dict[int, Polynomial] = {}
    for j in range(-d, a.floor - 1, -1):
        # (a*b)_{j+d} = a_d b_j + sum_{s>=1} a_{d-s} b_{j+s}
        acc = ring.one() if j + d == 0 else ring.zero()
        for s in range(1, -d - j + 1):
            ai = a.coeffs.get(d - s)
            bj = b.get(j + s)
            if ai is not None and bj is not None:
                acc = acc - ai * bj
        if acc:
            b[j] = acc.scale(inv_lead)
    return LaurentSeries(ring, b, a.floor)


def coefficient(a: LaurentSeries, e: int) -> Polynomial:
    if e < a.floor:
        raise TruncationError(f"exponent {e} lies below the truncation floor {a.floor}")
    return a.coeffs.get(e, a.ring.zero())


# -- equation systems --------------------------------------------------------


@dataclass(frozen=True)
class SystemSpec:
    """Parameters n, m, weights lambda_0..lambda_{m+n-2} and the symbol for F_{1-n}."""

    n: int
    m: int
    q_weights: tuple = ()
    f_symbol: str = "y"

    def __post_init__(self):
        if self.n < 2 or self.m < 2:
            raise ValueError(f"need n, m >= 2, got n={self.n}, m={self.m}")
        if self.m % self.n == 0 or self.n % self.m == 0:
            raise ValueError(f"n={self.n} and m={self.m} must not divide one another")
        weights = tuple(Fraction(w) for w in self.q_weights)
        size = self.m + self.n - 1
        if not weights:
            weights = (Fraction(1),) + (Fraction(0),) * (size - 1)
        if len(weights) != size:
            raise ValueError(f"expected {size} weights, got {len(weights)}")
        if weights[0] != 1:
            raise ValueError("the first weight must be 1")
        object.__setattr__(self, "q_weights", weights)

    @property
    def size(self) -> int:
        return self.m + self.n - 2

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "q_weights": [str(w) for w in self.q_weights],
            "f_symbol": self.f_symbol,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SystemSpec":
        return cls(obj["n"], obj["m"], tuple(Fraction(w) for w in obj.get("q_weights", ())), obj.get("f_symbol", "y"))


def build_general_system(spec: SystemSpec, depth: int | None = None) -> IdealBasis:
    """The m+n-2 equations in C_{-1}, ..., C_{-(m+n-2)} and F_{1-n}.

    ``depth`` (default m+n-2) is the truncation depth of C; larger depths add
    unknowns that must cancel, which the floor-stability check relies on.
    """
    n, m, T = spec.n, spec.m, spec.size
    depth = T if depth is None else depth
    if depth < T:
        raise ValueError(f"depth {depth} below the system size {T}")
    work = unknowns_ring(depth, (spec.f_symbol,))
    ring = unknowns_ring(T, (spec.f_symbol,))
    C = generic_C(depth, work)
    P = series_pow(C, n)
    eqs = [coefficient(P, -k) for k in range(1, m)]

    powers = _PowerTable(C)
    Q = LaurentSeries(work, {}, C.floor)
    for i, w in enumerate(spec.q_weights):
        if w:
            Q = Q + powers[m - i].scale(w)
    eqs += [coefficient(Q, -k) for k in range(1, n - 1)]
    eqs.append(coefficient(Q, 1 - n) + work.var(spec.f_symbol))
    return IdealBasis(ring, [embed(e, ring) for e in eqs], label=f"S(n={n}, m={m})")


class _PowerTable:
    """C^k for integer k, each built from its neighbour toward zero."""

    def __init__(self, C: LaurentSeries):
        self._C = C
        self._inv = None
        self._cache = {0: LaurentSeries.constant(C.ring, 1, C.floor), 1: C}

    def __getitem__(self, k: int) -> LaurentSeries:
        if k not in self._cache:
            if k > 0:
                self._cache[k] = series_mul(self[k - 1], self._C)
            else:
                if self._inv is None:
                    self._inv = series_inverse(self._C)
                self._cache[k] = series_mul(self[k + 1], self._inv)
        return self._cache[k]


def build_special_system(r: int, depth: int | None = None) -> IdealBasis:
    """E_i = (C^2)_{-i} for i = 1..2r and E_{2r+1} = (C^{2r+1})_{-1} + y."""
    if r < 1:
        raise ValueError("r must be positive")
    T = 2 * r + 1
    depth = T if depth is None else depth
    work = unknowns_ring(depth)
    ring = unknowns_ring(T)
    C = generic_C(depth, work)
    C2 = series_mul(C, C)
    eqs = [coefficient(C2, -i) for i in range(1, 2 * r + 1)]
    eqs.append(_odd_power_coefficient(C, C2, r) + work.var("y"))
    return IdealBasis(ring, [embed(e, ring) for e in eqs], label=f"I(r={r})")


def _odd_power_coefficient(C: LaurentSeries, C2: LaurentSeries, r: int) -> Polynomial:
    """(C^{2r+1})_{-1} = sum_j [(C^2)^r]_j C_{-j-1}, skipping the full last product."""
    Cr = series_pow(C2, r)
    total = C.ring.zero()
    for j, cj in Cr.coeffs.items():
        other = C.coeffs.get(-1 - j)
        if other is not None:
            total = total + cj * other
    return total


def e_poly_direct(i: int, ring: Ring) -> Polynomial:
    """2 C_{-i-1} + sum_{k=1}^{i-1} C_{-k} C_{k-i}, the closed form of (C^2)_{-i}."""
    if i < 1:
        raise ValueError("i must be positive")
    out = ring.var(f"C{i + 1}") * 2
    for k in range(1, i):
        out = out + ring.var(f"C{k}") * ring.var(f"C{i - k}")
    return out
