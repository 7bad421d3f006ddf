"""Exact rationals and the combinatorial sequences behind the closed-form basis.

``Rational`` is the stdlib :class:`fractions.Fraction`; it already keeps the
denominator positive and the fraction reduced.  The closed forms are the
production path.  The ``*_recursive`` helpers are independent O(j^2) oracles
used by the identity checks and the test suite.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

Rational = Fraction

#: default upper index for the identity suites
J_MAX = 64

__all__ = [
    "J_MAX",
    "Rational",
    "binomial",
    "general_binomial",
    "catalan",
    "catalan_recursive",
    "lambda_j",
    "lambda_recursive",
    "mu_r",
    "catalan_identity",
    "lambda_identity",
    "catalan_lambda_link",
    "parse_rational",
    "format_rational",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def general_binomial(alpha, j: int) -> Fraction:
    """alpha (alpha-1) ... (alpha-j+1) / j! for rational ``alpha``."""
    if j < 0:
        return Fraction(0)
    alpha = Fraction(alpha)
    num = Fraction(1)
    for i in range(j):
        num *= alpha - i
    den = 1
    for i in range(2, j + 1):
        den *= i
    return num / den


def catalan(j: int) -> int:
    return comb(2 * j, j) // (j + 1)


def lambda_j(j: int) -> Fraction:
    """Coefficient of C_{-1}^{j+1} in the even basis element for index j."""
    return Fraction((-1) ** (j + 1) * comb(2 * j, j), (j + 1) * 2**j)


def mu_r(r: int) -> Fraction:
    """Leading coefficient of the last basis element, (2r+1)/((r+1) 2^r) C(2r, r)."""
    if r < 1:
        raise ValueError(f"mu_r needs r >= 1, got {r}")
    return Fraction((2 * r + 1) * comb(2 * r, r), (r + 1) * 2**r)


class _Memo:
    """Growable table filled by a recursion; appends happen under a lock."""

    def __init__(self, first, step):
        self._values = [first]
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, j: int):
        if j < 0:
            raise IndexError(j)
        if j >= len(self._values):
            with self._lock:
                while len(self._values) <= j:
                    self._values.append(self._step(self._values))
        return self._values[j]


def _catalan_step(values):
    r = len(values)
    return sum(values[j] * values[r - 1 - j] for j in range(r))


def _lambda_step(values):
    j = len(values)
    return Fraction(1, 2) * sum(values[k] * values[j - k - 1] for k in range(j))


_CATALAN_REC = _Memo(1, _catalan_step)
_LAMBDA_REC = _Memo(Fraction(-1), _lambda_step)


def catalan_recursive(j: int) -> int:
    """c_j from c_0 = 1 and the convolution c_r = sum c_j c_{r-1-j}."""
    return _CATALAN_REC[j]


def lambda_recursive(j: int) -> Fraction:
    """lambda_j from lambda_0 = -1 and lambda_j = 1/2 sum lambda_k lambda_{j-k-1}."""
    return _LAMBDA_REC[j]


def catalan_identity(r: int) -> bool:
    """(2r+1) c_r / 4^r == sum_j (-1)^j C(r,j) c_j / 4^j, exactly."""
    lhs = Fraction((2 * r + 1) * catalan(r), 4**r)
    rhs = sum(
        (Fraction((-1) ** j * binomial(r, j) * catalan(j), 4**j) for j in range(r + 1)),
        Fraction(0),
    )
    return lhs == rhs


def lambda_identity(r: int) -> bool:
    """(2r+1)(-1)^{r+1} lambda_r == sum_j C(r,j) 2^{r-j} (-lambda_j)."""
    lhs = (2 * r + 1) * (-1) ** (r + 1) * lambda_j(r)
    rhs = sum((binomial(r, j) * 2 ** (r - j) * -lambda_j(j) for j in range(r + 1)), Fraction(0))
    return lhs == rhs


def catalan_lambda_link(j: int) -> bool:
    return (-1) ** (j + 1) * 2**j * lambda_j(j) == catalan(j)


def format_rational(q) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)
