"""Sparse multivariate polynomials over Q with lex order and multivariate division.

Monomials are dense exponent tuples indexed by the ring's variable table, with
position 0 the most significant variable.  Under lex, Python's tuple ordering
*is* the monomial order, which keeps comparisons in C.

Variables ``C1, C2, ...`` stand for the unknowns C_{-1}, C_{-2}, ... of the
Laurent series; printing uses the ``C_{-k}`` spelling.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .exactnum import format_rational, parse_rational

__all__ = [
    "LEX",
    "Ring",
    "Term",
    "Polynomial",
    "RingMismatchError",
    "ReductionLimitExceeded",
    "unknowns_ring",
    "lex_compare",
    "monomial_divides",
    "monomial_lcm",
    "normal_form",
    "reduce",
    "embed",
    "IdealBasis",
]

LEX = "lex"

Monomial = tuple  # tuple[int, ...]


class RingMismatchError(ValueError):
    pass


class ReductionLimitExceeded(RuntimeError):
    """Raised when a division runs past its step budget."""


_UNKNOWN_NAME = re.compile(r"^C(\d+)$")
_DISPLAY_ALIAS = re.compile(r"C_\{?-(\d+)\}?")


def display_name(name: str) -> str:
    m = _UNKNOWN_NAME.match(name)
    return f"C_{{-{m.group(1)}}}" if m else name


class Ring:
    """Variable table plus monomial order tag.  Rings compare by value."""

    __slots__ = ("names", "order", "_index", "_hash")

    def __init__(self, names: Iterable[str], order: str = LEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if order != LEX:
            raise ValueError(f"unsupported monomial order {order!r}")
        self.names = names
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, order))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.order == other.order

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({list(self.names)!r})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def var(self, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = power
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(n) for n in self.names]

    def monomial(self, powers: dict[str, int]) -> Monomial:
        exps = [0] * self.nvars
        for name, p in powers.items():
            exps[self.index(name)] += p
        return tuple(exps)

    def parse(self, text: str) -> "Polynomial":
        return Polynomial.parse(self, text)


def unknowns_ring(T: int, extra: Sequence[str] = ("y",)) -> Ring:
    """Ring C_T > C_{T-1} > ... > C_1 > y (``Ck`` stands for C_{-k})."""
    return Ring([f"C{k}" for k in range(T, 0, -1)] + list(extra))


class Term(NamedTuple):
    coeff: Fraction
    mono: Monomial


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is lex-smaller, equal or greater than ``b``."""
    if len(a) != len(b):
        raise RingMismatchError("monomials from different rings")
    return (a > b) - (a < b)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial; ``terms`` are strictly lex-decreasing with nonzero coefficients."""

    __slots__ = ("ring", "_d", "_terms", "_hash")

    def __init__(self, ring: Ring, coeffs: dict | None = None):
        self.ring = ring
        self._d = {m: Fraction(c) for m, c in (coeffs or {}).items() if c != 0}
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, d: dict) -> "Polynomial":
        # d must already hold Fractions and no zeros; ownership passes to the polynomial
        p = cls.__new__(cls)
        p.ring = ring
        p._d = d
        p._terms = None
        p._hash = None
        return p

    # -- access --------------------------------------------------------------
    @property
    def terms(self) -> tuple[Term, ...]:
        if self._terms is None:
            self._terms = tuple(Term(self._d[m], m) for m in sorted(self._d, reverse=True))
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._d)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._d.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def leading_term(self) -> Term:
        if not self._d:
            raise ValueError("zero polynomial has no leading term")
        if self._terms is not None:
            return self._terms[0]
        m = max(self._d)
        return Term(self._d[m], m)

    def leading_monomial(self) -> Monomial:
        return self.leading_term().mono

    def leading_coeff(self) -> Fraction:
        return self.leading_term().coeff

    def total_degree(self) -> int:
        return max((sum(m) for m in self._d), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for m in self._d:
            used.update(self.ring.names[i] for i, e in enumerate(m) if e)
        return used

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._d)
        for m, c in other._d.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial._raw(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c, mono: Monomial | None = None) -> "Polynomial":
        """c * mono * self."""
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        if mono is None:
            return Polynomial._raw(self.ring, {m: v * c for m, v in self._d.items()})
        return Polynomial._raw(self.ring, {_mono_mul(m, mono): v * c for m, v in self._d.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = {}
        for ma, ca in self._d.items():
            for mb, cb in other._d.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                d[m] = d.get(m, 0) + ca * cb
        return Polynomial._raw(self.ring, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(c))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        return self.scale(1 / self.leading_coeff())

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == self.ring.const(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    # -- text ----------------------------------------------------------------
    def to_str(self, display_names: bool = True) -> str:
        if not self._d:
            return "0"
        names = [display_name(n) if display_names else n for n in self.ring.names]
        out = []
        for c, m in self.terms:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not factors:
                body = format_rational(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(a)] + factors)
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str(display_names=False)!r})"

    _TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(C_\{?-\d+\}?|[A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-]))")

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "Polynomial":
        """Parse ``"2*C3 - 1/2*C1^2 + y"``; ``C_{-k}`` is accepted for ``Ck``."""
        pos, n = 0, len(text)
        d: dict = {}
        sign = 1
        coeff = Fraction(1)
        exps = [0] * ring.nvars
        have = False
        expect_factor = True

        def flush():
            nonlocal coeff, exps, have, sign
            if have:
                m = tuple(exps)
                d[m] = d.get(m, 0) + sign * coeff
            coeff, exps, have, sign = Fraction(1), [0] * ring.nvars, False, 1

        while pos < n:
            if text[pos:].strip() == "":
                break
            tok = cls._TOKEN.match(text, pos)
            if not tok:
                raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
            pos = tok.end()
            num, name, caret, star, pm = tok.groups()
            if pm:
                if have:
                    flush()
                sign = sign * (-1 if pm == "-" else 1)
                expect_factor = True
            elif star:
                expect_factor = True
            elif num is not None:
                coeff *= parse_rational(num)
                have = True
                expect_factor = False
            elif name is not None:
                alias = _DISPLAY_ALIAS.fullmatch(name)
                if alias:
                    name = f"C{alias.group(1)}"
                idx = ring.index(name)
                power = 1
                nxt = cls._TOKEN.match(text, pos)
                if nxt and nxt.group(3):
                    pw = cls._TOKEN.match(text, nxt.end())
                    if not pw or pw.group(1) is None or "/" in pw.group(1):
                        raise ValueError(f"bad exponent in {text!r}")
                    power = int(pw.group(1))
                    pos = pw.end()
                exps[idx] += power
                have = True
                expect_factor = False
            else:
                raise ValueError(f"unexpected '^' in {text!r}")
        if expect_factor and text.strip():
            raise ValueError(f"dangling operator in {text!r}")
        flush()
        return cls(ring, d)

    def to_latex(self) -> str:
        if not self._d:
            return "0"
        pieces = []
        for i, (c, m) in enumerate(self.terms):
            factors = "".join(
                (display_name(n) if e == 1 else f"{display_name(n)}^{{{e}}}")
                for n, e in zip(self.ring.names, m)
                if e
            )
            a = abs(c)
            if a == 1 and factors:
                cs = ""
            elif a.denominator == 1:
                cs = str(a.numerator)
            else:
                cs = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            body = cs + factors if factors else (cs or "1")
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("-" if c < 0 else "+") + body)
        return "".join(pieces)

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [{"c": format_rational(c), "e": list(m)} for c, m in self.terms],
        }

    @classmethod
    def from_json(cls, obj: dict, ring: Ring | None = None) -> "Polynomial":
        r = Ring(obj["vars"])
        if ring is not None and ring != r:
            raise RingMismatchError(f"{ring} vs {r}")
        d = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["e"])
            if len(e) != r.nvars:
                raise ValueError(f"exponent vector {e} does not match {r}")
            d[e] = d.get(e, 0) + parse_rational(t["c"])
        return cls(ring or r, d)


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    *,
    with_quotients: bool = True,
    max_steps: int | None = None,
    trace: list | None = None,
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of ``f`` by ``basis``.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + remainder`` and no
    remainder term divisible by any leading monomial.  Among divisors the one
    with the lowest basis index wins.  Zero basis elements are skipped.  If
    ``trace`` is a list, the leading monomial eliminated at every step is
    appended to it.
    """
    ring = f.ring
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    divisors = []
    for i, g in enumerate(basis):
        if g:
            c, m = g.leading_term()
            tail = [(mm, cc) for mm, cc in g._d.items() if mm != m]
            divisors.append((i, m, c, tail))
    quot: list[dict] = [{} for _ in basis] if with_quotients else []
    p = dict(f._d)
    rem: dict = {}
    if not divisors:
        return [ring.zero() for _ in basis], f
    # max-heap of monomials via negated exponent tuples
    heap = [tuple(-e for e in m) for m in p]
    heapq.heapify(heap)
    steps = 0
    while heap:
        key = heapq.heappop(heap)
        m = tuple(-e for e in key)
        c = p.pop(m, None)
        if c is None:
            continue
        # a monomial may be pushed several times; later duplicates find p[m] absent
        for i, lm, lc, tail in divisors:
            if all(x <= y for x, y in zip(lm, m)):
                break
        else:
            rem[m] = c
            continue
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ReductionLimitExceeded(f"division exceeded {max_steps} steps")
        if trace is not None:
            trace.append(m)
        factor = c / lc
        shift = tuple(x - y for x, y in zip(m, lm))
        if with_quotients:
            q = quot[i]
            q[shift] = q.get(shift, 0) + factor
        for tm, tc in tail:
            nm = tuple(x + y for x, y in zip(tm, shift))
            old = p.get(nm)
            if old is None:
                p[nm] = -factor * tc
                heapq.heappush(heap, tuple(-e for e in nm))
            else:
                v = old - factor * tc
                if v:
                    p[nm] = v
                else:
                    del p[nm]
    quotients = [Polynomial(ring, q) for q in quot] if with_quotients else []
    return quotients, Polynomial._raw(ring, rem)


def reduce(f: Polynomial, basis: Sequence[Polynomial], max_steps: int | None = None) -> Polynomial:
    """Remainder of ``f`` modulo ``basis`` (quotients discarded)."""
    return normal_form(f, basis, with_quotients=False, max_steps=max_steps)[1]


def embed(f: Polynomial, ring: Ring) -> Polynomial:
    """Re-express ``f`` in ``ring`` by variable name.

    Raises ``RingMismatchError`` if ``f`` uses a variable missing from ``ring``.
    """
    if f.ring == ring:
        return f
    src = f.ring.names
    try:
        pos = [ring.index(n) for n in src]
    except KeyError:
        pos = [ring.index(n) if n in ring else None for n in src]
    d = {}
    for m, c in f._d.items():
        e = [0] * ring.nvars
        for i, k in enumerate(m):
            if k:
                if pos[i] is None:
                    raise RingMismatchError(f"{src[i]} not in {ring}")
                e[pos[i]] = k
        d[tuple(e)] = c
    return Polynomial._raw(ring, d)


class IdealBasis:
    """Ordered generator list over one ring.  Zero generators are dropped."""

    __slots__ = ("ring", "gens", "label")

    def __init__(self, ring: Ring, gens: Iterable[Polynomial], label: str = ""):
        gens = tuple(g for g in gens if g)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, basis ring {ring}")
        self.ring = ring
        self.gens = gens
        self.label = label

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __eq__(self, other):
        return isinstance(other, IdealBasis) and self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        label = f" {self.label!r}" if self.label else ""
        return f"<IdealBasis{label} [{', '.join(str(g) for g in self.gens)}]>"

    def with_gens(self, gens: Iterable[Polynomial], label: str | None = None) -> "IdealBasis":
        return IdealBasis(self.ring, gens, self.label if label is None else label)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "vars": list(self.ring.names),
            "order": self.ring.order,
            "generators": [g.to_json()["terms"] for g in self.gens],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "IdealBasis":
        ring = Ring(obj["vars"], obj.get("order", LEX))
        gens = [Polynomial.from_json({"vars": obj["vars"], "terms": t}, ring) for t in obj["generators"]]
        return cls(ring, gens, obj.get("label", ""))

    def to_latex(self, symbol: str = "E") -> str:
        rows = [f"{symbol}_{{{i}}}&:=&{g.to_latex()}" for i, g in enumerate(self.gens, 1)]
        return "\\begin{eqnarray*}\n" + ",\\\\\n".join(rows) + ".\n\\end{eqnarray*}\n"
