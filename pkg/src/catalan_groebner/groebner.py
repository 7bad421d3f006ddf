"""S-polynomials, Buchberger's algorithm, reduced bases and ideal equality (lex)."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .polyring import (
    IdealBasis,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    normal_form,
)

__all__ = [
    "BuchbergerOptions",
    "GroebnerWitness",
    "RunLog",
    "NotGroebnerError",
    "s_polynomial",
    "buchberger",
    "interreduce",
    "reduced_groebner_basis",
    "groebner_witness",
    "is_groebner",
    "ideal_equal",
    "ideal_contains",
]

PAIR_STRATEGIES = ("normal", "fifo")


class NotGroebnerError(ValueError):
    def __init__(self, witness: "GroebnerWitness"):
        super().__init__(f"not a Groebner basis: S-pair {witness.pair} leaves {witness.remainder}")
        self.witness = witness


@dataclass(frozen=True)
class BuchbergerOptions:
    use_coprime_criterion: bool = True
    pair_strategy: str = "normal"
    max_steps: int = 10**7

    def __post_init__(self):
        if self.pair_strategy not in PAIR_STRATEGIES:
            raise ValueError(f"pair_strategy must be one of {PAIR_STRATEGIES}")


@dataclass(frozen=True)
class GroebnerWitness:
    pair: tuple[int, int]
    remainder: Polynomial


@dataclass
class RunLog:
    pairs_considered: int = 0
    pairs_skipped: int = 0
    reductions: int = 0
    added: int = 0
    steps: int = 0

    def to_json(self) -> dict:
        return {
            "pairs_considered": self.pairs_considered,
            "pairs_skipped_by_criterion": self.pairs_skipped,
            "nonzero_reductions": self.added,
            "zero_reductions": self.reductions - self.added,
            "division_steps": self.steps,
        }


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """(L/lt(f)) f - (L/lt(g)) g with L the lcm of the leading monomials."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise ValueError(f"{f.ring} vs {g.ring}")
    cf, mf = f.leading_term()
    cg, mg = g.leading_term()
    lcm = monomial_lcm(mf, mg)
    uf = tuple(a - b for a, b in zip(lcm, mf))
    ug = tuple(a - b for a, b in zip(lcm, mg))
    return f.scale(1 / cf, uf) - g.scale(1 / cg, ug)


def _pair_key(G, i, j):
    lcm = monomial_lcm(G[i].leading_monomial(), G[j].leading_monomial())
    return (sum(lcm), lcm, i, j)


def buchberger(
    basis: IdealBasis,
    opts: BuchbergerOptions | None = None,
    log: RunLog | None = None,
) -> IdealBasis:
    """Extend ``basis`` to a Groebner basis of the ideal it generates.

    The input generators are kept as given; each nonzero S-pair remainder is
    made monic and appended.  Not reduced; see :func:`interreduce`.
    """
    opts = opts or BuchbergerOptions()
    log = log if log is not None else RunLog()
    G: list[Polynomial] = list(basis.gens)
    if not G:
        raise ValueError("buchberger needs a nonempty basis")
    budget = opts.max_steps

    if opts.pair_strategy == "normal":
        heap = [_pair_key(G, i, j) for j in range(len(G)) for i in range(j)]
        heapq.heapify(heap)

        def pop():
            return heapq.heappop(heap)[2:]

        def push(i, j):
            heapq.heappush(heap, _pair_key(G, i, j))

        def pending():
            return bool(heap)

    else:
        queue = deque((i, j) for j in range(len(G)) for i in range(j))
        pop = queue.popleft
        push = lambda i, j: queue.append((i, j))  # noqa: E731

        def pending():
            return bool(queue)

    while pending():
        i, j = pop()
        log.pairs_considered += 1
        mi, mj = G[i].leading_monomial(), G[j].leading_monomial()
        if opts.use_coprime_criterion and all(not (a and b) for a, b in zip(mi, mj)):
            log.pairs_skipped += 1
            continue
        trace: list = []
        try:
            h = normal_form(s_polynomial(G[i], G[j]), G, with_quotients=False, max_steps=budget, trace=trace)[1]
        finally:
            budget -= len(trace)
            log.steps += len(trace)
        log.reductions += 1
        if h:
            log.added += 1
            G.append(h.monic())
            k = len(G) - 1
            for a in range(k):
                push(a, k)
    return basis.with_gens(G, label=basis.label)


def _minimal_reduced(gens: Iterable[Polynomial], ring) -> list[Polynomial]:
    gens = [g.monic() for g in gens if g]
    keep: list[Polynomial] = []
    for idx, g in enumerate(gens):
        lm = g.leading_monomial()
        redundant = False
        for jdx, h in enumerate(gens):
            if jdx == idx:
                continue
            hm = h.leading_monomial()
            if monomial_divides(hm, lm) and (hm != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        c, m = g.leading_term()
        tail = Polynomial(g.ring, {mm: cc for mm, cc in g.as_dict().items() if mm != m})
        rem = normal_form(tail, others, with_quotients=False)[1]
        out.append(Polynomial(g.ring, {**rem.as_dict(), m: c}))
    out.sort(key=lambda p: p.leading_monomial(), reverse=True)
    return out


def interreduce(basis: IdealBasis, check: bool = True) -> IdealBasis:
    """The reduced Groebner basis: monic, fully inter-reduced, sorted by decreasing leading monomial.

    Raises :class:`NotGroebnerError` unless ``basis`` is already Groebner.
    """
    if check:
        w = groebner_witness(basis)
        if w is not None:
            raise NotGroebnerError(w)
    return basis.with_gens(_minimal_reduced(basis.gens, basis.ring))


def reduced_groebner_basis(
    basis: IdealBasis, opts: BuchbergerOptions | None = None, log: RunLog | None = None
) -> IdealBasis:
    return interreduce(buchberger(basis, opts, log), check=False)


def groebner_witness(basis: IdealBasis) -> GroebnerWitness | None:
    """First S-pair (in index order) whose remainder is nonzero, else None."""
    G = list(basis.gens)
    for j in range(len(G)):
        for i in range(j):
            rem = normal_form(s_polynomial(G[i], G[j]), G, with_quotients=False)[1]
            if rem:
                return GroebnerWitness((i, j), rem)
    return None


def is_groebner(basis: IdealBasis) -> bool:
    return groebner_witness(basis) is None


def ideal_contains(gb: IdealBasis, f: Polynomial) -> bool:
    """Membership test; ``gb`` must be a Groebner basis."""
    return not normal_form(f, gb.gens, with_quotients=False)[1]


def ideal_equal(a: IdealBasis, b: IdealBasis, opts: BuchbergerOptions | None = None) -> bool:
    if a.ring != b.ring:
        raise ValueError(f"{a.ring} vs {b.ring}")
    gb_a = buchberger(a, opts) if a.gens else a
    gb_b = buchberger(b, opts) if b.gens else b
    return all(ideal_contains(gb_b, f) for f in a) and all(ideal_contains(gb_a, f) for f in b)
