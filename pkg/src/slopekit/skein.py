"""Kauffman bracket and Jones polynomial.

Two evaluators share one smoothing table:

* :func:`bracket` sums over all ``2**c`` states directly (the oracle);
* :func:`bracket_fast` contracts crossings one at a time, keeping a table
  from boundary connectivity (a non-crossing matching of open edges) to
  polynomial weight.  Its cost is governed by the widest boundary met,
  not by ``2**c``.

Normalization: a single circle evaluates to 1.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from .diagram import Diagram, DiagramError
from .laurent import DELTA, LaurentPoly

__all__ = [
    "A_PAIRS",
    "B_PAIRS",
    "BracketBudgetError",
    "DegreeQuad",
    "bracket",
    "bracket_fast",
    "bracket_unnormalized",
    "contraction_order",
    "jones",
    "state_sum",
    "t_degrees",
]

log = logging.getLogger(__name__)

#: slot pairs joined by the A-smoothing and the B-smoothing of ``X(a,b,c,d)``
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))

NAIVE_LIMIT = 16
MEMORY_BUDGET = 2 * 1024**3


class BracketBudgetError(RuntimeError):
    """The evaluation would exceed its configured crossing or memory budget."""

    def __init__(self, message: str, width: int | None = None):
        super().__init__(message)
        self.width = width


# -- naive state sum ---------------------------------------------------------


def _circles(pd, choice, labels) -> int:
    parent = {e: e for e in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(labels)
    for q, side in zip(pd, choice):
        for i, j in (A_PAIRS if side else B_PAIRS):
            ri, rj = find(q[i]), find(q[j])
            if ri != rj:
                parent[ri] = rj
                count -= 1
    return count


def state_sum(d: Diagram) -> LaurentPoly:
    """Unnormalized bracket by brute force: the empty diagram is 1, each circle is delta."""
    labels = d.edges
    tally: Counter[tuple[int, int]] = Counter()
    for choice in itertools.product((True, False), repeat=len(d.pd)):
        n_a = sum(choice)
        loops = _circles(d.pd, choice, labels) + d.free_loops
        tally[(2 * n_a - len(choice), loops)] += 1
    total = LaurentPoly()
    for (exp, loops), mult in tally.items():
        total += DELTA**loops * LaurentPoly({exp: mult})
    return total


def bracket(d: Diagram, limit: int = NAIVE_LIMIT) -> LaurentPoly:
    """Kauffman bracket as an explicit sum over all ``2**c`` states."""
    if len(d.pd) > limit:
        raise BracketBudgetError(
            f"{len(d.pd)} crossings exceed the naive limit {limit}; use bracket_fast"
        )
    return _normalize(state_sum(d), d)


def _normalize(raw: LaurentPoly, d: Diagram) -> LaurentPoly:
    if not d.pd and not d.free_loops:
        raise DiagramError("the empty diagram has no normalized bracket")
    return raw.divexact(DELTA)


# -- contraction -------------------------------------------------------------


def contraction_order(pd) -> tuple[list[int], int]:
    """Greedy crossing order keeping the open boundary small.

    Every start crossing is tried; the order with the smallest maximal
    boundary wins.  Returns ``(order, max_width)``.
    """
    n = len(pd)
    if n == 0:
        return [], 0
    label_sets = [Counter(q) for q in pd]
    starts = range(n) if n <= 120 else range(0, n, max(1, n // 120))
    best = None
    for start in starts:
        open_edges: Counter[int] = Counter()
        done = [False] * n
        order, width = [], 0
        cur = start
        for _ in range(n):
            done[cur] = True
            order.append(cur)
            for e, m in label_sets[cur].items():
                open_edges[e] += m
                if open_edges[e] == 2:
                    del open_edges[e]
            width = max(width, len(open_edges))
            if best is not None and width >= best[1]:
                break
            cand = None
            for j in range(n):
                if done[j]:
                    continue
                shared = sum(1 for e in label_sets[j] if e in open_edges)
                new = sum(m for e, m in label_sets[j].items() if e not in open_edges)
                # a label repeated inside crossing j closes on itself
                new -= sum(2 for e, m in label_sets[j].items() if m == 2)
                key = (len(open_edges) - shared + new, -shared, j)
                if cand is None or key < cand[0]:
                    cand = (key, j)
            if cand is None:
                break
            cur = cand[1]
        if len(order) == n and (best is None or width < best[1]):
            best = (order, width)
    return best


def _coeff_bits(n_crossings: int) -> int:
    # a partial state after k crossings collects at most 2**k assignments, each
    # with coefficient L1-norm at most 2**(2k) (two loops per crossing at most)
    return 3 * n_crossings + 3


def _unpack(value: int, bits: int, offset: int) -> LaurentPoly:
    base, half, mask = 1 << bits, 1 << (bits - 1), (1 << bits) - 1
    terms = {}
    e = offset
    while value:
        r = value & mask
        if r >= half:
            r -= base
        if r:
            terms[e] = r
        value = (value - r) >> bits
        e += 1
    return LaurentPoly(terms)


def _contract(d: Diagram, memory_budget: int) -> LaurentPoly:
    """Unnormalized bracket (empty diagram 1) by sequential contraction.

    State weights are polynomials packed into single integers, one
    ``bits``-wide signed digit per power of ``A``.  A crossing step
    multiplies by ``A**s * delta**l`` which is written as
    ``A**-5 * (-1)**l * A**(5 + s - 2l) * (1 + A**4)**l``; the ``A**-5`` is
    kept as a global offset so every digit shift is non-negative.
    """
    pd = d.pd
    n = len(pd)
    if n == 0:
        return DELTA**d.free_loops
    order, width = contraction_order(pd)
    bits = _coeff_bits(n)
    step4 = 4 * bits
    # boundary -> packed weight; boundary is a tuple of partner labels aligned
    # with the sorted open edges
    boundary: list[int] = []
    states: dict[tuple[int, ...], int] = {(): 1}
    peak = 0
    for idx in order:
        q = pd[idx]
        new_states: dict[tuple[int, ...], int] = {}
        new_boundary = None
        for key, weight in states.items():
            for sgn, pairs in ((1, A_PAIRS), (-1, B_PAIRS)):
                partner = dict(zip(boundary, key))
                loops = 0
                for i, j in pairs:
                    x, y = q[i], q[j]
                    if x == y:
                        loops += 1
                        continue
                    if x in partner:
                        ex = partner.pop(x)
                        del partner[ex]
                    else:
                        ex = x
                    if ex == y:
                        loops += 1
                        continue
                    if y in partner:
                        ey = partner.pop(y)
                        del partner[ey]
                    else:
                        ey = y
                    partner[ex] = ey
                    partner[ey] = ex
                if new_boundary is None:
                    new_boundary = sorted(partner)
                nkey = tuple(partner[e] for e in new_boundary)
                w = weight << ((5 + sgn - 2 * loops) * bits)
                for _ in range(loops):
                    w = -(w + (w << step4))
                new_states[nkey] = new_states.get(nkey, 0) + w
        boundary = new_boundary
        states = new_states
        size = sum(w.bit_length() for w in states.values()) // 8 + 64 * len(states)
        peak = max(peak, size)
        if size > memory_budget:
            raise BracketBudgetError(
                f"contraction state table reached ~{size} bytes at boundary width "
                f"{len(boundary)} (budget {memory_budget})",
                width=len(boundary),
            )
    if boundary:
        raise AssertionError("contraction left an open boundary")
    log.debug("contracted %d crossings, max width %d, peak ~%d bytes", n, width, peak)
    (value,) = states.values()
    return _unpack(value, bits, -5 * n) * DELTA**d.free_loops


def bracket_fast(d: Diagram, memory_budget: int = MEMORY_BUDGET) -> LaurentPoly:
    """Kauffman bracket by boundary-state contraction; same value as :func:`bracket`."""
    return _normalize(_contract(d, memory_budget), d)


def bracket_unnormalized(d: Diagram, memory_budget: int = MEMORY_BUDGET) -> LaurentPoly:
    """Bracket with the empty diagram equal to 1 (so a lone circle is delta)."""
    return _contract(d, memory_budget)


# -- Jones -------------------------------------------------------------------


def jones(d: Diagram, reduced: bool = True) -> LaurentPoly:
    """Jones polynomial in the variable A (``t = A**-4``).

    ``(-A)**(-3 w) <D>``; the unreduced version is multiplied by
    ``t**(1/2) + t**(-1/2) = A**2 + A**-2`` so the unknot gives that value.
    """
    if not d.is_knot():
        raise DiagramError(f"jones expects a knot diagram, got {d.components} components")
    w = d.writhe
    value = bracket_fast(d) * LaurentPoly({-3 * w: (-1) ** (w % 2)})
    if not reduced:
        value = -value * DELTA
    return value


@dataclass(frozen=True)
class DegreeQuad:
    """``4 d_+`` and ``4 d_-`` of a polynomial in ``t``."""

    four_d_plus: int
    four_d_minus: int

    def __iter__(self):
        return iter((self.four_d_plus, self.four_d_minus))


def t_degrees(p: LaurentPoly) -> DegreeQuad:
    """Max and min ``t``-degree (times 4) of a polynomial given in ``A``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no degrees")
    return DegreeQuad(-p.min_exp, -p.max_exp)

