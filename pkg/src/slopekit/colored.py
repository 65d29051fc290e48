"""Colored Jones polynomials by cabling.

``J_K(n)`` is obtained from the blackboard cables of a diagram weighted by
the Chebyshev polynomial ``S_{n-1}``, then corrected for framing.  The
framing factor is not hard-coded; it is read off a one-crossing kink.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import Diagram, DiagramError, cable, parse_pd
from .laurent import LaurentPoly
from .quasipoly import DegreeSequence
from .skein import MEMORY_BUDGET, BracketBudgetError, bracket_unnormalized, t_degrees

__all__ = [
    "chebyshev",
    "colored_degrees",
    "colored_jones",
    "framing_factor",
    "unknot_colored_jones",
]

POSITIVE_KINK = "X(1,1,2,2)"

DEFAULT_BUDGET = 50  # crossings in the largest cable


def chebyshev(n: int) -> list[int]:
    """Power-basis coefficients of ``S_{n-1}``: ``S_0 = 1, S_1 = x, S_k = x S_{k-1} - S_{k-2}``."""
    if n < 1:
        raise ValueError("color must be at least 1")
    prev, cur = [], [1]
    for _ in range(n - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def unknot_colored_jones(n: int) -> LaurentPoly:
    """``(t**(n/2) - t**(-n/2)) / (t**(1/2) - t**(-1/2))`` written in ``A``."""
    return LaurentPoly({2 * (n - 1) - 4 * j: 1 for j in range(n)})


def _cabled_sum(d: Diagram, n: int, memory_budget: int) -> LaurentPoly:
    total = LaurentPoly()
    for k, c in enumerate(chebyshev(n)):
        if c:
            total += c * bracket_unnormalized(cable(d, k), memory_budget)
    # the colored unknot then equals (-1)**(n-1) [n]
    return total if n % 2 else -total


@lru_cache(maxsize=None)
def framing_factor(n: int) -> LaurentPoly:
    """Monomial ``F(n)`` with ``F(n) * raw(positive kink) = J_unknot(n)``."""
    raw = _cabled_sum(parse_pd(POSITIVE_KINK), n, MEMORY_BUDGET)
    twist = raw.divexact(unknot_colored_jones(n))
    if not twist.is_monomial():
        raise ArithmeticError(f"kink twist at color {n} is not a monomial: {twist}")
    return twist**-1


def colored_jones(
    d: Diagram,
    n: int,
    budget: int = DEFAULT_BUDGET,
    memory_budget: int = MEMORY_BUDGET,
) -> LaurentPoly:
    """Unreduced colored Jones ``J_K(n)`` in ``A`` (``t = A**-4``); ``J_K(1) = 1``.

    ``budget`` caps the crossing count of the largest cable, ``(n-1)**2 c``.
    """
    if not d.is_knot():
        raise DiagramError(f"colored_jones expects a knot diagram, got {d.components} components")
    if n < 1:
        raise ValueError("color must be at least 1")
    largest = (n - 1) ** 2 * len(d.pd)
    if largest > budget:
        raise BracketBudgetError(
            f"color {n} needs a {largest}-crossing cable, over the budget of {budget}"
        )
    raw = _cabled_sum(d, n, memory_budget)
    if d.writhe == 0:
        return raw
    return raw * framing_factor(n) ** d.writhe


def colored_degrees(d: Diagram, n_max: int, budget: int = DEFAULT_BUDGET) -> DegreeSequence:
    """``(4 d_+, 4 d_-)`` of ``J_K(n)`` for ``n = 1..n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    plus, minus = [], []
    for n in range(1, n_max + 1):
        try:
            dq = t_degrees(colored_jones(d, n, budget=budget))
        except BracketBudgetError as exc:
            raise BracketBudgetError(f"n={n}: {exc}", getattr(exc, "width", None)) from exc
        plus.append(dq.four_d_plus)
        minus.append(dq.four_d_minus)
    return DegreeSequence(plus, minus, provenance="brute-force")
