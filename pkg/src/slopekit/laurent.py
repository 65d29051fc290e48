"""Sparse univariate Laurent polynomials with integer coefficients.

The variable is the Kauffman bracket variable ``A``.  Jones-type
invariants are reported in ``t = A**-4``; see :func:`slopekit.skein.t_degrees`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

__all__ = ["LaurentPoly", "A", "ONE", "ZERO", "DELTA"]


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum(c * A**e)``.

    Stored as a mapping exponent -> nonzero integer coefficient.  The zero
    polynomial has no terms.  Arithmetic uses Python integers, so it never
    overflows.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # terms must already be nonzero and sorted
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly._raw({-e * -k: c ** -k})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute ``A -> A**-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divexact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ``ArithmeticError`` if a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = divisor.max_exp, divisor.coeff(divisor.max_exp)
        low_d = divisor.min_exp
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        floor = self.min_exp - low_d if self._terms else 0
        while rem:
            top = max(rem)
            qe = top - lead_e
            c = rem[top]
            if qe < floor or c % lead_c:
                raise ArithmeticError("polynomial division is not exact")
            qc = c // lead_c
            quot[qe] = qc
            for e, dc in divisor._terms.items():
                k = e + qe
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- output -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"variable": "A", "terms": [[e, c] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> LaurentPoly:
        if obj.get("variable", "A") != "A":
            raise ValueError(f"unsupported variable {obj.get('variable')!r}")
        return cls((int(e), int(c)) for e, c in obj["terms"])

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms.items()):
            mag = abs(c)
            if e == 0:
                mono = str(mag)
            else:
                power = "A" if e == 1 else f"A^{e}"
                mono = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
A = LaurentPoly({1: 1})
#: loop value of the Kauffman bracket, -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})
