"""Quadratic quasi-polynomial fits of degree sequences.

All values live on the ``4d`` scale, where degrees are integers.  A fitted
:class:`QuasiPolynomial` gives, for ``n > onset``,

    value(n) = a(r) n**2 + b(r) n + c(r),    r = n mod period.

:func:`slope_data` converts the quadratic and linear coefficients into
Jones slopes and the ``jx`` sets.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "DegreeSequence",
    "FitError",
    "QuasiPolynomial",
    "SCHEMA",
    "SlopeData",
    "evaluate",
    "fit",
    "slope_data",
]

SCHEMA = "slopekit/1"


@dataclass
class DegreeSequence:
    """``4 d_+`` and ``4 d_-`` for colors ``n = 1 .. len(plus)``."""

    plus: list[int]
    minus: list[int]
    provenance: str = "formula"

    def __post_init__(self):
        self.plus = [int(v) for v in self.plus]
        self.minus = [int(v) for v in self.minus]
        if len(self.plus) != len(self.minus):
            raise ValueError("plus and minus sequences differ in length")

    @property
    def n_max(self) -> int:
        return len(self.plus)

    @property
    def ns(self) -> list[int]:
        return list(range(1, self.n_max + 1))

    def side(self, which: str) -> list[int]:
        if which in ("+", "plus"):
            return self.plus
        if which in ("-", "minus"):
            return self.minus
        raise ValueError(f"unknown side {which!r}")

    def mirrored(self) -> DegreeSequence:
        """Degrees of the mirror image: ``(4d+, 4d-) -> (-4d-, -4d+)``."""
        return DegreeSequence([-v for v in self.minus], [-v for v in self.plus], self.provenance)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.ns,
            "four_d_plus": list(self.plus),
            "four_d_minus": list(self.minus),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, obj) -> DegreeSequence:
        if isinstance(obj, str):
            obj = json.loads(obj)
        ns = list(obj["n"])
        if ns != list(range(1, len(ns) + 1)):
            raise ValueError("degree sequences must list n = 1, 2, ..., n_max")
        return cls(obj["four_d_plus"], obj["four_d_minus"], obj.get("provenance", "formula"))


def _frac_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


@dataclass(frozen=True)
class QuasiPolynomial:
    """Per-residue quadratics; ``coeffs[r] = (a, b, c)`` for ``n % period == r``."""

    period: int
    coeffs: tuple[tuple[Fraction, Fraction, Fraction], ...]
    onset: int = 0

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise ValueError("need exactly one coefficient triple per residue")
        object.__setattr__(
            self, "coeffs", tuple(tuple(Fraction(x) for x in t) for t in self.coeffs)
        )

    @classmethod
    def constant_period(cls, a, b, c, onset: int = 0) -> QuasiPolynomial:
        return cls(1, ((a, b, c),), onset)

    def quadratic(self) -> set[Fraction]:
        return {t[0] for t in self.coeffs}

    def linear(self) -> set[Fraction]:
        return {t[1] for t in self.coeffs}

    def constant(self) -> set[Fraction]:
        return {t[2] for t in self.coeffs}

    def expand(self, period: int) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        """Coefficient triples restated over a multiple of the period."""
        if period % self.period:
            raise ValueError(f"{period} is not a multiple of {self.period}")
        return tuple(self.coeffs[r % self.period] for r in range(period))

    def negated(self) -> QuasiPolynomial:
        return QuasiPolynomial(
            self.period, tuple(tuple(-x for x in t) for t in self.coeffs), self.onset
        )

    def __call__(self, n: int) -> int:
        return evaluate(self, n)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "period": self.period,
            "onset": self.onset,
            "residues": [
                {"a": _frac_json(a), "b": _frac_json(b), "c": _frac_json(c)}
                for a, b, c in self.coeffs
            ],
        }

    @classmethod
    def from_json(cls, obj) -> QuasiPolynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        coeffs = tuple(
            tuple(Fraction(*res[k]) for k in "abc") for res in obj["residues"]
        )
        return cls(int(obj["period"]), coeffs, int(obj.get("onset", 0)))


def evaluate(qp: QuasiPolynomial, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    a, b, c = qp.coeffs[n % qp.period]
    v = a * n * n + b * n + c
    if v.denominator != 1:
        raise ValueError(f"quasi-polynomial takes the non-integral value {v} at n={n}")
    return int(v)


class FitError(ValueError):
    """No quadratic quasi-polynomial fits within the search bounds."""

    def __init__(self, message: str, witness: tuple[int, int, Fraction] | None = None):
        super().__init__(message)
        self.witness = witness


def _interpolate(pts: Sequence[tuple[int, int]]) -> tuple[Fraction, Fraction, Fraction]:
    """Exact quadratic through three points (Lagrange form)."""
    (x0, y0), (x1, y1), (x2, y2) = pts
    a = b = c = Fraction(0)
    for xi, yi, xj, xk in ((x0, y0, x1, x2), (x1, y1, x0, x2), (x2, y2, x0, x1)):
        w = Fraction(yi, (xi - xj) * (xi - xk))
        a += w
        b -= w * (xj + xk)
        c += w * xj * xk
    return a, b, c


def fit(
    values: Sequence[int] | Mapping[int, int],
    max_period: int = 4,
    max_onset: int = 4,
    min_support: int = 4,
) -> QuasiPolynomial:
    """Smallest ``(period, onset)`` quadratic quasi-polynomial through the data.

    ``values`` is either a mapping ``n -> value`` or a sequence taken as
    ``n = 1, 2, ...``.  Every residue class must keep at least
    ``min_support`` points beyond the onset, so that each fitted quadratic
    is confirmed by at least one point it was not built from.
    """
    if isinstance(values, Mapping):
        data = sorted((int(n), int(v)) for n, v in values.items())
    else:
        data = [(n, int(v)) for n, v in enumerate(values, start=1)]
    if min_support < 3:
        raise ValueError("min_support must be at least 3")
    best_witness = None
    for period in range(1, max_period + 1):
        for onset in range(0, max_onset + 1):
            classes: dict[int, list[tuple[int, int]]] = {r: [] for r in range(period)}
            for n, v in data:
                if n > onset:
                    classes[n % period].append((n, v))
            if any(len(pts) < min_support for pts in classes.values()):
                continue
            coeffs, ok = [], True
            for r in range(period):
                pts = classes[r]
                a, b, c = _interpolate(pts[:3])
                for n, v in pts[3:]:
                    pred = a * n * n + b * n + c
                    if pred != v:
                        ok = False
                        miss = abs(pred - v)
                        if best_witness is None or miss < best_witness[0]:
                            best_witness = (miss, (n, v, pred))
                        break
                if not ok:
                    break
                coeffs.append((a, b, c))
            if ok:
                return QuasiPolynomial(period, tuple(coeffs), onset)
    witness = best_witness[1] if best_witness else None
    msg = f"no quadratic quasi-polynomial with period <= {max_period} and onset <= {max_onset}"
    if witness:
        msg += f"; closest miss at n={witness[0]}: observed {witness[1]}, predicted {witness[2]}"
    elif best_witness is None:
        msg += " (too few points per residue class)"
    raise FitError(msg, witness)


@dataclass(frozen=True)
class SlopeData:
    """Jones slopes and linear-term sets for both degree sides.

    ``js``/``js_star`` are the quadratic coefficients of ``4 d_+``/``4 d_-``;
    ``jx``/``jx_star`` are half their linear coefficients, since on the
    ``4d`` scale the linear coefficient equals ``2 * jx``.
    """

    js: frozenset[Fraction] = field(default_factory=frozenset)
    jx: frozenset[Fraction] = field(default_factory=frozenset)
    js_star: frozenset[Fraction] = field(default_factory=frozenset)
    jx_star: frozenset[Fraction] = field(default_factory=frozenset)

    def mirrored(self) -> SlopeData:
        neg = lambda s: frozenset(-x for x in s)  # noqa: E731
        return SlopeData(neg(self.js_star), neg(self.jx_star), neg(self.js), neg(self.jx))

    def to_json(self) -> dict:
        enc = lambda s: [_frac_json(x) for x in sorted(s)]  # noqa: E731
        return {
            "schema": SCHEMA,
            "js": enc(self.js),
            "jx": enc(self.jx),
            "js_star": enc(self.js_star),
            "jx_star": enc(self.jx_star),
        }


def slope_data(qp_plus: QuasiPolynomial, qp_minus: QuasiPolynomial) -> SlopeData:
    return SlopeData(
        js=frozenset(qp_plus.quadratic()),
        jx=frozenset(b / 2 for b in qp_plus.linear()),
        js_star=frozenset(qp_minus.quadratic()),
        jx_star=frozenset(b / 2 for b in qp_minus.linear()),
    )
