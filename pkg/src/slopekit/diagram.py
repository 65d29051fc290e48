"""Knot diagrams in planar-diagram (PD) notation.

Each crossing is a quadruple of edge labels listed counterclockwise,
starting at the incoming under-strand.  The under-strand therefore runs
from slot 0 to slot 2.  The over-strand runs either 3 -> 1 (a positive
crossing) or 1 -> 3 (a negative crossing); which one is decided by
following the strands, never by user input.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import NamedTuple

__all__ = [
    "Crossing",
    "Diagram",
    "DiagramError",
    "TorusParams",
    "braid_closure",
    "cable",
    "mirror",
    "parse_pd",
    "signed_counts",
    "torus_diagram",
]

Quad = tuple[int, int, int, int]


class DiagramError(ValueError):
    """Raised for malformed or inconsistent PD data."""


class Crossing(NamedTuple):
    quad: Quad
    sign: int


@dataclass(frozen=True)
class Diagram:
    """Immutable PD diagram.

    ``pd`` holds the crossing quadruples, ``free_loops`` the number of
    crossingless circles.  Orientation and signs are derived on
    construction; an inconsistent code raises :class:`DiagramError`.
    """

    pd: tuple[Quad, ...]
    free_loops: int = 0
    _signs: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _components: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pd = tuple(tuple(int(x) for x in q) for q in self.pd)
        object.__setattr__(self, "pd", pd)
        if self.free_loops < 0:
            raise DiagramError("free_loops must be non-negative")
        for q in pd:
            if len(q) != 4:
                raise DiagramError(f"crossing {q} does not have four entries")
        signs, comps = _orient(pd)
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_components", comps + self.free_loops)

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        return tuple(Crossing(q, s) for q, s in zip(self.pd, self._signs))

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    @property
    def crossing_count(self) -> int:
        return len(self.pd)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.pd)

    @property
    def edges(self) -> list[int]:
        return sorted({e for q in self.pd for e in q})

    @property
    def components(self) -> int:
        return self._components

    def is_knot(self) -> bool:
        return self._components == 1

    @property
    def writhe(self) -> int:
        return sum(self._signs)

    def __len__(self) -> int:
        return len(self.pd)

    # -- serialization ------------------------------------------------------

    def to_pd(self) -> str:
        parts = ["X({},{},{},{})".format(*q) for q in self.pd]
        parts += ["O"] * self.free_loops
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"crossings": [list(q) for q in self.pd], "free_loops": self.free_loops}

    @classmethod
    def from_json(cls, obj) -> Diagram:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(tuple(q) for q in obj["crossings"]), int(obj.get("free_loops", 0)))

    def __str__(self) -> str:
        return self.to_pd()


def _orient(pd: tuple[Quad, ...]) -> tuple[tuple[int, ...], int]:
    """Follow every strand once; return crossing signs and component count."""
    where: dict[int, list[tuple[int, int]]] = {}
    for i, q in enumerate(pd):
        for slot, e in enumerate(q):
            where.setdefault(e, []).append((i, slot))
    for e, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {e} appears {len(occ)} times (expected 2)")

    def other_end(e, i, slot):
        a, b = where[e]
        return b if a == (i, slot) else a

    incoming = [[None] * 4 for _ in pd]  # True: strand enters at this slot
    components = 0

    def walk(i, slot):
        # enter crossing i at `slot` and keep going until the strand closes
        while incoming[i][slot] is None:
            if slot == 2:
                raise DiagramError(f"open strand: under-strand enters crossing {i} at its exit slot")
            out = (slot + 2) % 4
            if incoming[i][out] is not None:
                raise DiagramError(f"open strand at crossing {i}")
            incoming[i][slot] = True
            incoming[i][out] = False
            i, slot = other_end(pd[i][out], i, out)
        if incoming[i][slot] is not True:
            raise DiagramError(f"open strand: edge {pd[i][slot]} leaves crossing {i} twice")

    # strands that pass under somewhere have a fixed direction
    for i in range(len(pd)):
        if incoming[i][0] is None:
            components += 1
            walk(i, 0)
    # the rest only ever pass over; any direction is consistent
    for i in range(len(pd)):
        if incoming[i][1] is None:
            components += 1
            walk(i, 3)

    signs = tuple(1 if incoming[i][3] else -1 for i in range(len(pd)))
    return signs, components


_TOKEN = re.compile(r"\s*(?:X\s*[\(\[]\s*([-\d\s,]+?)\s*[\)\]]|(O))\s*,?", re.IGNORECASE)


def parse_pd(text: str) -> Diagram:
    """Parse ``"X(1,4,2,5) X(3,6,4,1) ..."``; each ``O`` adds a free loop.

    ``PD[...]`` wrappers and square brackets (KnotTheory style) are accepted.
    """
    s = text.strip()
    m = re.fullmatch(r"PD\s*[\(\[](.*)[\)\]]", s, re.DOTALL | re.IGNORECASE)
    if m:
        s = m.group(1)
    quads, loops, pos = [], 0, 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise DiagramError(f"malformed PD token near {s[pos:pos + 20]!r}")
        if m.group(2):
            loops += 1
        else:
            nums = [x for x in re.split(r"[\s,]+", m.group(1)) if x]
            if len(nums) != 4:
                raise DiagramError(f"crossing needs four labels: {m.group(0).strip()!r}")
            quads.append(tuple(int(x) for x in nums))
        pos = m.end()
    if not quads and not loops:
        raise DiagramError("empty PD code")
    return Diagram(tuple(quads), loops)


def signed_counts(d: Diagram) -> tuple[int, int, int]:
    """``(c_plus, c_minus, writhe)``."""
    plus = sum(1 for s in d.signs if s > 0)
    minus = len(d.signs) - plus
    return plus, minus, plus - minus


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing."""
    out = []
    for (a, b, c, e), s in zip(d.pd, d.signs):
        # the old over-strand becomes the new under-strand
        out.append((e, a, b, c) if s > 0 else (b, c, e, a))
    return Diagram(tuple(out), d.free_loops)


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"torus parameters ({self.p}, {self.q}) are not coprime")

    @classmethod
    def canonical(cls, p: int, q: int) -> TorusParams:
        """Normalize to ``|p| < |q|, q > 0`` using T(p,q) = T(q,p) = T(-p,-q)."""
        if abs(p) > abs(q):
            p, q = q, p
        if q < 0:
            p, q = -p, -q
        return cls(p, q)

    def is_canonical(self) -> bool:
        return abs(self.p) < abs(self.q) and self.q > 0

    def is_unknot(self) -> bool:
        return abs(self.p) <= 1 or abs(self.q) <= 1

    def mirror(self) -> TorusParams:
        return TorusParams(-self.p, self.q)

    def crossing_number(self) -> int:
        """``min(|p|(|q|-1), (|p|-1)|q|)``."""
        p, q = abs(self.p), abs(self.q)
        return min(p * (q - 1), (p - 1) * q)

    def __iter__(self):
        return iter((self.p, self.q))


def braid_closure(word: list[int], strands: int | None = None) -> Diagram:
    """PD code of the closure of a braid word.

    Generator ``i`` (1-based) crosses strands ``i`` and ``i+1``; positive
    letters give positive crossings.  Strands run upward.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise DiagramError(f"generator {g} out of range for {strands} strands")
    nxt = iter(range(1, 10**9))
    bottom = [next(nxt) for _ in range(strands)]
    current = list(bottom)
    quads = []
    for g in word:
        i = abs(g) - 1
        sw, se = current[i], current[i + 1]
        nw, ne = next(nxt), next(nxt)
        if g > 0:
            # over-strand SW -> NE
            quads.append([se, ne, nw, sw])
        else:
            # under-strand SW -> NE
            quads.append([sw, se, ne, nw])
        current[i], current[i + 1] = nw, ne
    # close up: identify top label with bottom label in each position
    rename = {}
    loops = 0
    for b, t in zip(bottom, current):
        if b == t:
            loops += 1
        else:
            rename[t] = b
    quads = [[rename.get(e, e) for e in q] for q in quads]
    return Diagram(tuple(tuple(q) for q in _relabel(quads)), loops)


def _relabel(quads):
    order, seen = {}, 0
    for q in quads:
        for e in q:
            if e not in order:
                seen += 1
                order[e] = seen
    return [[order[e] for e in q] for q in quads]


def torus_diagram(tp: TorusParams) -> Diagram:
    """Closure of ``(s_1 ... s_{|p|-1})^q`` with crossing sign ``sign(p*q)``."""
    p, q = tp.p, tp.q
    if abs(p) < 2:
        raise DiagramError("torus_diagram needs |p| >= 2; use the 0-crossing unknot")
    sign = 1 if p * q > 0 else -1
    word = [sign * i for i in range(1, abs(p))] * abs(q)
    return braid_closure(word, abs(p))


def cable(d: Diagram, k: int) -> Diagram:
    """Blackboard-framed ``k``-parallel; each crossing becomes a k x k grid."""
    if k < 0:
        raise ValueError("cable multiplicity must be non-negative")
    if k == 1:
        return d
    if k == 0:
        return Diagram((), 0)
    # direction of each edge: edge -> (crossing it enters, slot)
    signs = d.signs
    labels = {}
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0]

    for e in d.edges:
        labels[e] = [fresh() for _ in range(k)]  # copy j = j-th to the right of travel

    quads = []
    for (a, b, c, w), s in zip(d.pd, signs):
        # geometry: a south (under in), b east, c north (under out), w west.
        # copy j of the vertical strand sits at x = j (right of northbound = east).
        # over-strand eastbound (w -> b, positive): copy j at y = -j.
        # over-strand westbound (b -> w, negative): copy j at y = +j.
        ys = [-j if s > 0 else j for j in range(k)]
        rows = sorted(range(k), key=lambda j: ys[j])  # south to north
        # vertical segments: seg[x][r] is the segment of column x below row r
        vert = [[labels[a][x]] + [fresh() for _ in range(k - 1)] + [labels[c][x]] for x in range(k)]
        # horizontal segments: hseg[j][x] is the segment of over-copy j west of column x
        horiz = [[labels[w][j]] + [fresh() for _ in range(k - 1)] + [labels[b][j]] for j in range(k)]
        for r, j in enumerate(rows):
            for x in range(k):
                quads.append((vert[x][r], horiz[j][x + 1], vert[x][r + 1], horiz[j][x]))
    return Diagram(tuple(tuple(q) for q in _relabel(quads)), d.free_loops * k)
