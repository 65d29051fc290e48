"""Kauffman states, adequacy, state graphs and state-surface invariants."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, DiagramError, signed_counts
from .skein import A_PAIRS, B_PAIRS

__all__ = [
    "StateGraph",
    "SurfaceInvariants",
    "adequacy",
    "all_a",
    "all_b",
    "is_single_cycle",
    "resolve",
    "state_graph",
    "state_surface_invariants",
]


def all_a(d: Diagram) -> tuple[str, ...]:
    return ("A",) * len(d.pd)


def all_b(d: Diagram) -> tuple[str, ...]:
    return ("B",) * len(d.pd)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _smoothing(side: str):
    if side == "A":
        return A_PAIRS
    if side == "B":
        return B_PAIRS
    raise ValueError(f"state choices are 'A' or 'B', got {side!r}")


def resolve(d: Diagram, state: Sequence[str]) -> tuple[int, dict[int, int]]:
    """Smooth every crossing as chosen; return the circle count and edge -> circle id.

    Free loops count as circles but carry no edges.  Circle ids are
    ``0 .. k-1`` in order of first appearance among the sorted edge labels.
    """
    if len(state) != len(d.pd):
        raise ValueError(f"state has {len(state)} entries for {len(d.pd)} crossings")
    uf = _UnionFind(d.edges)
    for q, side in zip(d.pd, state):
        for i, j in _smoothing(side):
            uf.union(q[i], q[j])
    ids: dict[int, int] = {}
    membership = {}
    for e in d.edges:
        membership[e] = ids.setdefault(uf.find(e), len(ids))
    return len(ids) + d.free_loops, membership


@dataclass(frozen=True)
class StateGraph:
    """One vertex per state circle, one edge per crossing (loops allowed)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> Counter:
        deg = Counter({v: 0 for v in range(self.vertex_count)})
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        uf = _UnionFind(range(self.vertex_count))
        for u, v in self.edges:
            uf.union(u, v)
        return len({uf.find(v) for v in range(self.vertex_count)}) == 1


def state_graph(d: Diagram, side: str = "A") -> StateGraph:
    count, member = resolve(d, (side,) * len(d.pd))
    (i1, j1), (i2, _) = _smoothing(side)
    edges = []
    for q in d.pd:
        # the two arcs of the smoothing at this crossing
        u, v = member[q[i1]], member[q[i2]]
        edges.append((min(u, v), max(u, v)))
    return StateGraph(count, tuple(edges))


def is_single_cycle(g: StateGraph) -> bool:
    """Connected, loopless, and every vertex of degree exactly 2."""
    if g.vertex_count == 0 or not g.edges:
        return False
    if g.has_loop() or not g.is_connected():
        return False
    return all(k == 2 for k in g.degrees().values())


def adequacy(d: Diagram) -> tuple[bool, bool]:
    """``(A-adequate, B-adequate)``: the two arcs at each crossing lie on distinct circles."""
    flags = []
    for side in ("A", "B"):
        _, member = resolve(d, (side,) * len(d.pd))
        (i1, _), (i2, _) = _smoothing(side)
        flags.append(all(member[q[i1]] != member[q[i2]] for q in d.pd))
    return flags[0], flags[1]


@dataclass(frozen=True)
class SurfaceInvariants:
    """Boundary slope ``alpha/beta`` (beta > 0), number of boundary components, Euler characteristic."""

    slope: Fraction
    boundary_components: int
    euler: int

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        if self.boundary_components < 1:
            raise ValueError("a surface record needs at least one boundary component")

    @property
    def alpha(self) -> int:
        return self.slope.numerator

    @property
    def beta(self) -> int:
        return self.slope.denominator

    def to_json(self) -> dict:
        return {
            "slope": [self.alpha, self.beta],
            "boundary_components": self.boundary_components,
            "euler": self.euler,
        }


def state_surface_invariants(d: Diagram, side: str = "A") -> SurfaceInvariants:
    """Slope and Euler characteristic of the all-A (or all-B) state surface of a knot diagram.

    Side A: slope ``-2 c_-``, ``chi = v_A - c``.  Side B: slope ``2 c_+``,
    ``chi = v_B - c``.  The boundary is the knot, so one component.
    """
    if not d.is_knot():
        raise DiagramError(f"state surfaces are defined here for knots, got {d.components} components")
    c_plus, c_minus, _ = signed_counts(d)
    v, _ = resolve(d, (side,) * len(d.pd))
    slope = -2 * c_minus if side == "A" else 2 * c_plus
    return SurfaceInvariants(Fraction(slope), 1, v - len(d.pd))
