"""Named diagrams used throughout the tests, demos and the CLI.

Trefoil and figure-eight codes follow the KnotTheory tables; the trefoil
there has three negative crossings (the left-handed trefoil).
"""

from __future__ import annotations

from .diagram import Diagram, TorusParams, mirror, parse_pd, torus_diagram

__all__ = ["CORPUS", "get", "names"]

_PD = {
    "unknot": "O",
    "kink+": "X(1,1,2,2)",
    "kink-": "X(1,2,2,1)",
    "trefoil": "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "figure8": "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    # left trefoil with an extra negative kink on edge 6
    "trefoil-kink": "X(1,4,2,5) X(3,7,4,1) X(5,2,6,3) X(6,8,8,7)",
}


def _build() -> dict[str, Diagram]:
    out = {name: parse_pd(code) for name, code in _PD.items()}
    out["left-trefoil"] = out["trefoil"]
    out["right-trefoil"] = mirror(out["trefoil"])
    for p, q in ((-2, 3), (-2, 5), (-2, 7), (3, 4)):
        out[f"T({p},{q})"] = torus_diagram(TorusParams(p, q))
    return out


CORPUS: dict[str, Diagram] = _build()


def names() -> list[str]:
    return list(CORPUS)


def get(name: str) -> Diagram:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(f"unknown diagram {name!r}; known: {', '.join(CORPUS)}") from None
