from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import braid_diagrams
from oracles import count_circles_by_walking
from slopekit import corpus
from slopekit.diagram import DiagramError, TorusParams, mirror, parse_pd, signed_counts, torus_diagram
from slopekit.skein import A_PAIRS, B_PAIRS
from slopekit.states import (
    StateGraph,
    SurfaceInvariants,
    adequacy,
    all_a,
    all_b,
    is_single_cycle,
    resolve,
    state_graph,
    state_surface_invariants,
)

ALTERNATING = ["trefoil", "right-trefoil", "figure8", "T(-2,3)", "T(-2,5)", "T(-2,7)"]
KNOTS = [name for name, d in corpus.CORPUS.items() if d.is_knot()]


def walk_count(d, state):
    pairs = [A_PAIRS if s == "A" else B_PAIRS for s in state]
    return count_circles_by_walking(d.pd, pairs, d.free_loops)


def loop_free_by_flipping(d, side):
    """Adequate on a side iff flipping any single crossing lowers the circle count."""
    base = (side,) * len(d)
    other = "B" if side == "A" else "A"
    v, _ = resolve(d, base)
    for i in range(len(d)):
        flipped = base[:i] + (other,) + base[i + 1 :]
        if resolve(d, flipped)[0] != v - 1:
            return False
    return True


def test_left_trefoil_circles():
    d = corpus.get("trefoil")
    assert resolve(d, all_a(d))[0] == 3
    assert resolve(d, all_b(d))[0] == 2


def test_unknot_has_one_circle():
    assert resolve(parse_pd("O"), ())[0] == 1


def test_resolve_length_mismatch():
    with pytest.raises(ValueError):
        resolve(corpus.get("trefoil"), ("A", "B"))


def test_resolve_rejects_bad_choice():
    with pytest.raises(ValueError):
        resolve(corpus.get("kink+"), ("C",))


def test_membership_covers_every_edge():
    d = corpus.get("figure8")
    count, member = resolve(d, all_a(d))
    assert set(member) == set(d.edges)
    assert set(member.values()) == set(range(count))


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_union_find_agrees_with_arc_walk(name):
    d = corpus.get(name)
    for state in (all_a(d), all_b(d)):
        assert resolve(d, state)[0] == walk_count(d, state)


@given(braid_diagrams(), st.data())
@settings(max_examples=60, deadline=None)
def test_union_find_agrees_with_arc_walk_random_states(d, data):
    state = tuple(data.draw(st.sampled_from("AB")) for _ in range(len(d)))
    assert resolve(d, state)[0] == walk_count(d, state)


@given(braid_diagrams(), st.data())
@settings(max_examples=60, deadline=None)
def test_single_flip_changes_count_by_one(d, data):
    state = [data.draw(st.sampled_from("AB")) for _ in range(len(d))]
    i = data.draw(st.integers(0, len(d) - 1))
    before = resolve(d, state)[0]
    state[i] = "B" if state[i] == "A" else "A"
    assert abs(resolve(d, state)[0] - before) == 1


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_circle_sum_bound(name):
    d = corpus.get(name)
    total = resolve(d, all_a(d))[0] + resolve(d, all_b(d))[0]
    assert total <= len(d) + 2


@pytest.mark.parametrize("name", ALTERNATING)
def test_circle_sum_equality_on_alternating(name):
    d = corpus.get(name)
    assert resolve(d, all_a(d))[0] + resolve(d, all_b(d))[0] == len(d) + 2


@pytest.mark.parametrize("name", ["trefoil", "figure8", "T(-2,5)", "T(3,4)"])
def test_adequate_examples(name):
    if name == "T(3,4)":
        # positive braid: all-A gives the Seifert circles, all-B does not separate
        assert adequacy(corpus.get(name)) == (True, False)
    else:
        assert adequacy(corpus.get(name)) == (True, True)


def test_kinked_trefoil_loses_one_flag():
    assert adequacy(corpus.get("trefoil-kink")).count(False) == 1


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_adequacy_matches_flip_route(name):
    d = corpus.get(name)
    assert adequacy(d) == (loop_free_by_flipping(d, "A"), loop_free_by_flipping(d, "B"))


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_adequacy_matches_state_graph_loops(name):
    d = corpus.get(name)
    graphs = state_graph(d, "A"), state_graph(d, "B")
    assert adequacy(d) == tuple(not g.has_loop() for g in graphs)


@given(braid_diagrams())
@settings(max_examples=80, deadline=None)
def test_adequacy_flip_route_random(d):
    assert adequacy(d) == (loop_free_by_flipping(d, "A"), loop_free_by_flipping(d, "B"))


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_mirror_swaps_adequacy(name):
    d = corpus.get(name)
    a, b = adequacy(d)
    assert adequacy(mirror(d)) == (b, a)


def test_left_trefoil_state_graph_is_triangle():
    g = state_graph(corpus.get("trefoil"), "A")
    assert g.vertex_count == 3
    assert len(g.edges) == 3
    assert is_single_cycle(g)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_torus_two_strand_state_graph_is_cycle(q):
    g = state_graph(torus_diagram(TorusParams(-2, q)), "A")
    assert g.vertex_count == q
    assert all(k == 2 for k in g.degrees().values())
    assert is_single_cycle(g)


def test_unknot_state_graph():
    g = state_graph(parse_pd("O"), "A")
    assert (g.vertex_count, g.edges) == (1, ())


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_state_graph_shape(name):
    d = corpus.get(name)
    for side in "AB":
        g = state_graph(d, side)
        assert len(g.edges) == len(d)
        assert g.vertex_count == resolve(d, (side,) * len(d))[0]


def test_is_single_cycle_examples():
    assert is_single_cycle(StateGraph(3, ((0, 1), (1, 2), (0, 2))))
    assert not is_single_cycle(StateGraph(2, ((0, 1), (0, 1), (0, 1))))
    assert not is_single_cycle(StateGraph(1, ()))


def test_is_single_cycle_rejects_two_cycles_and_loops():
    two = StateGraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    assert not is_single_cycle(two)
    assert not is_single_cycle(StateGraph(1, ((0, 0),)))
    # a 2-cycle (double edge) is a cycle in the multigraph sense
    assert is_single_cycle(StateGraph(2, ((0, 1), (0, 1))))


def test_surface_figure8_a():
    s = state_surface_invariants(corpus.get("figure8"), "A")
    assert (s.slope, s.euler, s.boundary_components) == (-4, -1, 1)


def test_surface_left_trefoil_a():
    s = state_surface_invariants(corpus.get("trefoil"), "A")
    assert (s.slope, s.euler) == (-6, 0)


def test_surface_unknot():
    d = parse_pd("O")
    for side in "AB":
        s = state_surface_invariants(d, side)
        assert (s.slope, s.euler, s.boundary_components) == (0, 1, 1)


def test_surface_rejects_links():
    hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)")
    assert hopf.components == 2
    with pytest.raises(DiagramError):
        state_surface_invariants(hopf, "A")


@pytest.mark.parametrize("name", KNOTS)
def test_surface_mirror_relation(name):
    d = corpus.get(name)
    assert state_surface_invariants(mirror(d), "A").slope == -state_surface_invariants(d, "B").slope


@pytest.mark.parametrize("name", KNOTS)
def test_surface_formulas(name):
    d = corpus.get(name)
    c_plus, c_minus, _ = signed_counts(d)
    sa, sb = state_surface_invariants(d, "A"), state_surface_invariants(d, "B")
    assert sa.slope == -2 * c_minus and sb.slope == 2 * c_plus
    assert sa.euler == resolve(d, all_a(d))[0] - len(d)
    assert sb.euler == resolve(d, all_b(d))[0] - len(d)


def test_surface_invariants_record():
    s = SurfaceInvariants(Fraction(-6, 4), 2, 0)
    assert (s.alpha, s.beta) == (-3, 2)
    assert s.to_json() == {"slope": [-3, 2], "boundary_components": 2, "euler": 0}
    with pytest.raises(ValueError):
        SurfaceInvariants(0, 0, 1)
