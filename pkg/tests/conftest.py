import pytest
from hypothesis import strategies as st

from slopekit import corpus
from slopekit.diagram import braid_closure

_AC_RESULTS = []


@pytest.fixture
def diagrams():
    return corpus.CORPUS


@pytest.fixture
def ac_report():
    """Collects one line per acceptance criterion for the terminal summary."""

    def record(name, passed, detail=""):
        _AC_RESULTS.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _AC_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _AC_RESULTS:
        terminalreporter.write_line(f"{name}: {'PASS' if passed else 'FAIL'}  {detail}")


@st.composite
def braid_words(draw, max_strands=4, max_len=9):
    strands = draw(st.integers(2, max_strands))
    gens = st.integers(1, strands - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    word = draw(st.lists(gens, min_size=1, max_size=max_len))
    return word, strands


@st.composite
def braid_diagrams(draw, **kw):
    word, strands = draw(braid_words(**kw))
    return braid_closure(word, strands)
