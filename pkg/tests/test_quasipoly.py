import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slopekit.diagram import TorusParams
from slopekit.quasipoly import (
    SCHEMA,
    DegreeSequence,
    FitError,
    QuasiPolynomial,
    SlopeData,
    evaluate,
    fit,
    slope_data,
)
from slopekit.torus import torus_degree_sequence, torus_quasipolynomials

F = Fraction
TORUS_RANGE = [
    (p, q) for p in range(-4, -1) for q in range(-p + 1, 8) if math.gcd(p, q) == 1
]


def unknot_qps():
    return fit([2 * (n - 1) for n in range(1, 13)]), fit([-2 * (n - 1) for n in range(1, 13)])


def test_fit_unknot():
    qp = fit([2 * (n - 1) for n in range(1, 13)])
    assert (qp.period, qp.onset, qp.coeffs) == (1, 0, ((0, 2, -2),))


def test_fit_left_trefoil_minus_paper_mode():
    seq = torus_degree_sequence(TorusParams(-2, 3), 12, "paper")
    qp = fit(seq.minus)
    assert qp.period == 2 and qp.onset == 0
    assert qp.quadratic() == {-6} and qp.linear() == {0}
    # even residue carries the extra constant of the even branch
    assert qp.coeffs[0][2] == 10 and qp.coeffs[1][2] == 6


def test_fit_left_trefoil_minus_oracle_mode():
    qp = fit(torus_degree_sequence(TorusParams(-2, 3), 12).minus)
    assert (qp.period, qp.coeffs) == (1, ((-6, 0, 6),))


def test_fit_rejects_exponential():
    with pytest.raises(FitError) as info:
        fit([1, 2, 4, 8, 16, 32], max_period=2)
    assert info.value.witness is not None


def test_fit_reports_too_few_points():
    with pytest.raises(FitError, match="too few"):
        fit([0, 1], max_period=2)


def test_fit_min_support_floor():
    with pytest.raises(ValueError):
        fit(range(10), min_support=2)


def test_fit_finds_onset():
    values = [7, -3] + [n * n for n in range(3, 12)]
    qp = fit(values)
    assert qp.period == 1 and qp.onset == 2
    assert qp.coeffs == ((1, 0, 0),)


def test_fit_accepts_mapping():
    data = {n: 3 * n * n - n for n in range(2, 9)}
    qp = fit(data)
    assert qp.coeffs == ((3, -1, 0),)


def test_fit_prefers_smallest_period():
    values = [n * n + (n % 3) for n in range(1, 19)]
    qp = fit(values)
    assert qp.period == 3
    assert all(qp(n) == values[n - 1] for n in range(1, 19))


@pytest.mark.parametrize("pq", TORUS_RANGE)
@pytest.mark.parametrize("mode", ["oracle", "paper"])
def test_fit_recovers_torus_formula(pq, mode):
    tp = TorusParams(*pq)
    seq = torus_degree_sequence(tp, 12, mode)
    f_plus, f_minus = torus_quasipolynomials(tp, mode)
    for values, expected in ((seq.plus, f_plus), (seq.minus, f_minus)):
        qp = fit(values)
        assert (qp.period, qp.coeffs, qp.onset) == (expected.period, expected.coeffs, 0)


@given(
    st.lists(st.tuples(*[st.integers(-20, 20)] * 3), min_size=1, max_size=3),
    st.integers(0, 2),
)
def test_fit_round_trip_and_extension(triples, onset):
    period = len(triples)
    coeffs = tuple((F(a), F(b), F(c)) for a, b, c in triples)
    truth = QuasiPolynomial(period, coeffs)
    n_max = onset + 4 * period
    values = {n: truth(n) for n in range(onset + 1, n_max + 1)}
    qp = fit(values)
    for n, v in values.items():
        assert qp(n) == v
    longer = dict(values)
    longer.update({n: qp(n) for n in range(n_max + 1, n_max + 5)})
    assert fit(longer) == qp


@pytest.mark.parametrize("pq", TORUS_RANGE)
def test_mirror_contract(pq):
    seq = torus_degree_sequence(TorusParams(*pq), 12)
    sd = slope_data(fit(seq.plus), fit(seq.minus))
    mirrored = seq.mirrored()
    assert slope_data(fit(mirrored.plus), fit(mirrored.minus)) == sd.mirrored()


def test_evaluate_examples():
    plus, minus = torus_quasipolynomials(TorusParams(-2, 3))
    assert evaluate(minus, 1) == 0
    assert evaluate(plus, 3) == -4
    assert evaluate(unknot_qps()[0], 7) == 12


def test_evaluate_rejects_non_integer_and_bad_n():
    qp = QuasiPolynomial.constant_period(F(1, 2), 0, 0)
    with pytest.raises(ValueError):
        evaluate(qp, 1)
    assert evaluate(qp, 2) == 2
    with pytest.raises(ValueError):
        evaluate(qp, 0)


def test_slope_data_torus():
    sd = slope_data(*torus_quasipolynomials(TorusParams(-2, 3)))
    assert sd == SlopeData(frozenset({0}), frozenset({-1}), frozenset({-6}), frozenset({0}))


def test_slope_data_unknot():
    sd = slope_data(*unknot_qps())
    assert (sd.js, sd.jx, sd.js_star, sd.jx_star) == ({0}, {1}, {0}, {-1})


def test_slope_data_figure8():
    plus = [4 * n * n - 2 * n - 2 for n in range(1, 13)]
    minus = [-v for v in plus]
    sd = slope_data(fit(plus), fit(minus))
    assert (sd.js, sd.jx, sd.js_star, sd.jx_star) == ({4}, {-1}, {-4}, {1})


def test_slope_data_json():
    sd = slope_data(*torus_quasipolynomials(TorusParams(-3, 4)))
    obj = sd.to_json()
    assert obj["schema"] == SCHEMA
    assert obj["js_star"] == [[-12, 1]]
    assert obj["jx"] == [[-5, 1]]


def test_quasipolynomial_json_round_trip():
    _, minus = torus_quasipolynomials(TorusParams(-3, 5), "paper")
    obj = json.loads(json.dumps(minus.to_json()))
    assert obj["schema"] == SCHEMA
    assert QuasiPolynomial.from_json(obj) == minus


def test_quasipolynomial_validation_and_expand():
    with pytest.raises(ValueError):
        QuasiPolynomial(2, ((1, 0, 0),))
    qp = QuasiPolynomial.constant_period(1, 2, 3)
    assert qp.expand(2) == ((1, 2, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        QuasiPolynomial(2, ((1, 0, 0), (1, 0, 1))).expand(3)
    assert qp.negated().coeffs == ((-1, -2, -3),)


def test_degree_sequence_json():
    seq = DegreeSequence([0, 2, 4], [0, -2, -4], "brute-force")
    obj = seq.to_json()
    assert obj == {
        "schema": SCHEMA,
        "n": [1, 2, 3],
        "four_d_plus": [0, 2, 4],
        "four_d_minus": [0, -2, -4],
        "provenance": "brute-force",
    }
    assert DegreeSequence.from_json(json.dumps(obj)) == seq
    with pytest.raises(ValueError):
        DegreeSequence.from_json({"n": [2, 3], "four_d_plus": [1, 2], "four_d_minus": [1, 2]})
    with pytest.raises(ValueError):
        DegreeSequence([0, 1], [0])


def test_degree_sequence_sides():
    seq = DegreeSequence([0, 2], [0, -2])
    assert seq.side("+") is seq.plus and seq.side("minus") is seq.minus
    assert seq.ns == [1, 2]
    assert seq.mirrored().plus == [0, 2]
    with pytest.raises(ValueError):
        seq.side("up")
