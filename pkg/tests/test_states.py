from fractions import Fraction

import numpy as np
import pytest

from isingccp import (
    ExactScalar,
    Operator,
    PartitionOfUnity,
    PreconditionError,
    build_lambda_state,
    commutes,
    conditional_expectation,
    correlation,
    parse_exact,
    sector_correlation,
    to_matrix,
)
from isingccp.states import DegenerateSectorError, NoncommutingEventsError, WeightError
from conftest import half_sum, random_operator

HALF = Fraction(1, 2)
QUARTER = {"AB": 0.25, "ApBp": 0.25, "ABp": 0.25, "ApB": 0.25}


# -- construction ---------------------------------------------------------------


def test_rejects_noncommuting_events():
    a = half_sum(0)
    b = half_sum(HALF)  # neighbours anticommute
    with pytest.raises(NoncommutingEventsError):
        build_lambda_state(a, b, QUARTER)


def test_rejects_degenerate_sector():
    a = half_sum(0)
    with pytest.raises(DegenerateSectorError):
        build_lambda_state(a, a, QUARTER)  # AB' = A - A^2 = 0


def test_rejects_bad_weights(events_float):
    a, b = events_float
    with pytest.raises(WeightError):
        build_lambda_state(a, b, {"AB": 0.5, "ApBp": 0.5, "ABp": 0.0, "ApB": 0.0})
    with pytest.raises(WeightError):
        build_lambda_state(a, b, {"AB": 0.5, "ApBp": 0.25, "ABp": 0.25, "ApB": 0.25})
    with pytest.raises(WeightError):
        build_lambda_state(a, b, {"AB": 1.0})


def test_accepts_the_offset_weights(state_exact):
    assert state_exact.exact
    assert state_exact.sector_traces["AB"] == ExactScalar(Fraction(1, 4))


# -- evaluation -------------------------------------------------------------------


def test_state_is_normalized(state_exact, state_float):
    assert state_exact.evaluate(Operator.identity(True)) == ExactScalar(1)
    assert abs(state_float.evaluate(Operator.identity()) - 1) < 1e-14


def test_sector_values_collapse(state_exact, pi_offset_weights):
    for label in ("AB", "ApBp", "ABp", "ApB"):
        assert state_exact.evaluate(state_exact.sectors[label]) == pi_offset_weights[label]


def test_event_probability_sums_two_sectors(state_exact, pi_offset_weights):
    got = state_exact.evaluate(state_exact.a)
    assert got == pi_offset_weights["AB"] + pi_offset_weights["ABp"]


def test_uniform_weights_reproduce_the_trace(events_float):
    state = build_lambda_state(*events_float, QUARTER)
    rng = np.random.default_rng(31)
    for _ in range(20):
        x = random_operator(rng)
        assert abs(state.evaluate(x) - complex(x.trace())) < 1e-12


def test_correlation_values(state_exact, events_float):
    assert correlation(state_exact) == parse_exact("1/400*pi^2")
    assert sector_correlation(state_exact) == parse_exact("1/400*pi^2")
    trace_state = build_lambda_state(*events_float, QUARTER)
    assert abs(correlation(trace_state)) < 1e-15


def test_faithfulness_on_the_window(state_float):
    lo, hi = state_float.window()
    rho = state_float.density_matrix((Fraction(lo, 2), Fraction(hi, 2)))
    eigs = np.linalg.eigvalsh(rho)
    assert eigs.min() > 0
    # the density eigenvalues are exactly w_P / m_P, each with multiplicity m_P
    expected = sorted(
        float(state_float.weights[k]) / 4
        for k in ("AB", "ApBp", "ABp", "ApB")
        for _ in range(4)
    )
    assert np.allclose(sorted(eigs), expected)


def test_exact_float_agreement(state_exact, state_float):
    rng = np.random.default_rng(32)
    # evaluate the same operators through both modes
    for _ in range(20):
        terms = []
        for _ in range(4):
            k = rng.integers(-2, 6, size=int(rng.integers(1, 4)))
            sites = sorted(set(Fraction(int(v), 2) for v in k))
            coeff = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
            terms.append((coeff, sites, "+1"))
        xe = Operator.from_terms(terms, exact=True)
        xf = xe.to_float()
        assert abs(complex(state_exact.evaluate(xe)) - state_float.evaluate(xf)) < 1e-12


# -- partitions and the conditional expectation --------------------------------------


def test_partition_validation(events_float):
    a, _ = events_float
    one = Operator.identity()
    PartitionOfUnity([a, one - a])
    with pytest.raises(PreconditionError):
        PartitionOfUnity([a, a])  # not orthogonal
    with pytest.raises(PreconditionError):
        PartitionOfUnity([a])  # does not sum to the identity
    with pytest.raises(PreconditionError):
        PartitionOfUnity([a.scaled(0.5), one - a.scaled(0.5)])


def test_expectation_identity_partition():
    part = PartitionOfUnity([Operator.identity()])
    rng = np.random.default_rng(33)
    x = random_operator(rng)
    assert conditional_expectation(part, x).isclose(x)


def test_expectation_fixes_commuting_operators(events_float):
    a, b = events_float
    part = PartitionOfUnity([a, Operator.identity() - a])
    assert conditional_expectation(part, b).isclose(b)  # [a, b] = 0
    assert conditional_expectation(part, Operator.identity()).isclose(Operator.identity())


def test_expectation_is_idempotent(events_float):
    a, _ = events_float
    part = PartitionOfUnity([a, Operator.identity() - a])
    rng = np.random.default_rng(34)
    for _ in range(15):
        x = random_operator(rng, lo=-2, hi=6)
        once = conditional_expectation(part, x)
        twice = conditional_expectation(part, once)
        assert once.isclose(twice, 1e-12)


def test_expectation_is_positive(events_float):
    a, _ = events_float
    part = PartitionOfUnity([a, Operator.identity() - a])
    rng = np.random.default_rng(35)
    win = (Fraction(-1, 2), Fraction(3, 2))
    for _ in range(10):
        y = random_operator(rng, lo=-1, hi=4, n_terms=3)
        x = y.adjoint() * y  # positive
        m = to_matrix(conditional_expectation(part, x), win)
        eigs = np.linalg.eigvalsh(m)
        assert eigs.min() > -1e-11


def test_expectation_bimodule_property(events_float):
    a, b = events_float
    one = Operator.identity()
    part = PartitionOfUnity([a, one - a])
    rng = np.random.default_rng(36)
    # b commutes with both cells, so it moves through the expectation
    for _ in range(10):
        x = random_operator(rng, lo=-2, hi=6, n_terms=3)
        lhs = conditional_expectation(part, b * x * b)
        rhs = b * conditional_expectation(part, x) * b
        assert lhs.isclose(rhs, 1e-11)


def test_expectation_output_commutes_with_cells(events_float):
    a, _ = events_float
    part = PartitionOfUnity([a, Operator.identity() - a])
    rng = np.random.default_rng(37)
    for _ in range(10):
        x = random_operator(rng, lo=-2, hi=6, n_terms=3)
        e = conditional_expectation(part, x)
        for cell in part:
            assert commutes(e, cell, 1e-11)
