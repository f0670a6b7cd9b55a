from fractions import Fraction

import pytest

from isingccp import (
    BudgetError,
    DoubleCone,
    Operator,
    PartitionOfUnity,
    SolverConfig,
    build_lambda_state,
    noncommuting_ccs_residuals,
    solve_noncommuting_cc,
)

WINDOW = DoubleCone.span(0, 0, 1)


def test_finds_screening_projections(state_float):
    cfg = SolverConfig(seed=5, restarts=4, tol=1e-8)
    found = solve_noncommuting_cc(state_float, WINDOW, cfg)
    assert found
    for cand in found:
        assert max(cand.residuals) < 1e-8
        assert not cand.commuting  # only noncommuting solutions exist here
        assert cand.localization["common"] and cand.localization["weak"]
        # re-verify through the symbolic route
        part = PartitionOfUnity([cand.projection, Operator.identity() - cand.projection])
        report = noncommuting_ccs_residuals(state_float, part)
        assert max(abs(c.residual.real) for c in report.cells) < 1e-8


def test_exact_state_is_coerced(state_exact):
    cfg = SolverConfig(seed=2, restarts=2, tol=1e-8)
    found = solve_noncommuting_cc(state_exact, WINDOW, cfg)
    assert found


def test_commuting_constraint_returns_nothing(state_float):
    cfg = SolverConfig(seed=5, restarts=4, tol=1e-8, commuting_constraint=True)
    assert solve_noncommuting_cc(state_float, WINDOW, cfg) == []


def test_uncorrelated_state_admits_solutions(events_float):
    state = build_lambda_state(
        *events_float, dict.fromkeys(("AB", "ApBp", "ABp", "ApB"), 0.25)
    )
    # search the window that contains the first event itself
    window = DoubleCone.span(0, Fraction(-1, 2), Fraction(1, 2))
    cfg = SolverConfig(seed=3, restarts=4, tol=1e-8)
    found = solve_noncommuting_cc(state, window, cfg)
    assert found
    # the event's own partition is among the zero-residual solutions and is trivial
    a = events_float[0]
    part = PartitionOfUnity([a, Operator.identity() - a])
    report = noncommuting_ccs_residuals(state, part)
    assert report.satisfied
    assert report.trivial


def test_determinism(state_float):
    cfg = SolverConfig(seed=11, restarts=3, tol=1e-8)
    first = solve_noncommuting_cc(state_float, WINDOW, cfg)
    second = solve_noncommuting_cc(state_float, WINDOW, cfg)
    assert len(first) == len(second)
    for c1, c2 in zip(first, second):
        assert c1.restart == c2.restart
        assert c1.projection == c2.projection


def test_window_budget(state_float):
    cfg = SolverConfig(seed=0, restarts=1, max_window_qubits=3)
    with pytest.raises(BudgetError):
        solve_noncommuting_cc(state_float, DoubleCone.span(0, -3, 4), cfg)


def test_rank_validation(state_float):
    from isingccp import PreconditionError

    with pytest.raises(PreconditionError):
        solve_noncommuting_cc(state_float, WINDOW, SolverConfig(rank=4, restarts=1))


def test_surface_window_required(state_float):
    from isingccp import PreconditionError

    with pytest.raises(PreconditionError):
        solve_noncommuting_cc(state_float, DoubleCone.span(1, 0, 1), SolverConfig(restarts=1))
