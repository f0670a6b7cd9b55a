"""Screening-off analysis: classical, commuting and noncommuting deciders.

A partition {C_k} screens off a correlation between commuting events A, B
when, cell by cell, the conditional product identity holds.  Multiplying
out the conditionals turns each cell condition into the residual

    phi(A B C_k) phi(A'B'C_k) - phi(A B'C_k) phi(A'B C_k) = 0,

which is also meaningful for cells of probability zero (both sides vanish).
Cells lying below A, A', B or B' satisfy the condition in every state; such
solutions are trivial.

For cells commuting with both events inside a finite matrix window, every
trace entering the residual is an integer block rank divided by the window
dimension.  With exact weights the residual therefore becomes a decidable
identity in Q[pi], and all partitions of a window can be checked by
enumerating integer rank assignments: a finite and complete search.

The noncommuting variant conditions through the partition's expectation
E(x) = sum_k C_k x C_k instead, and reduces to the commuting criterion
whenever the cells commute with both events.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import NamedTuple

from .algebra import DEFAULT_TOL, Operator, commutes
from .errors import BudgetError, PreconditionError
from .exact import ExactScalar
from .states import (
    SECTORS,
    LambdaState,
    PartitionOfUnity,
    conditional_expectation,
    correlation as _state_correlation,
)

__all__ = [
    "CellReport",
    "CcsReport",
    "ProbabilitySpace",
    "classical_ccs_check",
    "commuting_ccs_residuals",
    "noncommuting_ccs_residuals",
    "exact_wccp_decision",
    "enumerate_commuting_tuples",
    "EnumerationResult",
    "screening_weight",
    "WeightResult",
    "common_cause_candidate",
]

_TRIVIALITY_LABELS = ("A", "A'", "B", "B'")


def _scalar_float(v) -> float:
    if isinstance(v, ExactScalar):
        return float(complex(v).real)
    if isinstance(v, complex):
        return v.real
    return float(v)


def _scalar_json(v):
    if isinstance(v, ExactScalar):
        return {"exact": str(v), "float": _scalar_float(v)}
    return {"float": _scalar_float(v)}


@dataclass
class CellReport:
    index: int
    residual: object
    weight: object
    trivial: bool
    trivial_under: tuple = ()

    def to_dict(self):
        return {
            "index": self.index,
            "residual": _scalar_json(self.residual),
            "weight": _scalar_json(self.weight),
            "trivial": self.trivial,
            "trivial_under": list(self.trivial_under),
        }


@dataclass
class CcsReport:
    """Per-cell residuals of a screening-off check plus the overall verdict."""

    mode: str
    cells: list
    satisfied: bool
    correlation: object = None
    trivial: bool = False
    extras: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "mode": self.mode,
            "satisfied": self.satisfied,
            "trivial": self.trivial,
            "cells": [c.to_dict() for c in self.cells],
        }
        if self.correlation is not None:
            out["correlation"] = _scalar_json(self.correlation)
        if self.extras:
            out["extras"] = {
                k: (
                    _scalar_json(v)
                    if isinstance(v, (int, float, complex, ExactScalar, Fraction))
                    and not isinstance(v, bool)
                    else v
                )
                for k, v in self.extras.items()
            }
        return out


def _residual_is_zero(value, exact: bool, tol: float) -> bool:
    if exact:
        return value == ExactScalar(0) if isinstance(value, ExactScalar) else value == 0
    return abs(_scalar_float(value)) <= tol


# -- classical case ----------------------------------------------------------


class ProbabilitySpace:
    """A finite probability space over atoms 0..n-1.

    Weights may be Fractions (exact) or floats.  Events are any iterables of
    atom indices.
    """

    def __init__(self, weights):
        weights = list(weights)
        if not weights:
            raise PreconditionError("a probability space needs at least one atom")
        exact = all(isinstance(w, (int, Fraction)) for w in weights)
        if exact:
            weights = [Fraction(w) for w in weights]
            total = sum(weights)
            if total != 1:
                raise PreconditionError(f"atom weights sum to {total}, expected 1")
        else:
            weights = [float(w) for w in weights]
            if abs(sum(weights) - 1.0) > 1e-9:
                raise PreconditionError("atom weights must sum to 1")
        if any(w < 0 for w in weights):
            raise PreconditionError("atom weights must be nonnegative")
        self.weights = weights
        self.exact = exact

    @property
    def n_atoms(self):
        return len(self.weights)

    def event(self, atoms) -> frozenset:
        ev = frozenset(int(a) for a in atoms)
        if any(a < 0 or a >= self.n_atoms for a in ev):
            raise PreconditionError("event contains atoms outside the space")
        return ev

    def p(self, atoms):
        ev = self.event(atoms)
        zero = Fraction(0) if self.exact else 0.0
        return sum((self.weights[a] for a in ev), zero)


def classical_ccs_check(space: ProbabilitySpace, a, b, partition, tol: float = 1e-12) -> CcsReport:
    """Check a partition of the sample space for screening off p(AB) > p(A)p(B).

    Cells of probability zero pass vacuously.  For partitions of size two
    the report also carries the two positive-statistical-relevance
    differences p(A|C) - p(A|C') and p(B|C) - p(B|C')."""
    a, b = space.event(a), space.event(b)
    cells = [space.event(c) for c in partition]
    everything = frozenset(range(space.n_atoms))
    union = frozenset().union(*cells) if cells else frozenset()
    if union != everything:
        raise PreconditionError("partition does not cover the sample space")
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if cells[i] & cells[j]:
                raise PreconditionError(f"partition cells {i} and {j} overlap")

    a_c = everything - a
    b_c = everything - b
    reports = []
    for k, c in enumerate(cells):
        residual = space.p(a & b & c) * space.p(a_c & b_c & c) - space.p(
            (a - b) & c
        ) * space.p((b - a) & c)
        dominators = tuple(
            lab
            for lab, ev in zip(_TRIVIALITY_LABELS, (a, a_c, b, b_c))
            if c <= ev
        )
        reports.append(
            CellReport(k, residual, space.p(c), bool(dominators), dominators)
        )
    corr = space.p(a & b) - space.p(a) * space.p(b)
    satisfied = all(_residual_is_zero(r.residual, space.exact, tol) for r in reports)
    extras = {}
    if len(cells) == 2:
        pc, pcp = space.p(cells[0]), space.p(cells[1])
        if pc > 0 and pcp > 0:
            extras["relevance_A"] = space.p(a & cells[0]) / pc - space.p(a & cells[1]) / pcp
            extras["relevance_B"] = space.p(b & cells[0]) / pc - space.p(b & cells[1]) / pcp
            extras["positive_relevance"] = bool(
                extras["relevance_A"] > 0 and extras["relevance_B"] > 0
            )
    return CcsReport(
        mode="classical",
        cells=reports,
        satisfied=satisfied,
        correlation=corr,
        trivial=all(r.trivial for r in reports),
        extras=extras,
    )


# -- quantum cases ------------------------------------------------------------


def _cell_triviality(cell: Operator, state: LambdaState, tol: float) -> tuple:
    one = Operator.identity(cell.exact)
    events = {
        "A": state.a,
        "A'": one - state.a,
        "B": state.b,
        "B'": one - state.b,
    }
    return tuple(lab for lab, x in events.items() if (cell * x - cell).is_close_to_zero(tol))


def _sector_products(state: LambdaState, y: Operator):
    return [state.evaluate(state.sectors[label] * y) for label in SECTORS]


def _rew_residual(values):
    return values[0] * values[1] - values[2] * values[3]


def commuting_ccs_residuals(
    state: LambdaState, partition: PartitionOfUnity, tol: float = DEFAULT_TOL
) -> CcsReport:
    """Residuals of the commuting screening-off condition, cell by cell.

    Every cell must commute with both events; a violation is reported as an
    error naming the offending cell."""
    for k, c in enumerate(partition):
        if not commutes(c, state.a, tol) or not commutes(c, state.b, tol):
            raise PreconditionError(
                f"cell {k} does not commute with both events; "
                "use noncommuting_ccs_residuals for noncommuting partitions"
            )
    reports = []
    for k, c in enumerate(partition):
        values = _sector_products(state, c)
        residual = _rew_residual(values)
        dominators = _cell_triviality(c, state, tol)
        reports.append(CellReport(k, residual, state.evaluate(c), bool(dominators), dominators))
    satisfied = all(_residual_is_zero(r.residual, state.exact, tol) for r in reports)
    return CcsReport(
        mode="commuting",
        cells=reports,
        satisfied=satisfied,
        correlation=_state_correlation(state),
        trivial=all(r.trivial for r in reports),
    )


def noncommuting_ccs_residuals(
    state: LambdaState, partition: PartitionOfUnity, tol: float = DEFAULT_TOL
) -> CcsReport:
    """Residuals of the noncommuting screening-off condition, cell by cell.

    Conditioning goes through the partition's expectation E(x) = sum C_k x C_k,
    so the cells need not commute with the events; when they do, this
    coincides with :func:`commuting_ccs_residuals`."""
    reports = []
    for k, c in enumerate(partition):
        values = [
            state.evaluate(conditional_expectation(partition, state.sectors[label] * c))
            for label in SECTORS
        ]
        residual = _rew_residual(values)
        dominators = _cell_triviality(c, state, tol)
        reports.append(CellReport(k, residual, state.evaluate(c), bool(dominators), dominators))
    satisfied = all(_residual_is_zero(r.residual, state.exact, tol) for r in reports)
    return CcsReport(
        mode="noncommuting",
        cells=reports,
        satisfied=satisfied,
        correlation=_state_correlation(state),
        trivial=all(r.trivial for r in reports),
    )


# -- exact rank-tuple decision --------------------------------------------------


def _coerce_exact_weights(weights):
    if isinstance(weights, dict):
        seq = [weights[k] for k in SECTORS]
    else:
        seq = list(weights)
    if len(seq) != 4:
        raise PreconditionError("expected four sector weights")
    out = []
    for w in seq:
        if isinstance(w, ExactScalar):
            out.append(w)
        elif isinstance(w, (int, Fraction)) and not isinstance(w, bool):
            out.append(ExactScalar(w))
        else:
            raise PreconditionError("the exact decision needs exact weights")
    return out


def exact_wccp_decision(weights, m, r) -> bool:
    """Decide one cell of the commuting screening-off condition exactly.

    For a cell commuting with both events, the unnormalized trace of each
    sector product is an integer block rank r_P with 0 <= r_P <= m_P, and
    the cell condition becomes an identity in Q[pi]:

        w_AB w_A'B' m_AB' m_A'B r_AB r_A'B' == w_AB' w_A'B m_AB m_A'B' r_AB' r_A'B

    which this decides with no tolerance at all.
    """
    w = _coerce_exact_weights(weights)
    m = [int(v) for v in m]
    r = [int(v) for v in r]
    if len(m) != 4 or len(r) != 4:
        raise PreconditionError("expected four sector sizes and four ranks")
    if any(v <= 0 for v in m):
        raise PreconditionError("sector sizes must be positive")
    if any(v < 0 or v > mv for v, mv in zip(r, m)):
        raise PreconditionError("ranks must satisfy 0 <= r_P <= m_P")
    lhs = w[0] * w[1] * (m[2] * m[3] * r[0] * r[1])
    rhs = w[2] * w[3] * (m[0] * m[1] * r[2] * r[3])
    return lhs == rhs


def _cell_trivial_ranks(r) -> bool:
    return (
        (r[1] == 0 and r[3] == 0)  # below A
        or (r[0] == 0 and r[2] == 0)  # below A'
        or (r[2] == 0 and r[1] == 0)  # below B
        or (r[0] == 0 and r[3] == 0)  # below B'
    )


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class EnumerationResult(NamedTuple):
    checked: int
    satisfying: list  # [(profile, trivial)]
    nontrivial: list  # profiles only

    @property
    def n_satisfying(self):
        return len(self.satisfying)

    @property
    def n_nontrivial(self):
        return len(self.nontrivial)


def enumerate_commuting_tuples(weights, m, k_size: int, budget: int = 5_000_000) -> EnumerationResult:
    """Exhaustively enumerate commuting-partition rank profiles on a window.

    A profile assigns each of the k cells a rank per sector, with the ranks
    of each sector summing to that sector's size.  Every profile with a
    realizable partition appears (any block-rank split of each sector can be
    realized by orthogonal subprojections), so an empty nontrivial list is a
    complete verification that no nontrivial commuting partition of that
    size satisfies the screening-off condition on the window.
    """
    w = _coerce_exact_weights(weights)
    m = [int(v) for v in m]
    if k_size < 1:
        raise PreconditionError("partition size must be at least 1")
    count = 1
    for mv in m:
        count *= math.comb(mv + k_size - 1, k_size - 1)
    if count > budget:
        raise BudgetError(
            f"enumeration needs {count} rank profiles, over the budget of {budget}"
        )
    sector_splits = [list(_compositions(mv, k_size)) for mv in m]
    satisfying = []
    nontrivial = []
    checked = 0
    for combo in iter_product(*sector_splits):
        checked += 1
        cells = [tuple(combo[p][k] for p in range(4)) for k in range(k_size)]
        if all(exact_wccp_decision(w, m, cell) for cell in cells):
            trivial = all(_cell_trivial_ranks(cell) for cell in cells)
            satisfying.append((tuple(cells), trivial))
            if not trivial:
                nontrivial.append(tuple(cells))
    return EnumerationResult(checked, satisfying, nontrivial)


# -- the weight formula and the explicit family -----------------------------------


class WeightResult(NamedTuple):
    value: object
    within_range: bool


def screening_weight(p_ab, p_apbp, p_abp, p_apb) -> WeightResult:
    """The weight a subevent of AB must take to complete a screening-off pair.

    Returns (p_ab * p_apbp - p_abp * p_apb) / p_apbp together with whether it
    lies strictly between 0 and p_ab, which certifies a positive correlation."""
    zero = (
        p_apbp.is_zero if isinstance(p_apbp, ExactScalar) else p_apbp == 0
    )
    if zero:
        raise ZeroDivisionError("the A'B' sector has probability zero")
    value = (p_ab * p_apbp - p_abp * p_apb) / p_apbp
    within = bool(0 < value and value < p_ab)
    return WeightResult(value, within)


def common_cause_candidate(a1, a2, a3, exact: bool = False, tol: float = 1e-9) -> Operator:
    """The explicit noncommuting screening-off projection over sites (0, 1).

    C = (1 + a1 U_{1/2} + a2 U_1 + i a3 U_0 U_{1/2}) / 2 is a projection for
    every real unit vector (a1, a2, a3); the support lies in the common past
    of the two standard evolved events."""
    if exact:
        coeffs = [Fraction(v) if not isinstance(v, Fraction) else v for v in (a1, a2, a3)]
        if sum(c * c for c in coeffs) != 1:
            raise PreconditionError("exact candidates need a1^2 + a2^2 + a3^2 == 1")
        half = Fraction(1, 2)
        return Operator.from_terms(
            [
                (half, [], "+1"),
                (half * coeffs[0], ["1/2"], "+1"),
                (half * coeffs[1], ["1"], "+1"),
                (half * coeffs[2], ["0", "1/2"], "+i"),
            ],
            exact=True,
        )
    a1, a2, a3 = float(a1), float(a2), float(a3)
    if abs(a1 * a1 + a2 * a2 + a3 * a3 - 1.0) > tol:
        raise PreconditionError("candidate coefficients must satisfy a1^2+a2^2+a3^2 = 1")
    return Operator.from_terms(
        [
            (0.5, [], "+1"),
            (0.5 * a1, ["1/2"], "+1"),
            (0.5 * a2, ["1"], "+1"),
            (0.5 * a3, ["0", "1/2"], "+i"),
        ]
    )
