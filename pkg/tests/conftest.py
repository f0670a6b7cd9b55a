"""Shared fixtures: the standard evolved event pair and its states."""

from fractions import Fraction

import numpy as np
import pytest

from isingccp import (
    DynamicsParams,
    Operator,
    apply_beta,
    build_lambda_state,
    parse_exact,
)

HALF = Fraction(1, 2)


def half_sum(site, exact=False):
    """(1 + U_site) / 2, a projection on the Cauchy surface."""
    return Operator.from_terms([(HALF, [], "+1"), (HALF, [site], "+1")], exact=exact)


def random_operator(rng, lo=0, hi=8, n_terms=5, exact=False):
    """A random float operator with sites drawn from doubled range [lo, hi)."""
    terms = []
    for _ in range(n_terms):
        k = rng.integers(lo, hi, size=int(rng.integers(1, 4)))
        sites = sorted(set(Fraction(int(v), 2) for v in k))
        terms.append((complex(rng.normal(), rng.normal()), sites, "+1"))
    return Operator.from_terms(terms, exact=exact)


@pytest.fixture(scope="session")
def std_params():
    return DynamicsParams("0", "0", 1, 1)


@pytest.fixture(scope="session")
def events_exact(std_params):
    a = apply_beta(std_params, half_sum(0, exact=True), 1)
    b = apply_beta(std_params, half_sum(1, exact=True), 1)
    return a, b


@pytest.fixture(scope="session")
def events_float(std_params):
    a = apply_beta(std_params, half_sum(0), 1)
    b = apply_beta(std_params, half_sum(1), 1)
    return a, b


@pytest.fixture(scope="session")
def pi_offset_weights():
    """The correlating weights (1/4, 1/4, 1/4 + pi/20, 1/4 - pi/20)."""
    return {
        "AB": parse_exact("1/4"),
        "ApBp": parse_exact("1/4"),
        "ABp": parse_exact("1/4+pi/20"),
        "ApB": parse_exact("1/4-pi/20"),
    }


@pytest.fixture(scope="session")
def state_exact(events_exact, pi_offset_weights):
    return build_lambda_state(*events_exact, pi_offset_weights)


@pytest.fixture(scope="session")
def state_float(events_float):
    w = {
        "AB": 0.25,
        "ApBp": 0.25,
        "ABp": 0.25 + np.pi / 20,
        "ApB": 0.25 - np.pi / 20,
    }
    return build_lambda_state(*events_float, w)


@pytest.fixture(scope="session")
def trace_state_float(events_float):
    return build_lambda_state(*events_float, dict.fromkeys(("AB", "ApBp", "ABp", "ApB"), 0.25))
