"""A faithful state that correlates two spacelike separated events.

Weighting the four sector projections AB, A'B', AB', A'B of two commuting
events reweights the trace into a faithful state.  Choosing the weights
(1/4, 1/4, 1/4 + pi/20, 1/4 - pi/20) makes the diagonal sector product
rational and the off-diagonal one irrational; the correlation comes out as
exactly pi^2/400.
"""

from fractions import Fraction

from isingccp import (
    DynamicsParams,
    Operator,
    apply_beta,
    build_lambda_state,
    correlation,
    parse_exact,
    sector_correlation,
)

half = Fraction(1, 2)
p = DynamicsParams("0", "0", 1, 1)


def event(site):
    base = Operator.from_terms([(half, [], "+1"), (half, [site], "+1")], exact=True)
    return apply_beta(p, base, 1)


a, b = event(0), event(1)
weights = {
    "AB": parse_exact("1/4"),
    "ApBp": parse_exact("1/4"),
    "ABp": parse_exact("1/4+pi/20"),
    "ApB": parse_exact("1/4-pi/20"),
}
state = build_lambda_state(a, b, weights)

print("phi(1)    =", state.evaluate(Operator.identity(True)))
print("phi(AB)   =", state.evaluate(state.sectors["AB"]))
print("phi(A)    =", state.evaluate(a))
print("phi(B)    =", state.evaluate(b))

corr = correlation(state)
print("\nphi(AB) - phi(A)phi(B) =", corr)
print("sector form w1*w2 - w3*w4 =", sector_correlation(state))
print("equals pi^2/400?", corr == parse_exact("1/400*pi^2"))
print("as float:", float(corr))
