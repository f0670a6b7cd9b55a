"""The causal unit time step and its locality.

The evolution is parametrized by two angles and two signs.  A generator's
image stays inside its three-cone causal neighbourhood, so evolving
operators can never signal into spacelike separated regions.
"""

from fractions import Fraction

import numpy as np

from isingccp import (
    DynamicsParams,
    Operator,
    apply_beta,
    beta_generator_image,
    check_primitive_causality,
    commutes,
    localization,
    spacelike_separated,
    support_interval,
)

half = Fraction(1, 2)

p = DynamicsParams("0", "0", 1, 1)
print("theta1 = 0:    beta(U(0)) =", beta_generator_image(p, 0, exact=True))
p_fix = DynamicsParams("pi/2", "0", 1, 1)
print("theta1 = pi/2: beta(U(0)) =", beta_generator_image(p_fix, 0, exact=True))

generic = DynamicsParams(0.4, -0.9, 1, -1)
img = beta_generator_image(generic, half)
print(f"\ngeneric angles: support of beta(U(1/2)) = {support_interval(img)}")
print("stays within one site each way?", check_primitive_causality(generic, half))

# (1 + U_0)/2 pushed one step forward is localized in the cone at (1, 0)
a = apply_beta(p, Operator.from_terms(
    [(Fraction(1, 2), [], "+1"), (Fraction(1, 2), [0], "+1")], exact=True), 1)
print("\nevolved event:", a)
print("localized in:", localization(a))

# Einstein causality after evolution: spacelike supports still commute
rng = np.random.default_rng(1)
x = apply_beta(generic, Operator.generator(0), 1)
y = apply_beta(generic, Operator.generator(4), 1)
print("\nspacelike after one step?", spacelike_separated(localization(x), localization(y)))
print("and they commute?        ", commutes(x, y, 1e-12))
