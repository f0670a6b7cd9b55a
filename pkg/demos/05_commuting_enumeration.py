"""Why no commuting partition can screen off the pi-weighted correlation.

A cell commuting with both events is block diagonal across the four
sectors, so only its integer block ranks enter the screening-off equation.
With the weights (1/4, 1/4, 1/4 + pi/20, 1/4 - pi/20) one side of the
equation is rational and the other irrational, so both must vanish, which
forces the cell below one of A, A', B, B'.  Enumerating every rank profile
makes that a finite, complete check on a window.
"""

from fractions import Fraction

from isingccp import enumerate_commuting_tuples, exact_wccp_decision, parse_exact

weights = [parse_exact(t) for t in ("1/4", "1/4", "1/4+pi/20", "1/4-pi/20")]

print("single-cell decisions with sector sizes (4,4,4,4):")
for ranks in [(2, 0, 0, 0), (1, 1, 1, 1), (0, 2, 3, 0)]:
    print(f"  ranks {ranks}: screening equation holds? "
          f"{exact_wccp_decision(weights, (4, 4, 4, 4), ranks)}")

for size in (4, 8):
    result = enumerate_commuting_tuples(weights, [size] * 4, 2)
    print(f"\nsector size {size}: checked {result.checked} rank profiles, "
          f"{result.n_satisfying} satisfy, {result.n_nontrivial} nontrivial")

print("\nuniform weights for contrast (uncorrelated state):")
uniform = [Fraction(1, 4)] * 4
result = enumerate_commuting_tuples(uniform, (4, 4, 4, 4), 2)
print(f"  {result.n_satisfying} satisfying, {result.n_nontrivial} nontrivial "
      f"(e.g. {result.nontrivial[0]})")
