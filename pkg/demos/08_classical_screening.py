"""Classical screening-off on a finite probability space.

The quantum conditions reduce to the classical ones on commuting events, so
the classical checker doubles as a sanity baseline: a hidden binary switch
with p(A|C) = p(B|C) = 4/5 and p(A|C') = p(B|C') = 1/5 produces a
correlation of 9/100 and screens it off exactly.
"""

from fractions import Fraction as F

from isingccp import ProbabilitySpace, classical_ccs_check

# atoms 0..3: C holds; atoms 4..7: C fails.  Within each block A and B are
# independent with the stated conditionals, ordered (AB, AB', A'B, A'B').
c_block = [F(1, 2) * x for x in (F(16, 25), F(4, 25), F(4, 25), F(1, 25))]
cp_block = [F(1, 2) * x for x in (F(1, 25), F(4, 25), F(4, 25), F(16, 25))]
space = ProbabilitySpace(c_block + cp_block)

a = {0, 1, 4, 5}
b = {0, 2, 4, 6}
c = {0, 1, 2, 3}

report = classical_ccs_check(space, a, b, [c, set(range(4, 8))])
print("correlation p(AB) - p(A)p(B) =", report.correlation)
print("screened off?", report.satisfied)
print("residuals:", [cell.residual for cell in report.cells])
print("statistical relevance of the cause:",
      report.extras["relevance_A"], report.extras["relevance_B"])
print("positive-relevance conditions hold?", report.extras["positive_relevance"])

trivial = classical_ccs_check(space, a, b, [a, set(range(8)) - a])
print("\npartition by A itself screens in any state; trivial?", trivial.trivial)
