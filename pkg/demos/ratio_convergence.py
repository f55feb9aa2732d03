"""How fast sigma_n mu^-n settles to the amplitude.

The walk counts grow like A * mu^n with no power-law correction. The ratio
approaches A quickly but wobbles, because the next roots of D~ form a
complex pair. The wobble shrinks geometrically.
"""

from fractions import Fraction

from connective import build_complete, factor_genfun
from connective.asymptotics import convergence_report

for sizes in ((2, 3), (2, 3, 4), (2, 2, 2)):
    factors = [factor_genfun(build_complete(n)) for n in sizes]
    label = "*".join(f"K{n}" for n in sizes)
    # a loose z* would swamp the tiny late gaps
    rep = convergence_report(factors, 30, tol=Fraction(1, 10**40))
    print(f"{label}: mu = {rep.mu:.5f}, A = {rep.amplitude:.5f}, converged = {rep.converged}")
    for n, gap in rep.gaps()[10::4]:
        print(f"   n={n:>2}  |ratio - A| = {gap:.2e}")
