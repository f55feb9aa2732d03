"""mu(C2 * Cn) as the cycle grows, approaching the tree value 2.

C2 is a single edge. As n grows the cycle looks more like a line, and the
limiting factor Cinf has SAW series 2z/(1-z). That product is the 3-regular
tree, and its root is found exactly.
"""

from connective import (
    Polynomial,
    build_complete,
    build_cycle,
    connective_constant,
    factor_genfun,
    genfun_from_rational,
)

edge = factor_genfun(build_complete(2))

print(" n   mu(C2*Cn)")
for n in range(3, 11):
    res = connective_constant([edge, factor_genfun(build_cycle(n))])
    print(f"{n:>2}   {res.mu:.5f}")

line = genfun_from_rational(Polynomial([0, 2]), Polynomial([1, -1]), "Cinf")
res = connective_constant([edge, line])
print(f"inf   {res.mu_lo} (interval width {res.z_star.width}, exact={res.z_star.exact})")
