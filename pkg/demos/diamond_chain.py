"""An infinite factor given by a rational generating function.

The diamond chain (an infinite strip of crossing squares) has SAW series
(4z + 4z^2 + 4z^3) / (1 - 2z^2). Finite ladder segments agree with it up to
length 2k; here we watch that, then combine the infinite chain with K4.
"""

from connective import (
    Polynomial,
    TruncatedSeries,
    build_complete,
    build_ladder_segment,
    connective_constant,
    factor_genfun,
    factor_saw_counts,
    genfun_from_rational,
)

num, den = Polynomial([0, 4, 4, 4]), Polynomial([1, 0, -2])
chain = TruncatedSeries.from_rational(num, den, 8).as_ints()
print(f"rational series   {chain}")
for k in (1, 2, 3, 4):
    counts = factor_saw_counts(build_ladder_segment(k)).counts
    print(f"ladder{k} (k={k})   {list(counts[: 2 * k + 1])}")

g1 = genfun_from_rational(num, den, "G1")
print(f"\npole of G1 above {float(g1.pole_radius_lower_bound):.6f} (1/sqrt 2)")

res = connective_constant([g1, factor_genfun(build_complete(4))])
print(f"G1*K4: z* = {float(res.z_star.mid):.6f}, mu = {res.mu:.5f}")
print(f"witness polynomial: {res.witness_poly}")
print("certified" if res.certified else "NOT certified")
