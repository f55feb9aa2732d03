"""K2 * K3 from graphs to a certified connective constant.

Run: python demos/walkthrough_k2_k3.py
"""

from connective import (
    build_complete,
    build_D,
    connective_constant,
    expand_M,
    factor_genfun,
    factor_saw_counts,
    free_product_saw_counts,
)

k2, k3 = build_complete(2), build_complete(3)

# Each factor contributes a polynomial: its SAW counts from the root.
for g in (k2, k3):
    print(f"{g}: SAW counts {factor_saw_counts(g).counts}, M = {factor_genfun(g).numerator}")

factors = [factor_genfun(k2), factor_genfun(k3)]

# Clearing denominators gives one polynomial whose least positive root is z*.
D = build_D(factors)
print(f"\nD~(z) = {D}")

# The series of the product, checked against a direct walk count.
series = expand_M(factors, 10).as_ints()
brute = free_product_saw_counts([k2, k3], 10).counts
print(f"series     {series}")
print(f"brute force {list(brute)}")
assert tuple(series) == brute

res = connective_constant(factors)
print(f"\nz* in [{float(res.z_star.lo):.15f}, {float(res.z_star.hi):.15f}]")
print(f"mu = {res.mu:.6f}  amplitude A = {res.amplitude.value:.5f}")
for check in res.diagnostics:
    print(f"  {'ok ' if check.passed else 'BAD'} {check.name}: {check.detail}")
