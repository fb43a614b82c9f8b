#!/usr/bin/env python3
"""Coefficient support patterns forced by weighted circle invariance.

For an invariant metric tensor the (i, j) entry can only carry monomials
z^alpha with m . alpha = m_i - m_j.  That single constraint produces a
strictly block-lower shape for the nonconstant part and pins down the
Jacobian structure of triangular resonant maps.  Only the combinatorics is
computed here; no analytic object is ever evaluated.
"""

from quasicirc import (
    WeightVector,
    admissible_exponents,
    check_sigma_jacobian_structure,
    random_sigma,
    tensor_block_pattern,
)

w = WeightVector((1, 2, 2))

print("Admissible exponents per entry, m =", w.m)
for i in range(1, w.n + 1):
    row = [admissible_exponents(w, i, j) for j in range(1, w.n + 1)]
    print(f"  row {i}: {row}")

pattern = tensor_block_pattern(w)
print("\nBlock pattern (True = block may be nonzero):")
for p, row in enumerate(pattern.may_be_nonzero, start=1):
    print(f"  block row {p}: {row}")

# below-diagonal blocks are not automatically reachable: with m = (2, 3) the
# required weighted degree 1 has no solutions at all
gap = tensor_block_pattern(WeightVector((2, 3)))
print("\nm = (2, 3) block pattern:", gap.may_be_nonzero)

# the Jacobian of any triangular resonant map obeys the same pattern
sigma = random_sigma(WeightVector((1, 2, 4)), seed=5)
report = check_sigma_jacobian_structure(sigma)
print("\nJacobian of a random sigma for m = (1, 2, 4):")
for i, row in enumerate(report.jacobian, start=1):
    print(f"  [{', '.join(str(entry) for entry in row)}]")
print("structure check passed:", report.ok)
