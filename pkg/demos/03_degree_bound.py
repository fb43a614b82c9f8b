#!/usr/bin/env python3
"""The degree bound for conjugated linear maps, and its failure.

Conjugating an invertible linear map L by a triangular resonant sigma gives
an origin-fixing polynomial map with linear part L.  When L respects the
equal-weight blocks, the result has degree at most the resonance order and
every component stays resonant.  When L mixes blocks, the degree can climb
to mu^2, and a witness is easy to find.
"""

from quasicirc import (
    LinearMap,
    WeightVector,
    check_theorem_instance,
    conjugate,
    find_violation,
    make_sigma,
    quasi_resonance_estimate,
    solve_conjugacy,
)

w = WeightVector((1, 2))
sigma = make_sigma(w, {(2, (2, 0)): 1})  # (z1, z2 + z1^2)

# --- block-diagonal linear part: the bound holds -----------------------------

diag = LinearMap(((2, 0), (0, 3)))
report = check_theorem_instance(w, sigma, diag)
print("L = diag(2, 3)")
print("  conjugate:", report.result.components[0], "|", report.result.components[1])
print(f"  degree {report.degree} <= mu = {report.resonance_order}: {report.within_bound}")
print("  components resonant:", report.component_resonant)

# --- mixing the blocks breaks the bound --------------------------------------

shear = LinearMap(((1, 1), (0, 1)))  # z -> (z1 + z2, z2)
report = check_theorem_instance(w, sigma, shear)
print("\nL = (z1 + z2, z2)")
print(f"  block diagonal: {report.block_diagonal}")
print(f"  degree {report.degree} > mu = {report.resonance_order}")

# the search finds such witnesses on its own
witness = find_violation(w, shear, trials=8, seed=3)
print("  search found witness:", dict(witness.coefficients()))
print("  witness degree:", conjugate(witness, shear).total_degree())

# --- how large can the degree get? -------------------------------------------

print("\nSampled maximal degree (cap is mu^2)")
for raw in [(1, 2), (1, 1, 1), (2, 3), (1, 2, 3)]:
    estimate = quasi_resonance_estimate(WeightVector(raw), trials=16, seed=1)
    print(f"  m = {raw}: observed {estimate.observed_max}, cap {estimate.cap}")

# --- the inverse problem ------------------------------------------------------

# given only the conjugated map, recover a linearizing sigma exactly
f = conjugate(sigma, diag)
solution = solve_conjugacy(f, w)
print("\nsolve_conjugacy on (2 z1, 3 z2 - z1^2):")
print("  sigma:", dict(solution.sigma.coefficients()))
print("  linear part:", solution.linear.rows)
print("  residual is exactly zero:", solution.residual_zero)
