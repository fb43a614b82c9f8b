#!/usr/bin/env python3
"""Triangular resonant maps: construction, exact inversion, group structure.

These are the maps sigma = id + g whose nonlinear parts use only resonant
monomials of total degree at least two.  They form a group under
composition, and the inverse is computed in closed form, component by
component, with no series truncation.
"""

import json
from fractions import Fraction

from quasicirc import (
    WeightVector,
    compose_sigma,
    invert_sigma,
    make_sigma,
    nonlinear_resonant_monomials,
    random_sigma,
)

w = WeightVector((1, 2, 4))

# which coefficients exist at all is pure combinatorics
print("Admissible nonlinear monomials for m =", w.m)
for i in range(1, w.n + 1):
    print(f"  component {i}: {nonlinear_resonant_monomials(w, i)}")

# build sigma = (z1, z2 + z1^2, z3 + z2^2) and invert it
sigma = make_sigma(w, {(2, (2, 0, 0)): 1, (3, (0, 2, 0)): 1})
tau = invert_sigma(sigma)
print("\nsigma:")
print("  " + str(sigma).replace("\n", "\n  "))
print("inverse:")
print("  " + str(tau).replace("\n", "\n  "))
print("sigma . inverse is the identity:", compose_sigma(sigma, tau).is_identity())
print("inverting twice returns sigma:", invert_sigma(tau) == sigma)

# group structure: composition revalidates the triangular resonant shape
square = compose_sigma(sigma, sigma)
print("\nsigma composed with itself:")
print("  " + str(square).replace("\n", "\n  "))

# deterministic random sampling, e.g. for property tests
a = random_sigma(w, seed=42)
b = random_sigma(w, seed=42, pool=(Fraction(1, 2), 1, 2))
print("\nrandom_sigma(seed=42) coefficients:", dict(a.coefficients()))
print("same seed, custom pool:", dict(b.coefficients()))

# serialization round trip (the same JSON shape the CLI emits)
payload = json.dumps(sigma.to_json_dict())
print("\nserialized:", payload)
from quasicirc import TriangularResonantMap

print("round trip ok:", TriangularResonantMap.from_json_dict(json.loads(payload)) == sigma)
