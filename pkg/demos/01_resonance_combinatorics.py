#!/usr/bin/env python3
"""Tour of the resonance combinatorics layer.

A weight vector m = (m_1 <= ... <= m_n) with gcd 1 grades monomials z^alpha
by m . alpha.  The i-th resonance set collects the exponents of weighted
degree exactly m_i; its largest total degree is the i-th resonance order.
"""

from quasicirc import (
    NotCoprime,
    Unsorted,
    WeightVector,
    block_partition,
    canonicalize_weights,
    resonance_profile,
    resonance_set,
)

# --- validation: non-canonical input is rejected, not silently fixed --------

print("Validation")
for raw in [(1, 2, 6), (2, 4), (3, 1)]:
    try:
        w = WeightVector(raw)
        print(f"  {raw}: ok")
    except (NotCoprime, Unsorted) as exc:
        print(f"  {raw}: rejected ({type(exc).__name__}: {exc})")

# when you *want* normalization, ask for it explicitly and keep the permutation
w, order = canonicalize_weights((4, 2, 6))
print(f"  canonicalize (4, 2, 6) -> {w.m}, original positions {order}")

# --- block partition: maximal runs of equal weight ---------------------------

print("\nBlock partitions")
for raw in [(1, 1), (1, 2), (1, 2, 2, 3)]:
    part = block_partition(WeightVector(raw))
    print(f"  {raw}: boundaries {part.boundaries}, blocks {part.blocks()}")

# --- resonance sets and orders -----------------------------------------------

print("\nResonance sets for m = (1, 2, 3)")
w = WeightVector((1, 2, 3))
for i in range(1, w.n + 1):
    exponents = resonance_set(w, i)
    print(f"  E_{i} (weighted degree {w.m[i - 1]}): {exponents}")

profile = resonance_profile(w)
print(f"  orders per component: {profile.orders}, resonance order mu = {profile.order}")

# each order is capped by its weight, and equal weights force mu = 1
print("\nOrders stay below the weights")
for raw in [(1, 2, 6), (2, 3), (1, 1, 1), (2, 3, 4, 6)]:
    profile = resonance_profile(WeightVector(raw))
    caps = all(o <= m for o, m in zip(profile.orders, raw))
    print(f"  m = {raw}: orders {profile.orders}, mu = {profile.order}, capped: {caps}")
