"""Independent oracles and shared fixtures for the test suite.

Everything here recomputes expected values by a different route than the
library (itertools box scans, symbolic substitution, degree-by-degree series
inversion) so the tests never check an implementation against itself.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd

from quasicirc import Polynomial, PolyMap, WeightVector

# the fixed weight-vector set used by map-level property and acceptance tests
WEIGHT_SET = (
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 1, 2),
    (1, 2, 2),
    (1, 2, 3),
    (1, 2, 4),
    (1, 2, 6),
    (1, 2, 3, 4),
)


def all_weight_tuples(max_n: int, max_entry: int):
    """Every valid weight tuple with n <= max_n and entries <= max_entry."""
    out = []
    for n in range(1, max_n + 1):
        for m in combinations_with_replacement(range(1, max_entry + 1), n):
            if gcd(*m) == 1:
                out.append(m)
    return out


def box_resonance_set(weights, i: int):
    """Brute-force oracle: scan the full box prod_j {0..m_i // m_j}."""
    target = weights[i - 1]
    ranges = [range(target // w + 1) for w in weights]
    return {
        alpha
        for alpha in product(*ranges)
        if sum(w * a for w, a in zip(weights, alpha)) == target
    }


def box_weighted_exponents(weights, target: int):
    """Brute-force oracle for {alpha : m . alpha == target}."""
    if target < 0:
        return set()
    ranges = [range(target // w + 1) for w in weights]
    return {
        alpha
        for alpha in product(*ranges)
        if sum(w * a for w, a in zip(weights, alpha)) == target
    }


def substitution_homogeneity(p: Polynomial, weights: WeightVector, k: int) -> bool:
    """Homogeneity via symbolic substitution in an extra scale variable.

    Embeds P(t^{m_1} z_1, ..., t^{m_n} z_n) and t^k P(z) into n+1 variables
    and compares them exactly.
    """
    scaled = Polynomial(
        p.n + 1,
        {
            alpha + (sum(w * a for w, a in zip(weights.m, alpha)),): c
            for alpha, c in p.terms.items()
        },
    )
    reference = Polynomial(p.n + 1, {alpha + (k,): c for alpha, c in p.terms.items()})
    return scaled == reference


def truncate_map(f: PolyMap, degree: int) -> PolyMap:
    return PolyMap(
        tuple(
            Polynomial(p.n, {a: c for a, c in p.terms.items() if sum(a) <= degree})
            for p in f.components
        )
    )


def series_inverse(sigma, max_degree: int) -> PolyMap:
    """Compositional inverse of sigma = id + g by degree-by-degree iteration.

    Iterates tau <- id - g(tau) with truncation at increasing total degree;
    because g starts in degree 2, each pass fixes one more degree level.
    Independent of the component-wise closed-form recursion.
    """
    n = sigma.n
    identity = PolyMap.identity(n)
    tau = identity
    for degree in range(2, max_degree + 1):
        substituted = [part.substitute(tau.components) for part in sigma.g]
        tau = truncate_map(
            PolyMap(
                tuple(
                    identity.components[i] - substituted[i] for i in range(n)
                )
            ),
            degree,
        )
    return tau


def random_polynomial(rng: random.Random, n: int, max_degree: int = 3, max_terms: int = 5) -> Polynomial:
    """A small random polynomial for algebraic-law checks."""
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        alpha = tuple(rng.randrange(max_degree + 1) for _ in range(n))
        terms[alpha] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return Polynomial(n, terms)


def random_poly_map(
    rng: random.Random, n: int, max_degree: int = 2, max_terms: int = 3
) -> PolyMap:
    return PolyMap(
        tuple(
            random_polynomial(rng, n, max_degree=max_degree, max_terms=max_terms)
            for _ in range(n)
        )
    )
