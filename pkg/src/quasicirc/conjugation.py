"""Conjugation of linear maps by triangular resonant coordinates.

Given sigma = id + g and an invertible linear map L, the conjugate
sigma^{-1} . L . sigma is an origin-fixing polynomial map with linear part
L.  When L is block-diagonal for the weight partition, the conjugate has
total degree at most the resonance order and each component is resonant;
when L mixes blocks, the degree can exceed the bound, and `find_violation`
searches for an explicit witness.  `solve_conjugacy` goes the other way: it
recovers (sigma, J) with sigma . f = J . sigma from f alone by solving an
exact linear system for the finitely many admissible coefficients of g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    BlockDiagonalInput,
    DimensionMismatch,
    EmptyPool,
    NoResonantConjugacy,
    SingularLinearMap,
    SingularLinearPart,
    WeightMismatch,
)
from .linalg import LinearMap, as_fraction, solve_exact
from .poly import Polynomial, PolyMap
from .resonant import (
    DEFAULT_POOL,
    TriangularResonantMap,
    invert_sigma,
    make_sigma,
    nonlinear_resonant_monomials,
    random_sigma,
)
from .weights import BlockPartition, WeightVector, block_partition, resonance_profile


def _subseed(seed: int, index: int) -> int:
    # per-trial seed, a pure function of (seed, index) so trial streams are
    # prefix-stable and order-independent
    return (seed * 1_000_003 + index) & ((1 << 63) - 1)


def is_block_diagonal(linear: LinearMap, partition: BlockPartition) -> bool:
    """True iff every entry outside the partition's diagonal blocks is zero."""
    if linear.n != partition.n:
        raise DimensionMismatch(
            f"matrix is {linear.n}x{linear.n}, partition covers {partition.n}"
        )
    for i in range(1, linear.n + 1):
        for j in range(1, linear.n + 1):
            if partition.block_of(i) != partition.block_of(j) and linear.rows[i - 1][j - 1]:
                return False
    return True


def conjugate(sigma: TriangularResonantMap, linear: LinearMap) -> PolyMap:
    """The exact conjugate sigma^{-1} . L . sigma as a polynomial map."""
    if linear.n != sigma.n:
        raise DimensionMismatch(
            f"matrix is {linear.n}x{linear.n}, map has dimension {sigma.n}"
        )
    if linear.determinant() == 0:
        raise SingularLinearMap("conjugation needs an invertible linear map")
    tau = invert_sigma(sigma).as_poly_map()
    inner = PolyMap.from_linear(linear).compose(sigma.as_poly_map())
    return tau.compose(inner)


@dataclass(frozen=True)
class ConjugationReport:
    """Everything the degree-bound check learns about one conjugation."""

    result: PolyMap
    degree: int
    resonance_order: int
    within_bound: bool
    block_diagonal: bool
    component_resonant: tuple


def check_theorem_instance(
    weights: WeightVector, sigma: TriangularResonantMap, linear: LinearMap
) -> ConjugationReport:
    """Conjugate and report degree, block structure, and component resonance.

    A block-diagonal linear map always produces within_bound=True with every
    component resonant; a non-block map may or may not exceed the bound.
    """
    if sigma.weight != weights:
        raise WeightMismatch(
            f"weight vectors differ: {weights.m} vs {sigma.weight.m}"
        )
    result = conjugate(sigma, linear)
    profile = resonance_profile(weights)
    degree = result.total_degree()
    flags = tuple(
        result.components[i - 1].is_i_resonant(weights, i)
        for i in range(1, weights.n + 1)
    )
    return ConjugationReport(
        result=result,
        degree=degree,
        resonance_order=profile.order,
        within_bound=degree <= profile.order,
        block_diagonal=is_block_diagonal(linear, block_partition(weights)),
        component_resonant=flags,
    )


def find_violation(
    weights: WeightVector,
    linear: LinearMap,
    trials: int,
    seed: int,
    pool: Sequence = DEFAULT_POOL,
) -> Optional[TriangularResonantMap]:
    """Search for sigma whose conjugate with L exceeds the resonance order.

    Only meaningful for non-block-diagonal L (for block-diagonal input the
    bound always holds, so the call is rejected).  Returns the first witness
    in a deterministic seeded stream, or None after the trial budget; absence
    of a witness is not a proof that none exists.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if linear.n != weights.n:
        raise DimensionMismatch(
            f"matrix is {linear.n}x{linear.n}, weights have dimension {weights.n}"
        )
    if linear.determinant() == 0:
        raise SingularLinearMap("violation search needs an invertible linear map")
    if is_block_diagonal(linear, block_partition(weights)):
        raise BlockDiagonalInput(
            "block-diagonal maps never exceed the resonance order"
        )
    mu = resonance_profile(weights).order
    for trial in range(trials):
        candidate = random_sigma(weights, _subseed(seed, trial), pool)
        if conjugate(candidate, linear).total_degree() > mu:
            return candidate
    return None


@dataclass(frozen=True)
class QuasiResonanceEstimate:
    """Max conjugate degree observed over a sampled (sigma, L) family.

    observed_max is a lower bound for the true maximal degree; cap is the
    a-priori upper bound mu^2 (degree of the inverse times degree of the
    map, both at most the resonance order).
    """

    observed_max: int
    cap: int
    trials: int


def quasi_resonance_estimate(
    weights: WeightVector,
    trials: int,
    seed: int,
    pool: Sequence = DEFAULT_POOL,
) -> QuasiResonanceEstimate:
    """Estimate the maximal conjugate degree by seeded random sampling."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    mu = resonance_profile(weights).order
    observed = 0
    for trial in range(trials):
        sigma = random_sigma(weights, _subseed(seed, 2 * trial), pool)
        linear = random_linear_map(weights.n, _subseed(seed, 2 * trial + 1), pool)
        observed = max(observed, conjugate(sigma, linear).total_degree())
    return QuasiResonanceEstimate(observed_max=observed, cap=mu * mu, trials=trials)


def random_linear_map(
    n: int, seed: int, pool: Sequence = DEFAULT_POOL, _attempts: int = 200
) -> LinearMap:
    """A random invertible n-by-n matrix with entries from the pool.

    Deterministic in (n, seed, pool); resamples whole matrices until the
    determinant is nonzero.
    """
    choices = tuple(sorted({as_fraction(x) for x in pool}))
    if not choices:
        raise EmptyPool("coefficient pool must be nonempty")
    rng = random.Random(seed)
    for _ in range(_attempts):
        candidate = LinearMap(
            tuple(tuple(rng.choice(choices) for _ in range(n)) for _ in range(n))
        )
        if candidate.determinant() != 0:
            return candidate
    raise RuntimeError(f"no invertible matrix found in {_attempts} draws from {choices}")


def random_block_diagonal_map(
    weights: WeightVector, seed: int, pool: Sequence = DEFAULT_POOL
) -> LinearMap:
    """A random invertible block-diagonal matrix for the weight partition."""
    choices = tuple(sorted({as_fraction(x) for x in pool}))
    if not choices:
        raise EmptyPool("coefficient pool must be nonempty")
    rng = random.Random(seed)
    n = weights.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for start, end in block_partition(weights).blocks():
        size = end - start + 1
        while True:
            block = LinearMap(
                tuple(tuple(rng.choice(choices) for _ in range(size)) for _ in range(size))
            )
            if block.determinant() != 0:
                break
        for bi in range(size):
            for bj in range(size):
                rows[start - 1 + bi][start - 1 + bj] = block.rows[bi][bj]
    return LinearMap(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class ConjugacySolution:
    """A linearizing pair: sigma . f = linear . sigma, verified exactly.

    When the underlying linear system is underdetermined, free coefficients
    are set to zero, so sigma is one valid choice among a
    free_parameters-dimensional family.
    """

    sigma: TriangularResonantMap
    linear: LinearMap
    residual_zero: bool
    free_parameters: int


def solve_conjugacy(f: PolyMap, weights: WeightVector) -> ConjugacySolution:
    """Recover (sigma, J) with sigma . f = J . sigma, or prove none exists.

    J is forced to be the linear part of f.  The unknowns are the nonlinear
    resonant coefficients of g (sigma = id + g); both sides of the equation
    are affine in them -- the left through g_i(f), the right through J g --
    so matching coefficients monomial by monomial gives an exact linear
    system.  Inconsistency means f is not a conjugate of its linear part by
    any triangular resonant map.
    """
    if f.n != weights.n:
        raise DimensionMismatch(
            f"map has dimension {f.n}, weights have dimension {weights.n}"
        )
    n = weights.n
    j_matrix = f.linear_part()
    if j_matrix.determinant() == 0:
        raise SingularLinearPart("the linear part of the map is singular")

    unknowns: List[Tuple[int, tuple]] = [
        (i, alpha)
        for i in range(1, n + 1)
        for alpha in nonlinear_resonant_monomials(weights, i)
    ]
    j_poly = PolyMap.from_linear(j_matrix)
    # affine expression per component: base_i + sum_k column[i][k] * c_k == 0
    bases = [
        f.components[i - 1] - j_poly.components[i - 1] for i in range(1, n + 1)
    ]
    zero = Polynomial.zero(n)
    columns = [[zero] * len(unknowns) for _ in range(n)]
    power_cache: Dict = {}
    for k, (comp, alpha) in enumerate(unknowns):
        monomial = Polynomial.monomial(n, alpha)
        f_alpha = monomial.substitute(f.components, _cache=power_cache)
        columns[comp - 1][k] = columns[comp - 1][k] + f_alpha
        for i in range(1, n + 1):
            entry = j_matrix.rows[i - 1][comp - 1]
            if entry:
                columns[i - 1][k] = columns[i - 1][k] - entry * monomial

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for i in range(n):
        support = set(bases[i].terms)
        for col in columns[i]:
            support.update(col.terms)
        for beta in sorted(support):
            rows.append([col.coefficient(beta) for col in columns[i]])
            rhs.append(-bases[i].coefficient(beta))

    solved = solve_exact(rows, rhs, len(unknowns))
    if solved is None:
        raise NoResonantConjugacy(
            "no triangular resonant map conjugates this map to its linear part"
        )
    solution, free_count = solved
    sigma = make_sigma(
        weights,
        {key: value for key, value in zip(unknowns, solution) if value},
    )
    sigma_map = sigma.as_poly_map()
    residual_zero = sigma_map.compose(f) == j_poly.compose(sigma_map)
    return ConjugacySolution(
        sigma=sigma,
        linear=j_matrix,
        residual_zero=residual_zero,
        free_parameters=free_count,
    )
