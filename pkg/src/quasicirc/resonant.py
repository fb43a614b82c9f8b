"""Triangular resonant maps and their exact closed-form inversion.

A triangular resonant map for a weight vector m is sigma = id + g where each
nonlinear part g_i is a sum of monomials with exponent alpha in the i-th
resonance set and total degree |alpha| >= 2.  Those two conditions force
every variable appearing in g_i to carry strictly smaller weight than m_i,
which is what makes the closed-form inversion below work: the inverse is
again of the same shape and can be built one component at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    EmptyPool,
    NotNonlinear,
    NotResonant,
    ParseError,
    WeightMismatch,
)
from .linalg import as_fraction
from .poly import Polynomial, PolyMap
from .weights import (
    MultiIndex,
    WeightVector,
    resonance_set,
    weighted_degree,
)

#: Coefficient pool used by the random samplers unless the caller overrides it.
DEFAULT_POOL = (
    Fraction(-2),
    Fraction(-1),
    Fraction(-1, 2),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
)


def nonlinear_resonant_monomials(weights: WeightVector, i: int) -> Tuple[MultiIndex, ...]:
    """Exponents alpha in the i-th resonance set with |alpha| >= 2, lex order."""
    return tuple(alpha for alpha in resonance_set(weights, i) if sum(alpha) >= 2)


def _validate_part(weights: WeightVector, i: int, alpha: MultiIndex) -> None:
    if len(alpha) != weights.n:
        raise DimensionMismatch(
            f"exponent {alpha} has length {len(alpha)}, expected {weights.n}"
        )
    if weighted_degree(weights.m, alpha) != weights.m[i - 1]:
        raise NotResonant(
            f"exponent {alpha} has weighted degree "
            f"{weighted_degree(weights.m, alpha)}, component {i} needs {weights.m[i - 1]}"
        )
    if sum(alpha) < 2:
        raise NotNonlinear(f"exponent {alpha} has total degree {sum(alpha)} < 2")


@dataclass(frozen=True)
class TriangularResonantMap:
    """sigma = id + g with every g_i built from nonlinear resonant monomials.

    Validation is eager: constructing an instance re-checks every stored
    term, so there is no unchecked path to an invalid map.
    """

    weight: WeightVector
    g: tuple

    def __post_init__(self):
        g = tuple(self.g)
        if len(g) != self.weight.n:
            raise DimensionMismatch(
                f"need {self.weight.n} nonlinear parts, got {len(g)}"
            )
        for i, part in enumerate(g, start=1):
            if part.n != self.weight.n:
                raise DimensionMismatch(
                    f"component {i} lives in {part.n} variables, expected {self.weight.n}"
                )
            for alpha in part.terms:
                _validate_part(self.weight, i, alpha)
        object.__setattr__(self, "g", g)

    @property
    def n(self) -> int:
        return self.weight.n

    def as_poly_map(self) -> PolyMap:
        n = self.n
        return PolyMap(
            tuple(Polynomial.variable(n, i) + self.g[i - 1] for i in range(1, n + 1))
        )

    def is_identity(self) -> bool:
        return all(part.is_zero() for part in self.g)

    def inverse(self) -> "TriangularResonantMap":
        return invert_sigma(self)

    def compose(self, other: "TriangularResonantMap") -> "TriangularResonantMap":
        return compose_sigma(self, other)

    def coefficients(self) -> Dict:
        """All stored coefficients as a {(i, alpha): Fraction} map."""
        out = {}
        for i, part in enumerate(self.g, start=1):
            for alpha in sorted(part.terms):
                out[(i, alpha)] = part.terms[alpha]
        return out

    def to_json_dict(self) -> dict:
        """Serializable form: exponents comma-joined, coefficients 'p/q'."""
        g_obj = {}
        for i, part in enumerate(self.g, start=1):
            if part.is_zero():
                continue
            g_obj[str(i)] = {
                ",".join(str(a) for a in alpha): str(part.terms[alpha])
                for alpha in sorted(part.terms)
            }
        return {"weights": list(self.weight.m), "g": g_obj}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "TriangularResonantMap":
        try:
            raw_weights = data["weights"]
            raw_g = data.get("g", {})
            entries = tuple(int(w) for w in raw_weights)
            coeffs = {}
            for key, part in raw_g.items():
                i = int(key)
                for alpha_text, coeff_text in part.items():
                    alpha = tuple(int(a) for a in alpha_text.split(","))
                    coeffs[(i, alpha)] = coeff_text
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"malformed triangular map object: {exc}") from exc
        return make_sigma(WeightVector(entries), coeffs)

    def __str__(self) -> str:
        return str(self.as_poly_map())


def make_sigma(weights: WeightVector, coeffs: Mapping) -> TriangularResonantMap:
    """Build sigma = id + g from a {(i, alpha): coefficient} map.

    Every supplied exponent must be a nonlinear resonant monomial for its
    component; unsupplied coefficients are zero.
    """
    parts = [dict() for _ in range(weights.n)]
    for (i, alpha), coeff in coeffs.items():
        weights.check_index(i)
        alpha = tuple(int(a) for a in alpha)
        _validate_part(weights, i, alpha)
        coeff = as_fraction(coeff)
        if coeff:
            parts[i - 1][alpha] = coeff
    return TriangularResonantMap(
        weights, tuple(Polynomial(weights.n, part) for part in parts)
    )


def identity_sigma(weights: WeightVector) -> TriangularResonantMap:
    return make_sigma(weights, {})


def random_sigma(
    weights: WeightVector, seed: int, pool: Sequence = DEFAULT_POOL
) -> TriangularResonantMap:
    """Draw a random triangular resonant map, deterministically from the seed.

    Every admissible monomial receives an independent coefficient from the
    pool; the pool is deduplicated and sorted first, so passing a set is
    safe.  The same (weights, seed, pool) always yields the same map.
    """
    choices = tuple(sorted({as_fraction(x) for x in pool}))
    if not choices:
        raise EmptyPool("coefficient pool must be nonempty")
    rng = random.Random(seed)
    coeffs = {}
    for i in range(1, weights.n + 1):
        for alpha in nonlinear_resonant_monomials(weights, i):
            coeffs[(i, alpha)] = rng.choice(choices)
    return make_sigma(weights, coeffs)


def invert_sigma(sigma: TriangularResonantMap) -> TriangularResonantMap:
    """Exact compositional inverse, component by component.

    Writing the inverse as tau = id + h, the components satisfy

        h_i = -g_i(tau_1, ..., tau_{i-1}, 0, ..., 0),

    because g_i only involves variables of weight strictly below m_i and
    those are recovered by the already-built components.  The recursion needs
    no series truncation: every step is a finite polynomial substitution, and
    the result is again triangular resonant (the constructor re-checks).
    """
    weights = sigma.weight
    n = weights.n
    zero = Polynomial.zero(n)
    tau_components = []
    h_parts = []
    for i in range(1, n + 1):
        g_i = sigma.g[i - 1]
        # The recursion zeroes out slots i..n, so g_i must not touch them;
        # this re-derives the support restriction instead of trusting it.
        for alpha in g_i.terms:
            assert all(
                alpha[j] == 0 for j in range(n) if weights.m[j] >= weights.m[i - 1]
            ), f"component {i} uses a variable of weight >= {weights.m[i - 1]}"
        substitution = tau_components + [zero] * (n - len(tau_components))
        h_i = -g_i.substitute(substitution)
        h_parts.append(h_i)
        tau_components.append(Polynomial.variable(n, i) + h_i)
    return TriangularResonantMap(weights, tuple(h_parts))


def compose_sigma(
    outer: TriangularResonantMap, inner: TriangularResonantMap
) -> TriangularResonantMap:
    """outer(inner(z)), revalidated as a triangular resonant map.

    Closure holds because substituting components of weighted order m_j into
    an i-th resonant polynomial again yields weighted order m_i.
    """
    if outer.weight != inner.weight:
        raise WeightMismatch(
            f"weight vectors differ: {outer.weight.m} vs {inner.weight.m}"
        )
    n = outer.n
    composed = outer.as_poly_map().compose(inner.as_poly_map())
    parts = tuple(
        composed.components[i - 1] - Polynomial.variable(n, i) for i in range(1, n + 1)
    )
    return TriangularResonantMap(outer.weight, parts)
