import pytest

from quasicirc import (
    BlockDiagonalInput,
    DimensionMismatch,
    DoesNotFixOrigin,
    LinearMap,
    NoResonantConjugacy,
    Polynomial,
    PolyMap,
    SingularLinearMap,
    SingularLinearPart,
    WeightMismatch,
    WeightVector,
    block_partition,
    check_theorem_instance,
    conjugate,
    find_violation,
    identity_sigma,
    is_block_diagonal,
    make_sigma,
    parse_poly_map,
    quasi_resonance_estimate,
    random_block_diagonal_map,
    random_linear_map,
    random_sigma,
    resonance_profile,
    solve_conjugacy,
)
from oracles import WEIGHT_SET


def var(n, j):
    return Polynomial.variable(n, j)


W12 = WeightVector((1, 2))
SIGMA12 = make_sigma(W12, {(2, (2, 0)): 1})
OFFBLOCK = LinearMap(((1, 1), (0, 1)))  # z -> (z1 + z2, z2)


# block diagonality


def test_block_diagonal_examples():
    assert is_block_diagonal(LinearMap(((2, 0), (0, 3))), block_partition(W12))
    assert not is_block_diagonal(OFFBLOCK, block_partition(W12))
    w = WeightVector((1, 1, 2))
    matrix = LinearMap(((1, 2, 0), (3, 4, 0), (0, 0, 5)))
    assert is_block_diagonal(matrix, block_partition(w))


def test_block_diagonal_dimension_check():
    with pytest.raises(DimensionMismatch):
        is_block_diagonal(LinearMap.identity(3), block_partition(W12))


# linear map plumbing


def test_linear_map_algebra():
    a = LinearMap(((1, 1), (0, 1)))
    b = LinearMap(((2, 0), (0, 3)))
    assert (a @ b).rows == ((2, 3), (0, 3))
    assert a.determinant() == 1
    assert b.determinant() == 6
    assert a.inverse() @ a == LinearMap.identity(2)
    assert LinearMap(((1, 2), (2, 4))).determinant() == 0
    with pytest.raises(SingularLinearMap):
        LinearMap(((1, 2), (2, 4))).inverse()


def test_linear_map_rejects_floats_and_nonsquare():
    with pytest.raises(TypeError):
        LinearMap(((0.5, 0), (0, 1)))
    with pytest.raises(ValueError):
        LinearMap(((1, 2, 3), (4, 5, 6)))


# conjugation


def test_conjugate_by_identity_linear():
    assert conjugate(SIGMA12, LinearMap.identity(2)) == PolyMap.identity(2)


def test_conjugate_block_diagonal_example():
    f = conjugate(SIGMA12, LinearMap(((2, 0), (0, 3))))
    assert f == PolyMap((2 * var(2, 1), 3 * var(2, 2) - var(2, 1) ** 2))
    assert f.total_degree() == 2


def test_conjugate_offblock_example():
    f = conjugate(SIGMA12, OFFBLOCK)
    first = var(2, 1) + var(2, 2) + var(2, 1) ** 2
    second = var(2, 2) + var(2, 1) ** 2 - first**2
    assert f == PolyMap((first, second))
    assert f.total_degree() == 4


def test_conjugate_linear_part_is_input():
    for seed in range(5):
        w = WeightVector((1, 2, 3))
        s = random_sigma(w, seed)
        linear = random_linear_map(3, seed + 50)
        assert conjugate(s, linear).linear_part() == linear


def test_conjugate_rejects_singular_and_mismatched():
    with pytest.raises(SingularLinearMap):
        conjugate(SIGMA12, LinearMap(((1, 1), (1, 1))))
    with pytest.raises(DimensionMismatch):
        conjugate(SIGMA12, LinearMap.identity(3))


def test_theorem_instance_block_diagonal():
    report = check_theorem_instance(W12, SIGMA12, LinearMap(((2, 0), (0, 3))))
    assert report.degree == 2
    assert report.resonance_order == 2
    assert report.within_bound
    assert report.block_diagonal
    assert report.component_resonant == (True, True)


def test_theorem_instance_offblock():
    report = check_theorem_instance(W12, SIGMA12, OFFBLOCK)
    assert report.degree == 4
    assert not report.within_bound
    assert not report.block_diagonal


def test_theorem_instance_identity_sigma():
    report = check_theorem_instance(W12, identity_sigma(W12), OFFBLOCK)
    assert report.degree == 1
    assert report.within_bound


def test_theorem_instance_weight_mismatch():
    with pytest.raises(WeightMismatch):
        check_theorem_instance(WeightVector((1, 3)), SIGMA12, OFFBLOCK)


def test_forward_direction_sample():
    # block-diagonal linear part: degree within bound, all components resonant
    for m in WEIGHT_SET:
        w = WeightVector(m)
        mu = resonance_profile(w).order
        for seed in range(20):
            s = random_sigma(w, seed)
            linear = random_block_diagonal_map(w, seed + 999)
            report = check_theorem_instance(w, s, linear)
            assert report.block_diagonal
            assert report.degree <= mu
            assert all(report.component_resonant)


def test_conjugation_is_multiplicative():
    # conjugates have degree up to mu^2 and their composition up to mu^4,
    # so keep the sampled weight vectors small
    for m in ((1, 2), (1, 1, 2)):
        w = WeightVector(m)
        for seed in range(5):
            s = random_sigma(w, seed)
            a = random_linear_map(w.n, seed + 10)
            b = random_linear_map(w.n, seed + 20)
            assert conjugate(s, a @ b) == conjugate(s, a).compose(conjugate(s, b))
    w = WeightVector((1, 2, 3))
    s = random_sigma(w, 0)
    a = random_linear_map(3, 10)
    b = random_linear_map(3, 20)
    assert conjugate(s, a @ b) == conjugate(s, a).compose(conjugate(s, b))


def test_conjugation_respects_inverses():
    for m in ((1, 2), (1, 1, 2)):
        w = WeightVector(m)
        for seed in range(5):
            s = random_sigma(w, seed)
            linear = random_linear_map(w.n, seed + 30)
            f = conjugate(s, linear)
            g = conjugate(s, linear.inverse())
            assert f.compose(g) == PolyMap.identity(w.n)
            assert g.compose(f) == PolyMap.identity(w.n)


# violation search


def test_find_violation_returns_witness():
    witness = find_violation(W12, OFFBLOCK, trials=8, seed=0)
    assert witness is not None
    # soundness: re-check the degree through the public conjugate path
    mu = resonance_profile(W12).order
    assert conjugate(witness, OFFBLOCK).total_degree() > mu


def test_find_violation_rejects_block_diagonal():
    with pytest.raises(BlockDiagonalInput):
        find_violation(W12, LinearMap(((2, 0), (0, 3))), trials=4, seed=0)
    # equal weights form a single block, so every linear map is rejected
    with pytest.raises(BlockDiagonalInput):
        find_violation(WeightVector((1, 1)), OFFBLOCK, trials=4, seed=0)


def test_find_violation_absent_when_sigma_forced_identity():
    w = WeightVector((2, 3))
    assert find_violation(w, OFFBLOCK, trials=16, seed=1) is None


def test_find_violation_validates_input():
    with pytest.raises(ValueError):
        find_violation(W12, OFFBLOCK, trials=0, seed=0)
    with pytest.raises(SingularLinearMap):
        find_violation(W12, LinearMap(((1, 1), (1, 1))), trials=4, seed=0)


# quasi-resonance estimation


def test_estimator_examples():
    assert quasi_resonance_estimate(WeightVector((1, 1, 1)), 4, seed=1).observed_max == 1
    estimate = quasi_resonance_estimate(W12, 16, seed=1)
    assert estimate.observed_max == 4
    assert estimate.cap == 4
    assert quasi_resonance_estimate(WeightVector((2, 3)), 4, seed=1).observed_max == 1


def test_estimator_deterministic_and_monotone():
    w = WeightVector((1, 2, 3))
    small = quasi_resonance_estimate(w, 4, seed=5)
    again = quasi_resonance_estimate(w, 4, seed=5)
    large = quasi_resonance_estimate(w, 12, seed=5)
    assert small == again
    assert small.observed_max <= large.observed_max
    assert large.observed_max <= large.cap


def test_estimator_never_exceeds_cap():
    for m in WEIGHT_SET:
        w = WeightVector(m)
        estimate = quasi_resonance_estimate(w, 6, seed=3)
        assert 1 <= estimate.observed_max <= estimate.cap


# samplers


def test_random_linear_map_deterministic_invertible():
    a = random_linear_map(3, 7)
    assert a == random_linear_map(3, 7)
    assert a.determinant() != 0


def test_random_block_diagonal_sampler():
    w = WeightVector((1, 1, 2))
    linear = random_block_diagonal_map(w, 11)
    assert linear.determinant() != 0
    assert is_block_diagonal(linear, block_partition(w))
    assert linear == random_block_diagonal_map(w, 11)


# conjugacy solver


def test_solve_recovers_quadratic_example():
    f = PolyMap((2 * var(2, 1), 3 * var(2, 2) - var(2, 1) ** 2))
    solution = solve_conjugacy(f, W12)
    assert solution.sigma == SIGMA12
    assert solution.linear == LinearMap(((2, 0), (0, 3)))
    assert solution.residual_zero
    assert solution.free_parameters == 0


def test_solve_linear_input_gives_identity_sigma():
    f = PolyMap.from_linear(OFFBLOCK)
    solution = solve_conjugacy(f, W12)
    assert solution.sigma.is_identity()
    assert solution.linear == OFFBLOCK
    assert solution.residual_zero


def test_solve_identity_reports_free_family():
    # every sigma conjugates the identity to itself, so the system is fully
    # underdetermined; the zero solution is picked and the slack is reported
    solution = solve_conjugacy(PolyMap.identity(2), W12)
    assert solution.sigma.is_identity()
    assert solution.residual_zero
    assert solution.free_parameters == 1


def test_solve_detects_unsolvable():
    f = parse_poly_map("z1\nz2 + z1^3")
    with pytest.raises(NoResonantConjugacy):
        solve_conjugacy(f, W12)


def test_solve_rejects_bad_inputs():
    with pytest.raises(DoesNotFixOrigin):
        solve_conjugacy(parse_poly_map("z1 + 1\nz2"), W12)
    with pytest.raises(SingularLinearPart):
        solve_conjugacy(parse_poly_map("z1\nz1^2"), W12)
    with pytest.raises(DimensionMismatch):
        solve_conjugacy(PolyMap.identity(3), W12)


def test_solve_round_trip_reproduces_map():
    for m in ((1, 2), (1, 1, 2), (1, 2, 3)):
        w = WeightVector(m)
        for seed in range(8):
            s = random_sigma(w, seed)
            linear = random_linear_map(w.n, seed + 77)
            f = conjugate(s, linear)
            solution = solve_conjugacy(f, w)
            assert solution.residual_zero
            assert conjugate(solution.sigma, solution.linear) == f
