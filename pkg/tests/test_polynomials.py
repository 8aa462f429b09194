import numpy as np
import pytest

from critlab.eigen import hermitian_eigenvalues
from critlab.ensembles import sample_wigner
from critlab.errors import DegenerateResultError
from critlab.polynomials import (
    coeffs_from_roots,
    critical_points_from_roots,
    derivative,
    gauss_lucas_check,
    interlacing_defect,
    matching_distance,
    roots_from_coeffs,
)
from critlab.rng import RngStream


def unit_disk_roots(gen, deg):
    # uniform on the disk: sqrt-radius times uniform angle
    return np.sqrt(gen.uniform(0, 1, deg)) * np.exp(1j * gen.uniform(0, 2 * np.pi, deg))


def coefficient_route_critical_points(roots):
    """Independent oracle: expand, differentiate, root-find."""
    return roots_from_coeffs(derivative(coeffs_from_roots(roots)))


def test_coeffs_from_roots_examples():
    assert np.allclose(coeffs_from_roots([1, -1]), [-1, 0, 1])
    assert np.allclose(coeffs_from_roots([0]), [0, 1])
    cube = np.exp(2j * np.pi * np.arange(3) / 3)
    assert np.allclose(coeffs_from_roots(cube), [-1, 0, 0, 1], atol=1e-14)


def test_derivative_examples():
    assert np.allclose(derivative([-1, 0, 1]), [0, 2])
    assert np.allclose(derivative([-1, 0, 0, 1], k=2), [0, 6])
    p = np.array([2.0, 3.0, 5.0])
    assert np.allclose(derivative(p, k=0), p)


def test_derivative_past_degree_degenerates():
    with pytest.raises(DegenerateResultError):
        derivative([-1, 0, 1], k=3)


def test_roots_from_coeffs_examples():
    assert matching_distance(roots_from_coeffs([-1, 0, 1]), [1, -1]) < 1e-12
    expected = [np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3)]
    assert matching_distance(roots_from_coeffs([1, 1, 1]), expected) < 1e-12


def test_roots_round_trip_degree_20():
    gen = RngStream(21).generator
    roots = unit_disk_roots(gen, 20)
    recovered = roots_from_coeffs(coeffs_from_roots(roots))
    assert matching_distance(roots, recovered) < 1e-6


def test_critical_points_two_roots_midpoint():
    x1, x2 = 0.3 + 0.4j, -0.8 + 0.1j
    crit = critical_points_from_roots([x1, x2])
    assert crit.shape == (1,)
    assert abs(crit[0] - (x1 + x2) / 2) < 1e-14


def test_critical_points_roots_of_unity():
    roots = np.exp(2j * np.pi * np.arange(3) / 3)
    crit = critical_points_from_roots(roots)
    assert matching_distance(crit, [0, 0]) < 1e-7


def test_critical_points_degree_one_degenerates():
    with pytest.raises(DegenerateResultError):
        critical_points_from_roots([1.0])


def test_critical_points_match_coefficient_route():
    gen = RngStream(22).generator
    for _ in range(100):
        deg = int(gen.integers(2, 31))
        roots = unit_disk_roots(gen, deg)
        assert (
            matching_distance(
                critical_points_from_roots(roots),
                coefficient_route_critical_points(roots),
            )
            < 1e-6
        )


def test_critical_points_permutation_invariant():
    gen = RngStream(23).generator
    roots = unit_disk_roots(gen, 12)
    a = critical_points_from_roots(roots)
    b = critical_points_from_roots(gen.permutation(roots))
    assert matching_distance(a, b) < 1e-6


def test_translation_equivariance():
    gen = RngStream(24).generator
    for _ in range(10):
        deg = int(gen.integers(2, 21))
        roots = unit_disk_roots(gen, deg)
        c = complex(gen.normal(), gen.normal())
        shifted = critical_points_from_roots(roots + c)
        assert matching_distance(shifted, critical_points_from_roots(roots) + c) < 1e-8


def test_all_ones_matrix_power_identity_exact():
    # J^m = (n-1)^{m-1} J in exact integer arithmetic
    for n_minus_1 in (2, 5, 17, 30):
        J = np.ones((n_minus_1, n_minus_1), dtype=object)
        P = J.copy()
        for m in range(2, 6):
            P = P @ J
            assert np.array_equal(P, n_minus_1 ** (m - 1) * J)


def test_moment_transfer_bound_does_not_grow():
    # (n-1) * |mean root power - mean critical power| stays bounded in n
    # for roots on the unit circle
    worst = {}
    for n in (16, 32, 64, 128):
        trials = 50
        worst[n] = 0.0
        for t in range(trials):
            gen = RngStream(25).derive(n, t).generator
            roots = np.exp(1j * gen.uniform(0, 2 * np.pi, n))
            crit = critical_points_from_roots(roots)
            for k in (1, 2, 3):
                gap = abs(np.mean(roots**k) - np.mean(crit**k))
                worst[n] = max(worst[n], (n - 1) * gap)
    assert worst[128] <= 2 * worst[16]
    assert worst[128] < 10.0  # pilot-run constant for tau = 1, k <= 3


def test_gauss_lucas_examples():
    assert gauss_lucas_check([1, 1j, -1, -1j], [0, 0, 0], tol=1e-9)
    assert gauss_lucas_check([-1, 1], [0], tol=0.0)
    assert not gauss_lucas_check([-1, 1], [0.5 + 0.1j], tol=1e-3)


def test_gauss_lucas_random_polynomials():
    gen = RngStream(26).generator
    for _ in range(200):
        deg = int(gen.integers(2, 51))
        roots = unit_disk_roots(gen, deg)
        crit = critical_points_from_roots(roots)
        assert gauss_lucas_check(roots, crit, tol=1e-8)


def test_interlacing_defect_examples():
    assert interlacing_defect([-1, 1], [0], (-0.5, 0.5)) == 1
    assert interlacing_defect([-1, 1], [0], (-2, 2)) == 1
    assert interlacing_defect([-1, 1], [0], (0.5, 2)) == 1


def test_interlacing_wigner_samples():
    gen = RngStream(27).generator
    for t in range(3):
        n = 100
        eigs = hermitian_eigenvalues(sample_wigner(n, RngStream(28).derive(t))) / np.sqrt(n)
        crit = np.sort(critical_points_from_roots(eigs).real)
        for _ in range(100):
            a, b = np.sort(gen.uniform(-2.5, 2.5, 2))
            assert interlacing_defect(eigs, crit, (a, b)) <= 1
