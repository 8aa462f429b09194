import numpy as np
import pytest

from critlab.ensembles import (
    GroupKind,
    haar_sample,
    membership_residual,
    sample_complex_gaussian_matrix,
    sample_ginibre_real,
    sample_real_gaussian_matrix,
    sample_wigner,
    symplectic_form,
    symplectic_star_relation_residual,
)
from critlab.errors import InvalidDimensionError
from critlab.rng import RngStream

ALL_KINDS = list(GroupKind)


def test_real_gaussian_n1_is_real():
    M = sample_real_gaussian_matrix(1, RngStream(0))
    assert M.shape == (1, 1)
    assert M[0, 0].imag == 0.0


def test_real_gaussian_mean_clt_bound():
    # 10^4 iid standard normals: |mean| < 4 sigma / sqrt(10^4) = 0.04 < 0.05
    M = sample_real_gaussian_matrix(100, RngStream(101))
    assert abs(M.real.mean()) < 0.05


def test_real_gaussian_determinism():
    a = sample_real_gaussian_matrix(3, RngStream(5, 2))
    b = sample_real_gaussian_matrix(3, RngStream(5, 2))
    assert np.array_equal(a, b)


def test_zero_dimension_rejected():
    with pytest.raises(InvalidDimensionError):
        sample_real_gaussian_matrix(0, RngStream(0))
    with pytest.raises(InvalidDimensionError):
        sample_complex_gaussian_matrix(0, RngStream(0))


def test_complex_gaussian_second_moment():
    # E|Z|^2 = 1, Var|Z|^2 = 1: 5 sigma window over 10^4 draws is [0.95, 1.05]
    M = sample_complex_gaussian_matrix(100, RngStream(102))
    assert 0.95 < np.mean(np.abs(M) ** 2) < 1.05


def test_complex_gaussian_parts_uncorrelated():
    M = sample_complex_gaussian_matrix(100, RngStream(103))
    corr = np.corrcoef(M.real.ravel(), M.imag.ravel())[0, 1]
    assert abs(corr) < 0.05


def test_complex_gaussian_determinism():
    a = sample_complex_gaussian_matrix(2, RngStream(9, 4))
    b = sample_complex_gaussian_matrix(2, RngStream(9, 4))
    assert np.array_equal(a, b)


def test_haar_u1_is_unit_modulus():
    M = haar_sample(GroupKind.UNITARY, 1, RngStream(11))
    assert abs(abs(M[0, 0]) - 1.0) < 1e-14


def test_haar_orthogonal_residual():
    M = haar_sample(GroupKind.ORTHOGONAL, 10, RngStream(12))
    assert membership_residual(M, GroupKind.ORTHOGONAL) <= 1e-10 * 10


def test_haar_so_determinant():
    M = haar_sample(GroupKind.SPECIAL_ORTHOGONAL, 4, RngStream(13))
    assert abs(np.linalg.det(M) - 1.0) < 1e-10


def test_haar_symplectic_odd_dim_rejected():
    with pytest.raises(InvalidDimensionError):
        haar_sample(GroupKind.SYMPLECTIC, 5, RngStream(0))


@pytest.mark.parametrize("kind", ALL_KINDS)
@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_membership_residual_invariant(kind, n):
    M = haar_sample(kind, n, RngStream(200).derive(ALL_KINDS.index(kind), n))
    assert membership_residual(M, kind) <= 1e-10 * n


def test_haar_determinism_bitwise():
    for kind in ALL_KINDS:
        a = haar_sample(kind, 6, RngStream(77, 3))
        b = haar_sample(kind, 6, RngStream(77, 3))
        assert np.array_equal(a, b)


def test_membership_residual_identity_orthogonal():
    assert membership_residual(np.eye(4), GroupKind.ORTHOGONAL) == 0.0


def test_membership_residual_reflection_not_special():
    M = np.diag([1.0, 1.0, 1.0, -1.0])
    assert membership_residual(M, GroupKind.SPECIAL_ORTHOGONAL) >= 2.0


def test_membership_residual_rotation_is_so2():
    for theta in (0.3, 1.7, 5.0):
        c, s = np.cos(theta), np.sin(theta)
        M = np.array([[c, -s], [s, c]])
        assert membership_residual(M, GroupKind.SPECIAL_ORTHOGONAL) <= 1e-15


def test_symplectic_star_relation_is_flagged_diagnostic():
    # the star relation holds for matrices commuting with J (e.g. identity)
    # but fails for a generic Haar symplectic sample
    n = 8
    assert symplectic_star_relation_residual(np.eye(n)) == 0.0
    M = haar_sample(GroupKind.SYMPLECTIC, n, RngStream(55))
    assert membership_residual(M, GroupKind.SYMPLECTIC) <= 1e-10 * n
    assert symplectic_star_relation_residual(M) > 1e-3


def test_symplectic_form_squares_to_minus_identity():
    J = symplectic_form(6)
    assert np.array_equal(J @ J, -np.eye(6).astype(complex))


def test_wigner_exactly_hermitian_and_n1_real():
    M = sample_wigner(7, RngStream(31))
    assert np.array_equal(M, M.conj().T)
    M1 = sample_wigner(1, RngStream(32))
    assert M1[0, 0].imag == 0.0


def test_wigner_offdiagonal_second_moment():
    # |M_12|^2 over 10^4 draws within [0.9, 1.1]
    vals = []
    for t in range(100):
        M = sample_wigner(11, RngStream(33).derive(t))
        iu = np.triu_indices(11, 1)
        vals.append(np.abs(M[iu]) ** 2)
    assert 0.9 < np.mean(np.concatenate(vals)) < 1.1


def test_ginibre_exactly_real():
    M = sample_ginibre_real(12, RngStream(34))
    assert np.all(M.imag == 0.0)


def test_left_invariance_smoke():
    # |(V M)_{11}|^2 and |M_{11}|^2 both have mean 1/n over Haar U(n)
    n, trials = 4, 10_000
    V = haar_sample(GroupKind.UNITARY, n, RngStream(900))
    plain = np.empty(trials)
    rotated = np.empty(trials)
    for t in range(trials):
        M = haar_sample(GroupKind.UNITARY, n, RngStream(901).derive(t))
        plain[t] = abs(M[0, 0]) ** 2
        rotated[t] = abs((V @ M)[0, 0]) ** 2
    # |M_11|^2 ~ Beta(1, n-1): variance (n-1)/(n^2 (n+1))
    se = np.sqrt((n - 1) / (n**2 * (n + 1)) / trials)
    assert abs(plain.mean() - 1 / n) < 5 * se
    assert abs(rotated.mean() - 1 / n) < 5 * se
