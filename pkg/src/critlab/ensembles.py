"""Random matrix sampling: Gaussian building blocks, Haar measure on the
compact classical groups O(n), SO(n), U(n), Sp(n), Wigner, and real Ginibre.

All matrices are dense complex128 ndarrays of shape (n, n). Real ensembles
return complex arrays with exactly zero imaginary part so every downstream
routine handles one dtype.

Haar sampling uses the QR route: factor a Gaussian matrix and right-multiply
Q by diag(r_kk / |r_kk|), which makes the factorization unique and the result
exactly Haar distributed (raw LAPACK QR output is not).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import ContractViolationError, InvalidDimensionError
from .rng import RngStream


class GroupKind(Enum):
    ORTHOGONAL = "orthogonal"
    SPECIAL_ORTHOGONAL = "special_orthogonal"
    UNITARY = "unitary"
    SYMPLECTIC = "symplectic"


def _check_dim(n, kind=None):
    if n < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {n}")
    if kind is GroupKind.SYMPLECTIC and n % 2 != 0:
        raise InvalidDimensionError(f"symplectic dimension must be even, got {n}")


def validate_square_matrix(M) -> np.ndarray:
    """Coerce to a finite, square complex128 array."""
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise InvalidDimensionError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ContractViolationError("matrix contains NaN or Inf entries")
    return M


def sample_real_gaussian_matrix(n: int, rng: RngStream) -> np.ndarray:
    """n x n matrix of iid real standard normal entries (zero imaginary part)."""
    _check_dim(n)
    return rng.generator.standard_normal((n, n)).astype(np.complex128)


def sample_complex_gaussian_matrix(n: int, rng: RngStream) -> np.ndarray:
    """n x n matrix of iid complex standard normals Z = X + iY, X,Y ~ N(0, 1/2)."""
    _check_dim(n)
    g = rng.generator.standard_normal((2, n, n))
    return (g[0] + 1j * g[1]) / np.sqrt(2.0)


def _qr_haar(A: np.ndarray) -> np.ndarray:
    Q, R = np.linalg.qr(A)
    d = np.diagonal(R).copy()
    # guard against exact zeros on the diagonal (probability zero)
    d[d == 0] = 1.0
    return Q * (d / np.abs(d))


def symplectic_form(n: int) -> np.ndarray:
    """The block form J = [[0, I], [-I, 0]] of even order n."""
    _check_dim(n, GroupKind.SYMPLECTIC)
    m = n // 2
    J = np.zeros((n, n), dtype=np.complex128)
    J[:m, m:] = np.eye(m)
    J[m:, :m] = -np.eye(m)
    return J


def _quaternion_dual(v: np.ndarray) -> np.ndarray:
    # The antiunitary pairing [a; c] -> [-conj(c); conj(a)] that encodes
    # quaternionic structure in the 2x2-block complex representation.
    m = v.shape[0] // 2
    return np.concatenate([-np.conj(v[m:]), np.conj(v[:m])])


def _haar_symplectic(n: int, rng: RngStream) -> np.ndarray:
    # Quaternionic Gaussian columns orthonormalized with a structure-preserving
    # Gram-Schmidt: each accepted column q contributes both q and its dual, so
    # the block structure (hence the J-relation) holds exactly.
    m = n // 2
    A = sample_complex_gaussian_matrix(m, rng)
    B = sample_complex_gaussian_matrix(m, rng)
    cols = np.vstack([A, -np.conj(B)])
    Q = np.zeros((n, n), dtype=np.complex128)
    for j in range(m):
        v = cols[:, j]
        if j:
            duals = np.column_stack([_quaternion_dual(Q[:, k]) for k in range(j)])
            basis = np.hstack([Q[:, :j], duals])
            for _ in range(2):  # reorthogonalize once for stability
                v = v - basis @ (basis.conj().T @ v)
        Q[:, j] = v / np.linalg.norm(v)
    for j in range(m):
        Q[:, m + j] = _quaternion_dual(Q[:, j])
    return Q


def haar_sample(kind: GroupKind, n: int, rng: RngStream) -> np.ndarray:
    """Sample a Haar-distributed matrix from the requested compact group."""
    _check_dim(n, kind)
    if kind is GroupKind.UNITARY:
        return _qr_haar(sample_complex_gaussian_matrix(n, rng))
    if kind in (GroupKind.ORTHOGONAL, GroupKind.SPECIAL_ORTHOGONAL):
        M = _qr_haar(sample_real_gaussian_matrix(n, rng))
        if kind is GroupKind.SPECIAL_ORTHOGONAL and np.linalg.det(M).real < 0:
            # a fixed det=-1 element bijects the two components of O(n)
            M = M.copy()
            M[0, :] = -M[0, :]
        return M
    if kind is GroupKind.SYMPLECTIC:
        return _haar_symplectic(n, rng)
    raise ContractViolationError(f"unknown group kind {kind!r}")


def membership_residual(M, kind: GroupKind) -> float:
    """Max-norm residual of the group's defining relations.

    Orthogonal: realness and M M^T = I. Special orthogonal additionally
    |det(M) - 1|. Unitary: M M* = I. Symplectic: unitarity and M^T J M = J.
    """
    M = validate_square_matrix(M)
    n = M.shape[0]
    eye = np.eye(n)
    if kind in (GroupKind.ORTHOGONAL, GroupKind.SPECIAL_ORTHOGONAL):
        r = max(
            np.max(np.abs(M @ M.T - eye)),
            np.max(np.abs(M.T @ M - eye)),
            np.max(np.abs(M.imag)),
        )
        if kind is GroupKind.SPECIAL_ORTHOGONAL:
            r = max(r, abs(np.linalg.det(M) - 1.0))
        return float(r)
    if kind is GroupKind.UNITARY:
        Mh = M.conj().T
        return float(max(np.max(np.abs(M @ Mh - eye)), np.max(np.abs(Mh @ M - eye))))
    if kind is GroupKind.SYMPLECTIC:
        _check_dim(n, kind)
        J = symplectic_form(n)
        Mh = M.conj().T
        return float(
            max(
                np.max(np.abs(M @ Mh - eye)),
                np.max(np.abs(Mh @ M - eye)),
                np.max(np.abs(M.T @ J @ M - J)),
                np.max(np.abs(M @ J @ M.T - J)),
            )
        )
    raise ContractViolationError(f"unknown group kind {kind!r}")


def symplectic_star_relation_residual(M) -> float:
    """Residual of M J M* = J.

    Diagnostic only: together with unitarity this relation forces M to commute
    with J, so it characterizes the centralizer of J rather than Sp(n). It is
    NOT used by membership_residual.
    """
    M = validate_square_matrix(M)
    J = symplectic_form(M.shape[0])
    return float(np.max(np.abs(M @ J @ M.conj().T - J)))


def sample_wigner(n: int, rng: RngStream) -> np.ndarray:
    """Hermitian matrix: iid complex standard normals above the diagonal,
    iid real standard normals on it. Exactly Hermitian by construction; the
    caller applies any 1/sqrt(n) scaling."""
    _check_dim(n)
    Z = sample_complex_gaussian_matrix(n, rng)
    diag = rng.generator.standard_normal(n)
    M = np.triu(Z, 1)
    M = M + M.conj().T
    M[np.diag_indices(n)] = diag
    return M


def sample_ginibre_real(n: int, rng: RngStream) -> np.ndarray:
    """Real Ginibre ensemble: iid real standard normal entries."""
    return sample_real_gaussian_matrix(n, rng)
