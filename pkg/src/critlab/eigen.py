"""Dense eigenvalue computation backing all root and critical-point work.

The kernel is LAPACK's balanced Hessenberg/shifted-QR solver (via
``numpy.linalg``), which satisfies the backward-stability contract the rest of
the package relies on. Every spectrum is validated against the trace identity
and, when the matrix is nonsingular, the log-determinant identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import validate_square_matrix
from .errors import ContractViolationError, NumericFailureError


@dataclass
class Spectrum:
    """All eigenvalues of a square matrix, with multiplicity, unordered."""

    values: np.ndarray
    source_dim: int

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != (self.source_dim,):
            raise ContractViolationError(
                f"expected {self.source_dim} eigenvalues, got shape {self.values.shape}"
            )


def _validate_identities(lam: np.ndarray, M: np.ndarray) -> None:
    n = M.shape[0]
    scale = float(np.max(np.abs(M))) if M.size else 0.0
    tr = np.trace(M)
    if abs(lam.sum() - tr) > 1e-8 * n * scale + 1e-12:
        raise NumericFailureError(
            f"eigenvalue sum {lam.sum()} disagrees with trace {tr}", dim=n
        )
    # det identity checked in log-magnitude to avoid overflow; skipped for
    # (near-)singular matrices where the log diverges
    mags = np.abs(lam)
    if np.min(mags) < 1e-12 * max(scale, 1.0) or scale == 0.0:
        return
    sign, logdet = np.linalg.slogdet(M)
    if sign == 0 or not np.isfinite(logdet):
        return
    log_prod = float(np.sum(np.log(mags)))
    # below sqrt(eps) * scale^n the determinant is rounding noise; skip
    log_floor = n * np.log(scale) + 0.5 * np.log(np.finfo(np.float64).eps)
    if logdet < log_floor or log_prod < log_floor:
        return
    if abs(log_prod - logdet) > 1e-8 * max(1.0, abs(logdet)) + 1e-9 * n:
        raise NumericFailureError(
            f"eigenvalue log-product {log_prod} disagrees with log|det| {logdet}",
            dim=n,
        )


def eigenvalues(M) -> Spectrum:
    """All eigenvalues of M with algebraic multiplicity (multiset semantics)."""
    M = validate_square_matrix(M)
    try:
        lam = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(
            f"eigensolver failed to converge for dim {M.shape[0]}: {exc}",
            dim=M.shape[0],
        ) from exc
    _validate_identities(lam, M)
    return Spectrum(values=lam, source_dim=M.shape[0])


def hermitian_eigenvalues(M) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    M = validate_square_matrix(M)
    scale = max(float(np.max(np.abs(M))), 1.0)
    if np.max(np.abs(M - M.conj().T)) > 1e-12 * scale:
        raise ContractViolationError("input matrix is not Hermitian within 1e-12")
    try:
        return np.linalg.eigvalsh(M)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(
            f"Hermitian eigensolver failed for dim {M.shape[0]}: {exc}",
            dim=M.shape[0],
        ) from exc
