"""Generators for the random-polynomial models under study: iid uniform
angles on the circle, conjugate-pair angles, Kac polynomials with iid
coefficients, and angle extraction from compact-group matrices.

Angle samples are plain 1-D float arrays with every entry in [0, 2*pi).
"""

from __future__ import annotations

import numpy as np

from .eigen import eigenvalues
from .ensembles import GroupKind, membership_residual, validate_square_matrix
from .errors import ContractViolationError, InvalidDimensionError
from .rng import RngStream

TWO_PI = 2.0 * np.pi

COEFF_DISTS = ("real_gaussian", "complex_gaussian", "rademacher")


def _check_count(n):
    if n < 1:
        raise InvalidDimensionError(f"sample size must be >= 1, got {n}")


def wrap_angles(angles) -> np.ndarray:
    """Map arbitrary angles into [0, 2*pi)."""
    a = np.mod(np.asarray(angles, dtype=np.float64), TWO_PI)
    a[a == TWO_PI] = 0.0
    return a


def roots_on_circle(angles) -> np.ndarray:
    """The unit-modulus roots e^{i theta_j} of an angle sample."""
    return np.exp(1j * np.asarray(angles, dtype=np.float64))


def iid_uniform_angles(n: int, rng: RngStream) -> np.ndarray:
    """n iid angles uniform on [0, 2*pi)."""
    _check_count(n)
    return rng.generator.uniform(0.0, TWO_PI, size=n)


def conjugate_pair_angles(n_pairs: int, rng: RngStream, extra_odd: bool = False) -> np.ndarray:
    """Angles {theta_j, 2*pi - theta_j} for iid uniform theta_j; with
    `extra_odd`, one additional unpaired uniform angle."""
    _check_count(n_pairs)
    th = rng.generator.uniform(0.0, TWO_PI, size=n_pairs)
    mirrored = wrap_angles(TWO_PI - th)
    parts = [th, mirrored]
    if extra_odd:
        parts.append(rng.generator.uniform(0.0, TWO_PI, size=1))
    return np.concatenate(parts)


def kac_polynomial(n: int, rng: RngStream, dist="real_gaussian") -> np.ndarray:
    """Degree-n polynomial with iid coefficients, ascending order.

    `dist` is one of COEFF_DISTS or a callable (size, generator) -> complex
    array (test hook). The leading coefficient is resampled on the zero event
    so the degree is exactly n.
    """
    _check_count(n)
    gen = rng.generator
    if callable(dist):
        draw = dist
    elif dist == "real_gaussian":
        draw = lambda size, g: g.standard_normal(size).astype(np.complex128)
    elif dist == "complex_gaussian":
        draw = lambda size, g: (
            g.standard_normal(size) + 1j * g.standard_normal(size)
        ) / np.sqrt(2.0)
    elif dist == "rademacher":
        draw = lambda size, g: (2.0 * g.integers(0, 2, size=size) - 1.0).astype(
            np.complex128
        )
    else:
        raise ContractViolationError(f"unknown coefficient distribution {dist!r}")
    coeffs = np.asarray(draw(n + 1, gen), dtype=np.complex128)
    while coeffs[-1] == 0:
        coeffs[-1] = draw(1, gen)[0]
    return coeffs


def char_poly_angles(M, kind: GroupKind, radial_tol: float = 1e-8) -> np.ndarray:
    """Eigenvalue arguments of a compact-group matrix, mapped into [0, 2*pi).

    Checks group membership (residual <= 1e-8 * dim) and that every
    eigenvalue sits on the unit circle within `radial_tol`.
    """
    M = validate_square_matrix(M)
    n = M.shape[0]
    res = membership_residual(M, kind)
    if res > 1e-8 * n:
        raise ContractViolationError(
            f"membership residual {res:.3e} exceeds 1e-8 * {n} for {kind.value}"
        )
    lam = eigenvalues(M).values
    radial_dev = float(np.max(np.abs(np.abs(lam) - 1.0)))
    if radial_dev > radial_tol:
        raise ContractViolationError(
            f"eigenvalue modulus deviates from 1 by {radial_dev:.3e}"
        )
    return wrap_angles(np.angle(lam))
