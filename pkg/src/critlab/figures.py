"""Figure data: unit-circle scatter of zeros/critical points for a Haar
orthogonal matrix (fig1) and the 1/sqrt(n)-scaled eigenvalues and critical
points of a real Ginibre matrix (fig2)."""

from __future__ import annotations

import numpy as np

from .eigen import eigenvalues
from .ensembles import GroupKind, haar_sample, sample_ginibre_real
from .polynomials import critical_points_from_roots
from .rng import RngStream
from .root_models import char_poly_angles, roots_on_circle

FIG1_DEFAULT_N = 50
FIG2_DEFAULT_N = 300


def fig1_data(seed: int, n: int = FIG1_DEFAULT_N):
    """(zeros, critical points) of the characteristic polynomial of a Haar
    orthogonal matrix."""
    M = haar_sample(GroupKind.ORTHOGONAL, n, RngStream(seed).derive(1))
    zeros = roots_on_circle(char_poly_angles(M, GroupKind.ORTHOGONAL))
    return zeros, critical_points_from_roots(zeros)


def fig2_data(seed: int, n: int = FIG2_DEFAULT_N):
    """(scaled eigenvalues, scaled critical points) of the characteristic
    polynomial of a real Ginibre matrix; both series scaled by 1/sqrt(n)."""
    M = sample_ginibre_real(n, RngStream(seed).derive(2))
    zeros = eigenvalues(M).values
    crit = critical_points_from_roots(zeros)
    s = 1.0 / np.sqrt(n)
    return zeros * s, crit * s
