"""Empirical measures and the metrics the convergence statements are phrased
in: trigonometric moments, radial deficits, Levy distance, 1-D Wasserstein
distance, and the semicircle reference distribution.

Empirical measures are represented as flat arrays of atoms with uniform
weight 1/count; repeated atoms encode multiplicity and are never deduplicated.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolationError
from .root_models import wrap_angles


def trig_moment(angles, m: int) -> complex:
    """(1/n) sum_j e^{i m theta_j} for integer m >= 1."""
    if m < 1:
        raise ContractViolationError("trig moment order must be >= 1")
    a = np.asarray(angles, dtype=np.float64)
    if a.size == 0:
        raise ContractViolationError("empty angle sample")
    return complex(np.mean(np.exp(1j * m * a)))


def polar_decompose(points):
    """Split complex points into (angles in [0, 2*pi), radii >= 0).

    Zero points get angle 0 by convention.
    """
    z = np.asarray(points, dtype=np.complex128).ravel()
    radii = np.abs(z)
    angles = wrap_angles(np.angle(z))
    angles[radii == 0] = 0.0
    return angles, radii


def radial_deficit(radii) -> float:
    """Mean of (1 - r_j) over the given radii."""
    r = np.asarray(radii, dtype=np.float64)
    if r.size == 0:
        raise ContractViolationError("empty radius list")
    return float(np.mean(1.0 - r))


def _empirical_cdf_factory(sample):
    xs = np.sort(np.asarray(sample, dtype=np.float64))
    n = xs.size

    def cdf(t):
        return np.searchsorted(xs, t, side="right") / n

    return cdf, xs


def _levy_ok(eps, F, f_jumps, G, g_jumps):
    # Both conditions of the Levy definition, checked where their step
    # structure attains the supremum: F(x) <= G(x+eps)+eps at jumps of F,
    # G(x-eps)-eps <= F(x) at (jumps of G) + eps.
    if np.any(F(f_jumps) > G(f_jumps + eps) + eps + 1e-15):
        return False
    if np.any(G(g_jumps) - eps > F(g_jumps + eps) + 1e-15):
        return False
    return True


def levy_distance(mu, nu, grid=None) -> float:
    """Levy distance between two real samples, or between a sample and a
    reference CDF given as a callable.

    For a pair of step CDFs the jump-set scan is exact; against a smooth
    reference, `grid` supplies the extra check points (error bounded by the
    grid resolution).
    """
    F, f_jumps = _empirical_cdf_factory(mu)
    if callable(nu):
        G = lambda t: np.asarray(nu(t), dtype=np.float64)
        g_jumps = np.asarray(grid, dtype=np.float64) if grid is not None else f_jumps
    else:
        G, g_jumps = _empirical_cdf_factory(nu)

    lo, hi = 0.0, 1.0
    if _levy_ok(lo, F, f_jumps, G, g_jumps):
        return 0.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if _levy_ok(mid, F, f_jumps, G, g_jumps):
            hi = mid
        else:
            lo = mid
    return hi


def wasserstein1_empirical(xs, ys) -> float:
    """1-D Wasserstein-1 distance between two empirical samples.

    Equal sizes reduce to the mean absolute difference of sorted samples (the
    optimal coupling); unequal sizes integrate the quantile difference.
    """
    x = np.sort(np.asarray(xs, dtype=np.float64))
    y = np.sort(np.asarray(ys, dtype=np.float64))
    if x.size == 0 or y.size == 0:
        raise ContractViolationError("empty sample")
    if x.size == y.size:
        return float(np.mean(np.abs(x - y)))
    # integrate |F_x^{-1}(q) - F_y^{-1}(q)| dq over the merged quantile grid
    all_pts = np.sort(np.concatenate([x, y]))
    deltas = np.diff(all_pts)
    fx = np.searchsorted(x, all_pts[:-1], side="right") / x.size
    fy = np.searchsorted(y, all_pts[:-1], side="right") / y.size
    return float(np.sum(np.abs(fx - fy) * deltas))


def semicircle_cdf(x):
    """CDF of the semicircle law with density sqrt(4 - x^2) / (2*pi) on [-2, 2]."""
    t = np.clip(np.asarray(x, dtype=np.float64), -2.0, 2.0)
    val = 0.5 + t * np.sqrt(4.0 - t * t) / (4.0 * np.pi) + np.arcsin(t / 2.0) / np.pi
    return np.clip(val, 0.0, 1.0)


def levy_to_semicircle(sample) -> float:
    """Levy distance of an empirical sample to the semicircle CDF, scanning
    the empirical jumps plus a fixed 1e-3 grid on [-2.5, 2.5]."""
    grid = np.arange(-2.5, 2.5 + 1e-9, 1e-3)
    return levy_distance(sample, semicircle_cdf, grid=grid)
