"""Polynomial representations and critical-point machinery.

Two interchangeable forms are used throughout:

* root form -- a 1-D complex array of roots; the polynomial is the monic
  product of (z - x_j);
* coefficient form -- a 1-D complex array of coefficients in ascending
  degree order with a nonzero leading coefficient.

Critical points of a root-form polynomial come from the eigenvalues of the
(n-1) x (n-1) matrix D (I - J/n) + (x_n / n) J, where D = diag(x_1..x_{n-1})
and J is the all-ones matrix. A second, independent route (differentiate the
expanded coefficients, then root-find) serves as an oracle in tests.
"""

from __future__ import annotations

import numpy as np

from .eigen import eigenvalues
from .errors import DegenerateResultError, InvalidDimensionError


def coeffs_from_roots(roots) -> np.ndarray:
    """Monic expansion of prod(z - x_j), ascending coefficients."""
    roots = np.asarray(roots, dtype=np.complex128).ravel()
    if roots.size < 1:
        raise InvalidDimensionError("need at least one root")
    c = np.array([1.0 + 0j])
    for r in roots:
        nxt = np.zeros(c.size + 1, dtype=np.complex128)
        nxt[1:] = c          # z * p(z)
        nxt[:-1] -= r * c    # - r * p(z)
        c = nxt
    return c


def trim_coeffs(coeffs) -> np.ndarray:
    """Drop trailing (highest-degree) zero coefficients."""
    c = np.asarray(coeffs, dtype=np.complex128).ravel()
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        raise DegenerateResultError("zero polynomial has no coefficient form")
    return c[: nz[-1] + 1]


def derivative(coeffs, k: int = 1) -> np.ndarray:
    """Exact k-fold formal derivative in coefficient form."""
    c = trim_coeffs(coeffs)
    if k < 0:
        raise InvalidDimensionError(f"derivative order must be >= 0, got {k}")
    if k > c.size - 1:
        raise DegenerateResultError(
            f"order-{k} derivative of a degree-{c.size - 1} polynomial is constant"
        )
    for _ in range(k):
        c = c[1:] * np.arange(1, c.size)
    return c


def polyval(coeffs, z):
    """Evaluate an ascending-coefficient polynomial at z (Horner)."""
    c = np.asarray(coeffs, dtype=np.complex128).ravel()
    acc = np.zeros_like(np.asarray(z, dtype=np.complex128))
    for ck in c[::-1]:
        acc = acc * z + ck
    return acc


def companion_matrix(coeffs) -> np.ndarray:
    """Frobenius companion matrix of an ascending-coefficient polynomial."""
    c = trim_coeffs(coeffs)
    deg = c.size - 1
    if deg < 1:
        raise DegenerateResultError("constant polynomial has no companion matrix")
    monic = c / c[-1]
    C = np.zeros((deg, deg), dtype=np.complex128)
    C[1:, :-1] = np.eye(deg - 1)
    C[:, -1] = -monic[:-1]
    return C


def roots_from_coeffs(coeffs) -> np.ndarray:
    """All roots with multiplicity via the balanced companion-matrix eigenproblem."""
    return eigenvalues(companion_matrix(coeffs)).values


def critical_points_from_roots(roots) -> np.ndarray:
    """The n-1 critical points of prod(z - x_j), via the companion-type matrix
    D (I - J/n) + (x_n / n) J."""
    x = np.asarray(roots, dtype=np.complex128).ravel()
    n = x.size
    if n < 2:
        raise DegenerateResultError("degree-1 polynomial has no critical points")
    # entrywise: delta_ij x_i + (x_n - x_i)/n
    M = np.diag(x[:-1]) + ((x[-1] - x[:-1]) / n)[:, None] * np.ones((n - 1, n - 1))
    return eigenvalues(M).values


def matching_distance(a, b) -> float:
    """Greedy minimal-cost matching between two equal-size complex multisets;
    returns the maximum matched distance."""
    a = np.asarray(a, dtype=np.complex128).ravel()
    b = np.asarray(b, dtype=np.complex128).ravel()
    if a.size != b.size:
        raise InvalidDimensionError("multisets must have equal size")
    if a.size == 0:
        return 0.0
    d = np.abs(a[:, None] - b[None, :])
    worst = 0.0
    big = np.inf
    for _ in range(a.size):
        i, j = np.unravel_index(np.argmin(d), d.shape)
        worst = max(worst, d[i, j])
        d[i, :] = big
        d[:, j] = big
    return float(worst)


def _convex_hull(points: np.ndarray) -> np.ndarray:
    """Monotone-chain convex hull (CCW, no repeated endpoint) of 2-D points."""
    pts = np.unique(points, axis=0)
    if pts.shape[0] <= 2:
        return pts
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]

    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def _segment_distance(p, a, b) -> float:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.hypot(*(p - a)))
    t = np.clip(float((p - a) @ ab) / denom, 0.0, 1.0)
    proj = a + t * ab
    return float(np.hypot(*(p - proj)))


def hull_distance(point: complex, hull: np.ndarray) -> float:
    """Distance from a complex point to a convex hull (0 inside)."""
    p = np.array([point.real, point.imag])
    if hull.shape[0] == 1:
        return float(np.hypot(*(p - hull[0])))
    if hull.shape[0] == 2:
        return _segment_distance(p, hull[0], hull[1])
    inside = True
    for i in range(hull.shape[0]):
        a, b = hull[i], hull[(i + 1) % hull.shape[0]]
        if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0:
            inside = False
            break
    if inside:
        return 0.0
    return min(
        _segment_distance(p, hull[i], hull[(i + 1) % hull.shape[0]])
        for i in range(hull.shape[0])
    )


def gauss_lucas_check(roots, crit, tol: float | None = None) -> bool:
    """True iff every critical point lies within tol of the convex hull of the
    roots. Default tol is scale-aware: 1e-9 * (1 + max|root|)."""
    roots = np.asarray(roots, dtype=np.complex128).ravel()
    crit = np.asarray(crit, dtype=np.complex128).ravel()
    if tol is None:
        tol = 1e-9 * (1.0 + float(np.max(np.abs(roots))))
    hull = _convex_hull(np.column_stack([roots.real, roots.imag]))
    return all(hull_distance(complex(c), hull) <= tol for c in crit)


def interlacing_defect(real_roots, real_crit, interval) -> int:
    """|#roots - #critical points| inside the open interval (a, b)."""
    a, b = interval
    roots = np.asarray(real_roots, dtype=np.float64)
    crit = np.asarray(real_crit, dtype=np.float64)
    n_roots = int(np.count_nonzero((roots > a) & (roots < b)))
    n_crit = int(np.count_nonzero((crit > a) & (crit < b)))
    return abs(n_roots - n_crit)
