"""Self-check suites behind `critlab verify`.

Each suite runs a reduced-scale version of the package invariants and returns
(passed, details) where details is a JSON-serializable summary. The full
statistical acceptance checks live in the test suite; these are fast smoke
verifications for the CLI surface.
"""

from __future__ import annotations

import itertools

import numpy as np

from .conditions import DEFAULT_Z_GRID, condition_i_stat, condition_ii_stat, t_sum
from .eigen import hermitian_eigenvalues
from .ensembles import GroupKind, haar_sample, membership_residual, sample_wigner
from .harness import ExperimentSpec, clt_trace_experiment, run_experiment
from .measures import levy_distance, wasserstein1_empirical
from .polynomials import (
    coeffs_from_roots,
    critical_points_from_roots,
    derivative,
    gauss_lucas_check,
    interlacing_defect,
    matching_distance,
    roots_from_coeffs,
)
from .rng import RngStream

SUITES = ("groups", "gauss-lucas", "companion", "interlacing", "metrics", "clt", "convergence")


def levy_grid_oracle(xs, ys, resolution=1e-4) -> float:
    """Brute-force Levy distance: smallest eps on a uniform grid satisfying
    both inequalities at a dense set of check points."""
    xs = np.sort(np.asarray(xs, dtype=np.float64))
    ys = np.sort(np.asarray(ys, dtype=np.float64))

    # the 1e-9 nudge keeps jump points included when eps arithmetic lands an
    # ulp short of a data point; data separations are assumed >> 1e-9
    def F(t):
        return np.searchsorted(xs, t + 1e-9, side="right") / xs.size

    def G(t):
        return np.searchsorted(ys, t + 1e-9, side="right") / ys.size

    checks = np.unique(np.concatenate([xs, ys]))
    for eps in np.arange(0.0, 1.0 + resolution, resolution):
        pts = np.concatenate([checks, checks + eps, checks - eps])
        if np.all(G(pts - eps) - eps <= F(pts) + 1e-12) and np.all(
            F(pts) <= G(pts + eps) + eps + 1e-12
        ):
            return float(eps)
    return 1.0


def wasserstein_exhaustive_oracle(xs, ys) -> float:
    """Minimum mean pairing cost over all permutations (equal sizes <= ~8)."""
    xs = list(map(float, xs))
    ys = list(map(float, ys))
    best = min(
        sum(abs(x - y) for x, y in zip(xs, perm)) for perm in itertools.permutations(ys)
    )
    return best / len(xs)


def _suite_groups(seed: int):
    failures = []
    for ki, kind in enumerate(GroupKind):
        for n in (4, 10, 50):
            if kind is GroupKind.SYMPLECTIC and n % 2:
                continue
            for t in range(5):
                M = haar_sample(kind, n, RngStream(seed).derive(ki, n, t))
                r = membership_residual(M, kind)
                if r > 1e-10 * n:
                    failures.append({"kind": kind.value, "n": n, "trial": t, "residual": r})
                if kind is GroupKind.SPECIAL_ORTHOGONAL:
                    det = np.linalg.det(M)
                    if abs(det - 1.0) > 1e-10:
                        failures.append({"kind": kind.value, "n": n, "trial": t, "det": str(det)})
    return not failures, {"failures": failures}


def _suite_gauss_lucas(seed: int):
    gen = RngStream(seed).derive(11).generator
    violations = 0
    for _ in range(200):
        deg = int(gen.integers(2, 51))
        roots = gen.uniform(-1, 1, deg) + 1j * gen.uniform(-1, 1, deg)
        roots = roots[np.abs(roots) <= 1.0]
        if roots.size < 2:
            continue
        crit = critical_points_from_roots(roots)
        if not gauss_lucas_check(roots, crit, tol=1e-8):
            violations += 1
    return violations == 0, {"violations": violations}


def _suite_companion(seed: int):
    gen = RngStream(seed).derive(12).generator
    worst = 0.0
    for _ in range(50):
        deg = int(gen.integers(2, 31))
        u = np.sqrt(gen.uniform(0, 1, deg))
        phi = gen.uniform(0, 2 * np.pi, deg)
        roots = u * np.exp(1j * phi)
        direct = critical_points_from_roots(roots)
        via_coeffs = roots_from_coeffs(derivative(coeffs_from_roots(roots)))
        worst = max(worst, matching_distance(direct, via_coeffs))
    return worst <= 1e-6, {"max_matching_distance": worst}


def _suite_interlacing(seed: int):
    gen = RngStream(seed).derive(13).generator
    defects = []
    for t in range(5):
        M = sample_wigner(100, RngStream(seed).derive(13, t))
        eigs = hermitian_eigenvalues(M) / 10.0
        crit = np.sort(critical_points_from_roots(eigs).real)
        for _ in range(100):
            a, b = np.sort(gen.uniform(-2.5, 2.5, 2))
            defects.append(interlacing_defect(eigs, crit, (a, b)))
    worst = max(defects)
    return worst <= 1, {"max_defect": int(worst)}


def _suite_metrics(seed: int):
    gen = RngStream(seed).derive(14).generator
    worst_levy = 0.0
    for _ in range(20):
        xs = gen.normal(0, 1, int(gen.integers(2, 10)))
        ys = gen.normal(0.5, 1.5, int(gen.integers(2, 10)))
        worst_levy = max(worst_levy, abs(levy_distance(xs, ys) - levy_grid_oracle(xs, ys)))
    worst_w = 0.0
    for _ in range(20):
        k = int(gen.integers(1, 7))
        xs = gen.normal(0, 1, k)
        ys = gen.normal(0, 1, k)
        worst_w = max(
            worst_w,
            abs(wasserstein1_empirical(xs, ys) - wasserstein_exhaustive_oracle(xs, ys)),
        )
    ok = worst_levy <= 1e-3 and worst_w <= 1e-12
    return ok, {"max_levy_gap": worst_levy, "max_wasserstein_gap": worst_w}


def _suite_clt(seed: int):
    res = clt_trace_experiment(GroupKind.UNITARY, 64, 2, 800, seed)
    ok = all(res[j]["corrected"] < 0.15 for j in res)
    return ok, {str(j): res[j] for j in res}


def _suite_convergence(seed: int):
    spec = ExperimentSpec(
        model="haar_u",
        sizes=[16, 32, 64],
        trials=20,
        seed=seed,
        statistics=["radial_deficit"],
    )
    report = run_experiment(spec)
    verdict = report.trends["radial_deficit"]
    return verdict == "decreasing", {
        "trend": verdict,
        "medians": report.median_series("radial_deficit"),
    }


_SUITE_FUNCS = {
    "groups": _suite_groups,
    "gauss-lucas": _suite_gauss_lucas,
    "companion": _suite_companion,
    "interlacing": _suite_interlacing,
    "metrics": _suite_metrics,
    "clt": _suite_clt,
    "convergence": _suite_convergence,
}


def run_suite(name: str, seed: int = 20260823):
    """Run one named suite; returns (passed, details)."""
    if name not in _SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}; expected one of {SUITES}")
    return _SUITE_FUNCS[name](seed)
