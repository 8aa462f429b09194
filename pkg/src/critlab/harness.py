"""Seeded Monte Carlo experiment runner.

An :class:`ExperimentSpec` names a random model, a list of sizes, a trial
count, a seed, and the statistics to evaluate. :func:`run_experiment` samples
every (size, trial) cell on its own derived RNG stream, so results are
independent of execution order and thread count, and aggregates per-statistic
quantiles into a :class:`ConvergenceReport` with a trend verdict per
statistic.

Per-trial statistic values for disk-grid statistics are aggregated over the
fixed z-grid: `condition_ii_min` takes the minimum over the grid (the
anti-concentration reading) and `log_abs_L_max` the maximum absolute value
(the worst-case convergence reading). Grid results are samples of the
"almost every z" hypotheses, not proofs, and reports record this.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .conditions import (
    DEFAULT_Z_GRID,
    condition_i_stat,
    condition_ii_stat,
    corrected_trace,
    normalized_log_abs_L,
)
from .eigen import eigenvalues, hermitian_eigenvalues
from .ensembles import (
    GroupKind,
    haar_sample,
    sample_ginibre_real,
    sample_wigner,
)
from .errors import ContractViolationError, NumericFailureError
from .measures import (
    levy_to_semicircle,
    polar_decompose,
    radial_deficit,
    trig_moment,
    wasserstein1_empirical,
)
from .polynomials import critical_points_from_roots, gauss_lucas_check
from .root_models import (
    char_poly_angles,
    conjugate_pair_angles,
    iid_uniform_angles,
    kac_polynomial,
    roots_on_circle,
)
from .rng import RngStream

MODEL_TAGS = (
    "haar_o",
    "haar_so",
    "haar_u",
    "haar_sp",
    "wigner",
    "ginibre_real",
    "iid_uniform",
    "conjugate_pairs",
    "kac",
)

_HAAR_KINDS = {
    "haar_o": GroupKind.ORTHOGONAL,
    "haar_so": GroupKind.SPECIAL_ORTHOGONAL,
    "haar_u": GroupKind.UNITARY,
    "haar_sp": GroupKind.SYMPLECTIC,
}

# models whose roots lie exactly on the unit circle, where Gauss-Lucas is
# enforced samplewise
_CIRCLE_MODELS = {"haar_o", "haar_so", "haar_u", "haar_sp", "iid_uniform", "conjugate_pairs"}

STAT_TAGS = (
    "radial_deficit",
    "root_trig_moment_1",
    "root_trig_moment_2",
    "root_trig_moment_3",
    "root_trig_moment_4",
    "root_trig_moment_5",
    "trig_moment_1",
    "trig_moment_2",
    "trig_moment_3",
    "trig_moment_4",
    "trig_moment_5",
    "condition_i",
    "condition_ii_min",
    "log_abs_L_max",
    "levy_semicircle",
    "gauss_lucas_violations",
)


def max_workers() -> int:
    """Harness parallelism cap: CRITLAB_THREADS env var, else machine parallelism."""
    env = os.environ.get("CRITLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ContractViolationError(f"CRITLAB_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


@dataclass
class ExperimentSpec:
    model: str
    sizes: list[int]
    trials: int
    seed: int
    statistics: list[str]
    z_grid: list[complex] | None = None

    def validate(self) -> None:
        if self.model not in MODEL_TAGS:
            raise ContractViolationError(
                f"model: unknown tag {self.model!r}; expected one of {MODEL_TAGS}"
            )
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ContractViolationError("sizes: need a nonempty list of positive integers")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ContractViolationError("sizes: must be strictly ascending")
        if self.model == "haar_sp" and any(n % 2 for n in self.sizes):
            raise ContractViolationError("sizes: haar_sp requires even sizes")
        if self.trials < 1:
            raise ContractViolationError("trials: must be >= 1")
        if not self.statistics:
            raise ContractViolationError("statistics: need at least one statistic tag")
        for s in self.statistics:
            if s not in STAT_TAGS:
                raise ContractViolationError(
                    f"statistics: unknown tag {s!r}; expected one of {STAT_TAGS}"
                )
        if self.z_grid is not None:
            for z in self.z_grid:
                if abs(complex(z)) >= 1.0:
                    raise ContractViolationError("z_grid: points must lie in the open unit disk")

    def effective_z_grid(self) -> list[complex]:
        return list(self.z_grid) if self.z_grid is not None else list(DEFAULT_Z_GRID)

    def to_dict(self) -> dict:
        d = {
            "model": self.model,
            "sizes": list(self.sizes),
            "trials": self.trials,
            "seed": self.seed,
            "statistics": list(self.statistics),
        }
        if self.z_grid is not None:
            d["z_grid"] = [[complex(z).real, complex(z).imag] for z in self.z_grid]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentSpec":
        try:
            z_grid = d.get("z_grid")
            if z_grid is not None:
                z_grid = [complex(p[0], p[1]) for p in z_grid]
            spec = cls(
                model=d["model"],
                sizes=[int(n) for n in d["sizes"]],
                trials=int(d["trials"]),
                seed=int(d["seed"]),
                statistics=list(d["statistics"]),
                z_grid=z_grid,
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ContractViolationError(f"invalid experiment spec: {exc}") from exc
        spec.validate()
        return spec

    @classmethod
    def from_json_file(cls, path) -> "ExperimentSpec":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ContractViolationError(f"spec file is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


class _Trial:
    """Lazy per-trial quantities shared between the requested statistics."""

    def __init__(self, model: str, n: int, stream: RngStream, z_grid):
        self.model = model
        self.n = n
        self.z_grid = z_grid
        self._cache = {}
        self._sample(stream)

    def _sample(self, stream: RngStream) -> None:
        model, n = self.model, self.n
        if model in _HAAR_KINDS:
            M = haar_sample(_HAAR_KINDS[model], n, stream)
            self.root_angles = char_poly_angles(M, _HAAR_KINDS[model])
            self.roots = roots_on_circle(self.root_angles)
        elif model == "iid_uniform":
            self.root_angles = iid_uniform_angles(n, stream)
            self.roots = roots_on_circle(self.root_angles)
        elif model == "conjugate_pairs":
            if n < 2:
                raise ContractViolationError("conjugate_pairs needs size >= 2")
            self.root_angles = conjugate_pair_angles(n // 2, stream, extra_odd=bool(n % 2))
            self.roots = roots_on_circle(self.root_angles)
        elif model == "wigner":
            eigs = hermitian_eigenvalues(sample_wigner(n, stream)) / np.sqrt(n)
            self.real_eigs = eigs
            self.roots = eigs.astype(np.complex128)
            self.root_angles, _ = polar_decompose(self.roots)
        elif model == "ginibre_real":
            lam = eigenvalues(sample_ginibre_real(n, stream)).values / np.sqrt(n)
            self.roots = lam
            self.root_angles, _ = polar_decompose(lam)
        elif model == "kac":
            coeffs = kac_polynomial(n, stream, "real_gaussian")
            from .polynomials import roots_from_coeffs

            self.roots = roots_from_coeffs(coeffs)
            self.root_angles, _ = polar_decompose(self.roots)
        else:
            raise ContractViolationError(f"unknown model {model!r}")

    @property
    def crit(self):
        if "crit" not in self._cache:
            self._cache["crit"] = critical_points_from_roots(self.roots)
        return self._cache["crit"]

    @property
    def crit_polar(self):
        if "crit_polar" not in self._cache:
            self._cache["crit_polar"] = polar_decompose(self.crit)
        return self._cache["crit_polar"]

    def stat(self, tag: str) -> float:
        if tag == "radial_deficit":
            return radial_deficit(self.crit_polar[1])
        if tag.startswith("root_trig_moment_"):
            return abs(trig_moment(self.root_angles, int(tag.rsplit("_", 1)[1])))
        if tag.startswith("trig_moment_"):
            return abs(trig_moment(self.crit_polar[0], int(tag.rsplit("_", 1)[1])))
        if tag == "condition_i":
            return condition_i_stat(self.root_angles)
        if tag == "condition_ii_min":
            return min(condition_ii_stat(self.root_angles, z) for z in self.z_grid)
        if tag == "log_abs_L_max":
            return max(abs(normalized_log_abs_L(self.root_angles, z)) for z in self.z_grid)
        if tag == "levy_semicircle":
            if self.model != "wigner":
                raise ContractViolationError("levy_semicircle requires the wigner model")
            return levy_to_semicircle(self.real_eigs)
        if tag == "gauss_lucas_violations":
            return 0.0 if gauss_lucas_check(self.roots, self.crit, tol=1e-8) else 1.0
        raise ContractViolationError(f"unknown statistic {tag!r}")


@dataclass
class ConvergenceReport:
    spec: dict
    cells: dict  # stat -> str(size) -> {q10, q50, q90, mean, max}
    trends: dict  # stat -> verdict
    metadata: dict
    values: dict = field(default_factory=dict, repr=False)  # stat -> size -> list

    def validate(self) -> None:
        trials = self.spec["trials"]
        for stat, per_size in self.cells.items():
            for size_key, cell in per_size.items():
                if not cell["q10"] <= cell["q50"] <= cell["q90"]:
                    raise ContractViolationError(
                        f"quantiles out of order for {stat} at n={size_key}"
                    )
                backing = self.values.get(stat, {}).get(int(size_key))
                if backing is not None and len(backing) != trials:
                    raise ContractViolationError(
                        f"{stat} at n={size_key} backed by {len(backing)} values, "
                        f"expected {trials}"
                    )

    def median_series(self, stat: str) -> list[float]:
        per_size = self.cells[stat]
        return [per_size[str(n)]["q50"] for n in self.spec["sizes"]]

    def to_json(self) -> str:
        self.validate()
        payload = {
            "spec": self.spec,
            "cells": self.cells,
            "trends": self.trends,
            "metadata": self.metadata,
        }
        return json.dumps(payload, sort_keys=True, indent=2)


def trend_check(report: ConvergenceReport, stat: str) -> str:
    """'decreasing' iff the median strictly decreases at every size step;
    'flat' if all medians stay within a +/-10% band of the first; else
    'increasing'."""
    if stat not in report.cells:
        raise KeyError(f"statistic {stat!r} not present in report")
    medians = report.median_series(stat)
    if len(medians) < 2:
        raise ContractViolationError("trend check needs at least two sizes")
    if all(b < a for a, b in zip(medians, medians[1:])):
        return "decreasing"
    ref = medians[0]
    band = 0.1 * abs(ref)
    if all(abs(m - ref) <= band for m in medians[1:]):
        return "flat"
    return "increasing"


def _run_trial(spec: ExperimentSpec, size: int, trial: int, z_grid) -> dict:
    stream = RngStream(spec.seed).derive(size, trial)
    try:
        data = _Trial(spec.model, size, stream, z_grid)
        out = {tag: data.stat(tag) for tag in spec.statistics}
        if spec.model in _CIRCLE_MODELS:
            # Gauss-Lucas must hold samplewise for unit-circle root models
            if not gauss_lucas_check(data.roots, data.crit, tol=1e-8):
                raise NumericFailureError("Gauss-Lucas violation", dim=size)
        return out
    except NumericFailureError as exc:
        raise NumericFailureError(
            f"trial failed at size={size} trial={trial}: {exc}", dim=size
        ) from exc


def run_experiment(spec: ExperimentSpec) -> ConvergenceReport:
    """Run every (size, trial) cell of the spec and aggregate quantiles.

    Deterministic given the spec: each cell draws from its own derived RNG
    stream and aggregation sorts by (size, trial). A single failed trial
    aborts the whole report.
    """
    spec.validate()
    z_grid = spec.effective_z_grid()
    jobs = [(si, t) for si in range(len(spec.sizes)) for t in range(spec.trials)]

    workers = max_workers()
    results = {}
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = {
                (si, t): pool.submit(_run_trial, spec, spec.sizes[si], t, z_grid)
                for si, t in jobs
            }
            for key, fut in futs.items():
                results[key] = fut.result()
    else:
        for si, t in jobs:
            results[(si, t)] = _run_trial(spec, spec.sizes[si], t, z_grid)

    values = {tag: {n: [] for n in spec.sizes} for tag in spec.statistics}
    for si, t in sorted(results):
        for tag, v in results[(si, t)].items():
            values[tag][spec.sizes[si]].append(v)

    cells = {}
    for tag in spec.statistics:
        cells[tag] = {}
        for n in spec.sizes:
            arr = np.asarray(values[tag][n], dtype=np.float64)
            q10, q50, q90 = np.quantile(arr, [0.1, 0.5, 0.9])
            cells[tag][str(n)] = {
                "q10": float(q10),
                "q50": float(q50),
                "q90": float(q90),
                "mean": float(np.mean(arr)),
                "max": float(np.max(arr)),
            }

    report = ConvergenceReport(
        spec=spec.to_dict(),
        cells=cells,
        trends={},
        metadata={
            "log_convention": "natural",
            "z_grid": [[z.real, z.imag] for z in map(complex, z_grid)],
            "z_grid_note": "grid results sample the 'almost every z' hypotheses; they are not proofs",
            "thresholds": "pilot-derived",
            "version": __version__,
        },
        values=values,
    )
    if len(spec.sizes) >= 2:
        report.trends = {tag: trend_check(report, tag) for tag in spec.statistics}
    report.validate()
    return report


def clt_trace_experiment(kind: GroupKind, n: int, j_max: int, trials: int, seed: int) -> dict:
    """Wasserstein-1 distances between Re(corrected trace of M^j) samples and
    matched Gaussian reference samples, for j = 1..j_max.

    Returns {j: {"corrected": d, "uncorrected": d_control, "reference_variance": v}}.
    The reference variance is j/2 for the unitary group (real part of a
    variance-j complex Gaussian) and j for the other groups. The uncorrected
    control omits the parity centering and is expected to be worse for even j.
    """
    if j_max < 1 or trials < 1:
        raise ContractViolationError("j_max and trials must be >= 1")
    if n < 4 * j_max + 1:
        raise ContractViolationError(f"need n >= 4*j_max + 1 = {4 * j_max + 1}, got n = {n}")
    base = RngStream(seed)
    corrected = {j: np.empty(trials) for j in range(1, j_max + 1)}
    uncorrected = {j: np.empty(trials) for j in range(1, j_max + 1)}

    def one_trial(t):
        stream = base.derive(1, t)
        M = haar_sample(kind, n, stream)
        spec = eigenvalues(M)
        row = {}
        for j in range(1, j_max + 1):
            ct = corrected_trace(M, kind, j, spectrum=spec)
            row[j] = (ct.value.real, ct.value.real - ct.correction)
        return row

    workers = max_workers()
    if workers > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one_trial, range(trials)))
    else:
        rows = [one_trial(t) for t in range(trials)]
    for t, row in enumerate(rows):
        for j, (c, u) in row.items():
            corrected[j][t] = c
            uncorrected[j][t] = u

    out = {}
    for j in range(1, j_max + 1):
        v = j / 2.0 if kind is GroupKind.UNITARY else float(j)
        ref = base.derive(2, j).generator.standard_normal(trials) * np.sqrt(v)
        out[j] = {
            "corrected": wasserstein1_empirical(corrected[j], ref),
            "uncorrected": wasserstein1_empirical(uncorrected[j], ref),
            "reference_variance": v,
        }
    return out
