"""Command-line surface.

Subcommands: sample, critical, figure, verify, report. Every command is
deterministic given --seed. Exit codes: 0 success, 1 check/runtime failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

import numpy as np

from . import __version__
from .ensembles import (
    GroupKind,
    haar_sample,
    membership_residual,
    sample_complex_gaussian_matrix,
    sample_ginibre_real,
    sample_real_gaussian_matrix,
    sample_wigner,
)
from .errors import CritlabError, InvalidDimensionError
from .figures import FIG1_DEFAULT_N, FIG2_DEFAULT_N, fig1_data, fig2_data
from .harness import ExperimentSpec, run_experiment
from .io_utils import (
    read_points_csv,
    write_angles_csv,
    write_matrix_csv,
    write_points_csv,
    write_scatter_svg,
    write_series_csv,
)
from .measures import polar_decompose, radial_deficit
from .polynomials import critical_points_from_roots, gauss_lucas_check
from .rng import RngStream
from .root_models import conjugate_pair_angles, iid_uniform_angles
from .verify import SUITES, run_suite

_MATRIX_MODELS = {
    "haar-o": lambda n, rng: haar_sample(GroupKind.ORTHOGONAL, n, rng),
    "haar-so": lambda n, rng: haar_sample(GroupKind.SPECIAL_ORTHOGONAL, n, rng),
    "haar-u": lambda n, rng: haar_sample(GroupKind.UNITARY, n, rng),
    "haar-sp": lambda n, rng: haar_sample(GroupKind.SYMPLECTIC, n, rng),
    "gaussian-real": sample_real_gaussian_matrix,
    "gaussian-complex": sample_complex_gaussian_matrix,
    "wigner": sample_wigner,
    "ginibre": sample_ginibre_real,
}

_MATRIX_GROUP_KINDS = {
    "haar-o": GroupKind.ORTHOGONAL,
    "haar-so": GroupKind.SPECIAL_ORTHOGONAL,
    "haar-u": GroupKind.UNITARY,
    "haar-sp": GroupKind.SYMPLECTIC,
}

_ANGLE_MODELS = ("iid-uniform", "conjugate-pairs")


def bundled_spec_path(name: str):
    """Path to a bundled experiment spec (specs/ directory shipped with the package)."""
    return resources.files("critlab").joinpath("specs", name)


def _cmd_sample(args) -> int:
    rng = RngStream(args.seed)
    if args.model in _MATRIX_MODELS:
        try:
            M = _MATRIX_MODELS[args.model](args.n, rng)
        except InvalidDimensionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        write_matrix_csv(args.out, M)
        kind = _MATRIX_GROUP_KINDS.get(args.model)
        if kind is not None:
            print(f"membership residual: {membership_residual(M, kind):.3e}")
        print(f"wrote {args.out}")
        return 0
    if args.model == "iid-uniform":
        angles = iid_uniform_angles(args.n, rng)
    else:
        if args.n < 2:
            print("error: conjugate-pairs needs n >= 2", file=sys.stderr)
            return 2
        angles = conjugate_pair_angles(args.n // 2, rng, extra_odd=bool(args.n % 2))
    write_angles_csv(args.out, angles)
    print(f"wrote {args.out}")
    return 0


def _cmd_critical(args) -> int:
    roots = read_points_csv(args.input)
    if roots.size < 2:
        print("error: degree must be >= 2 (need at least two roots)", file=sys.stderr)
        return 1
    crit = critical_points_from_roots(roots)
    write_points_csv(args.out, crit)
    _, radii = polar_decompose(crit)
    print(f"radial deficit: {radial_deficit(radii)!r}")
    print(f"gauss-lucas check: {gauss_lucas_check(roots, crit)}")
    print(f"wrote {args.out}")
    return 0


def _cmd_figure(args) -> int:
    if args.figure == "fig1":
        n = args.n if args.n is not None else FIG1_DEFAULT_N
        zeros, crit = fig1_data(args.seed, n)
        axis_limit = 1.5
    else:
        n = args.n if args.n is not None else FIG2_DEFAULT_N
        zeros, crit = fig2_data(args.seed, n)
        axis_limit = 1.5 * float(max(np.max(np.abs(zeros)), np.max(np.abs(crit)), 1.0))
    series = [("zeros", zeros), ("critical", crit)]
    if args.format == "csv":
        write_series_csv(args.out, series)
    else:
        write_scatter_svg(args.out, series, axis_limit)
    print(f"wrote {args.out} ({len(zeros)} zeros, {len(crit)} critical points)")
    return 0


def _cmd_verify(args) -> int:
    passed, details = run_suite(args.suite, seed=args.seed)
    summary = {"suite": args.suite, "passed": passed, "details": details}
    print(json.dumps(summary, sort_keys=True, default=str))
    return 0 if passed else 1


def _cmd_report(args) -> int:
    spec = ExperimentSpec.from_json_file(args.spec)
    report = run_experiment(spec)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(report.to_json() + "\n")
    if args.values_csv:
        lines = ["stat,size,trial,value"]
        for stat in spec.statistics:
            for n in spec.sizes:
                for t, v in enumerate(report.values[stat][n]):
                    lines.append(f"{stat},{n},{t},{v!r}")
        with open(args.values_csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    for stat, verdict in sorted(report.trends.items()):
        print(f"{stat}: {verdict}")
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critlab",
        description="Random-matrix and random-polynomial critical point laboratory",
    )
    parser.add_argument("--version", action="version", version=f"critlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample a random matrix or angle set to CSV")
    p.add_argument(
        "--model",
        required=True,
        choices=sorted(_MATRIX_MODELS) + list(_ANGLE_MODELS),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("critical", help="critical points of a root-form polynomial")
    p.add_argument("--in", dest="input", required=True, help="roots CSV (re,im)")
    p.add_argument("--out", required=True, help="critical points CSV")
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("figure", help="regenerate figure scatter data")
    p.add_argument("--figure", required=True, choices=("fig1", "fig2"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--seed", type=int, default=20260823)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="run an experiment spec and write a report")
    p.add_argument("--spec", required=True, help="experiment spec JSON path")
    p.add_argument("--out", required=True, help="report JSON path")
    p.add_argument("--values-csv", default=None, help="optional raw per-trial values CSV")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CritlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
