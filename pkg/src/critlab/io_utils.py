"""CSV and SVG emission.

CSV convention: two real columns per complex value (re, im), mandatory
header, '.' decimal separator, no locale. Floats are written with repr(),
which round-trips exactly and keeps output byte-deterministic.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolationError


def _fmt(x: float) -> str:
    return repr(float(x))


def write_matrix_csv(path, M) -> None:
    """One row per matrix row; columns re_0, im_0, re_1, im_1, ..."""
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[1]
    header = ",".join(f"re_{j},im_{j}" for j in range(n))
    lines = [header]
    for row in M:
        lines.append(",".join(f"{_fmt(v.real)},{_fmt(v.imag)}" for v in row))
    _write_lines(path, lines)


def write_points_csv(path, points) -> None:
    """Complex points as two columns with header re,im."""
    pts = np.asarray(points, dtype=np.complex128).ravel()
    lines = ["re,im"]
    lines.extend(f"{_fmt(p.real)},{_fmt(p.imag)}" for p in pts)
    _write_lines(path, lines)


def write_angles_csv(path, angles) -> None:
    """Single-column CSV of radians with header angle."""
    a = np.asarray(angles, dtype=np.float64).ravel()
    lines = ["angle"]
    lines.extend(_fmt(x) for x in a)
    _write_lines(path, lines)


def write_series_csv(path, series) -> None:
    """Labeled scatter series: header re,im,series; one row per point.

    `series` is a list of (label, complex points) pairs.
    """
    lines = ["re,im,series"]
    for label, pts in series:
        for p in np.asarray(pts, dtype=np.complex128).ravel():
            lines.append(f"{_fmt(p.real)},{_fmt(p.imag)},{label}")
    _write_lines(path, lines)


def read_points_csv(path) -> np.ndarray:
    """Parse a re,im CSV back into a complex array."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ContractViolationError(f"{path}: empty file")
    body = lines[1:] if not _looks_numeric(lines[0]) else lines
    pts = []
    for i, ln in enumerate(body):
        parts = ln.split(",")
        if len(parts) < 2:
            raise ContractViolationError(f"{path}: line {i + 1}: expected re,im columns")
        try:
            pts.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ContractViolationError(f"{path}: line {i + 1}: {exc}") from exc
    if not pts:
        raise ContractViolationError(f"{path}: no data rows")
    return np.array(pts, dtype=np.complex128)


def _looks_numeric(line: str) -> bool:
    try:
        float(line.split(",")[0])
        return True
    except ValueError:
        return False


def _write_lines(path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def write_scatter_svg(path, series, axis_limit: float) -> None:
    """Plain scatter SVG: fixed 600x600 viewport, unit-circle guide, 3px markers.

    `series` is a list of (label, complex points); coordinates are mapped from
    [-axis_limit, axis_limit]^2 onto the viewport.
    """
    size = 600.0
    half = size / 2.0
    scale = half / axis_limit

    def sx(re):
        return half + re * scale

    def sy(im):
        return half - im * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
        f'viewBox="0 0 600 600">',
        '<rect width="600" height="600" fill="white"/>',
        f'<circle cx="{half}" cy="{half}" r="{scale}" fill="none" '
        f'stroke="#999999" stroke-width="1"/>',
    ]
    for idx, (label, pts) in enumerate(series):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        parts.append(f'<g id="{label}" fill="{color}" fill-opacity="0.7">')
        for p in np.asarray(pts, dtype=np.complex128).ravel():
            parts.append(f'<circle cx="{_fmt(sx(p.real))}" cy="{_fmt(sy(p.imag))}" r="3"/>')
        parts.append("</g>")
    parts.append("</svg>")
    _write_lines(path, parts)
