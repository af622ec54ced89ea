"""Brute-force shortest-path validation for the cover distance.

Discretizes an annular window of the cover into a weighted grid graph
(edge weight sqrt(dr^2 + rbar^2 dzeta^2), rbar the mean radius of the edge)
and runs Dijkstra.  Every grid edge is at least as long as the true geodesic
between its endpoints, so oracle distances bound the true distance from
above and converge to it as the grid refines.

Floating point throughout: this module exists to cross-check the exact
closed form by an independent method, not to be exact itself.  Radial levels
are log-spaced by default so cells keep the same shape at every radius
(the geometry is scale-invariant); query coordinates are inserted as extra
grid levels so queries never pay a snapping error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import OutOfWindow

_OFFSETS = {
    "4-neighbor": ((0, 1), (1, 0)),
    "8-neighbor+knight": (
        (0, 1),
        (1, 0),
        (1, 1),
        (1, -1),
        (1, 2),
        (2, 1),
        (1, -2),
        (2, -1),
    ),
}

_SPACINGS = ("log", "linear")


@dataclass(frozen=True)
class GridConfig:
    """Annular window and resolution for the oracle grid."""

    r_min: float
    r_max: float
    zeta_min: float
    zeta_max: float
    n_r: int = 256
    n_zeta: int = 256
    connectivity: str = "8-neighbor+knight"
    spacing: str = "log"

    def __post_init__(self):
        if self.r_min <= 0:
            raise ValueError("r_min must be positive (the puncture is not a point)")
        if self.r_min >= self.r_max or self.zeta_min >= self.zeta_max:
            raise ValueError("empty window")
        if self.n_r < 16 or self.n_zeta < 16:
            raise ValueError("need at least 16 levels per axis")
        if self.connectivity not in _OFFSETS:
            raise ValueError(f"connectivity must be one of {sorted(_OFFSETS)}")
        if self.spacing not in _SPACINGS:
            raise ValueError(f"spacing must be one of {_SPACINGS}")


def window_for(
    points: list[tuple[float, float]],
    n_r: int = 256,
    n_zeta: int = 256,
    connectivity: str = "8-neighbor+knight",
    spacing: str = "log",
) -> GridConfig:
    """A window containing `points` with margin, deep enough toward the
    puncture that through-origin dips are representable."""
    rs = [p[0] for p in points]
    zs = [p[1] for p in points]
    r_lo = min(0.01 * min(rs), 0.5 * min(rs))
    r_hi = 1.2 * max(rs)
    span = max(zs) - min(zs)
    pad = 0.15 * span + 0.3
    return GridConfig(
        r_min=r_lo,
        r_max=r_hi,
        zeta_min=min(zs) - pad,
        zeta_max=max(zs) + pad,
        n_r=n_r,
        n_zeta=n_zeta,
        connectivity=connectivity,
        spacing=spacing,
    )


def _check_margin(cfg: GridConfig, point: tuple[float, float]) -> None:
    r, z = point
    margin_r = 0.1 * (cfg.r_max - cfg.r_min)
    margin_z = 0.1 * (cfg.zeta_max - cfg.zeta_min)
    if not (cfg.r_min + margin_r <= r <= cfg.r_max - margin_r):
        raise OutOfWindow(f"radius {r} within 10% of the window boundary")
    if not (cfg.zeta_min + margin_z <= z <= cfg.zeta_max - margin_z):
        raise OutOfWindow(f"angle {z} within 10% of the window boundary")


def _levels(lo: float, hi: float, n: int, spacing: str, extra) -> np.ndarray:
    if spacing == "log":
        base = np.geomspace(lo, hi, n)
    else:
        base = np.linspace(lo, hi, n)
    if extra:
        base = np.concatenate([base, np.asarray(sorted(extra), dtype=float)])
    return np.unique(base)


def _radial_levels(cfg: GridConfig, query_radii) -> np.ndarray:
    """Radial levels: a dense band around the query radii plus a coarse deep
    segment toward the puncture.

    Radial movement telescopes exactly on any spacing, so the deep segment
    (used only by through-origin dips) can be coarse; the band is where
    geodesics run obliquely and needs cells of balanced shape.
    """
    if cfg.spacing == "linear":
        return _levels(cfg.r_min, cfg.r_max, cfg.n_r, "linear", query_radii)
    band_lo = 0.4 * min(query_radii)
    if band_lo <= cfg.r_min * 1.5:
        return _levels(cfg.r_min, cfg.r_max, cfg.n_r, "log", query_radii)
    n_deep = max(8, cfg.n_r // 5)
    deep = np.geomspace(cfg.r_min, band_lo, n_deep)
    band = np.geomspace(band_lo, cfg.r_max, cfg.n_r - n_deep)
    return np.unique(np.concatenate([deep, band, np.asarray(sorted(query_radii))]))


def _build_graph(r: np.ndarray, z: np.ndarray, connectivity: str) -> csr_matrix:
    nz = len(z)
    rows, cols, weights = [], [], []
    for di, dj in _OFFSETS[connectivity]:
        i0 = np.arange(0, len(r) - di)
        j0 = np.arange(max(0, -dj), nz - max(0, dj))
        ii, jj = np.meshgrid(i0, j0, indexing="ij")
        dr = r[ii + di] - r[ii]
        rbar = (r[ii + di] + r[ii]) / 2.0
        dzeta = z[jj + dj] - z[jj]
        weight = np.sqrt(dr * dr + (rbar * dzeta) ** 2)
        rows.append((ii * nz + jj).ravel())
        cols.append(((ii + di) * nz + (jj + dj)).ravel())
        weights.append(weight.ravel())
    n = len(r) * nz
    return csr_matrix(
        (np.concatenate(weights), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n),
    )


def _node_index(levels_r: np.ndarray, levels_z: np.ndarray, point) -> int:
    r, z = point
    i = int(np.searchsorted(levels_r, r))
    j = int(np.searchsorted(levels_z, z))
    i = min(i, len(levels_r) - 1)
    j = min(j, len(levels_z) - 1)
    if not math.isclose(levels_r[i], r, rel_tol=1e-12, abs_tol=1e-12):
        raise OutOfWindow(f"radius {r} does not lie on a grid level")
    if not math.isclose(levels_z[j], z, rel_tol=1e-12, abs_tol=1e-12):
        raise OutOfWindow(f"angle {z} does not lie on a grid level")
    return i * len(levels_z) + j


def oracle_distances(
    cfg: GridConfig,
    source: tuple[float, float],
    targets: list[tuple[float, float]],
) -> list[float]:
    """Shortest grid-path lengths from `source` to each target.

    One Dijkstra run serves all targets.  Source and target coordinates are
    inserted as grid levels, so the reported lengths are genuine path lengths
    between the exact query points.
    """
    for point in (source, *targets):
        _check_margin(cfg, point)
    extra_r = {source[0], *(p[0] for p in targets)}
    extra_z = {source[1], *(p[1] for p in targets)}
    levels_r = _radial_levels(cfg, extra_r)
    # angle levels stay linear regardless of radial spacing
    levels_z = _levels(cfg.zeta_min, cfg.zeta_max, cfg.n_zeta, "linear", extra_z)
    graph = _build_graph(levels_r, levels_z, cfg.connectivity)
    source_idx = _node_index(levels_r, levels_z, source)
    dist = dijkstra(graph, directed=False, indices=source_idx)
    return [float(dist[_node_index(levels_r, levels_z, p)]) for p in targets]


def oracle_distance(
    cfg: GridConfig, a: tuple[float, float], b: tuple[float, float]
) -> float:
    """Shortest grid-path length between two standard points."""
    return oracle_distances(cfg, a, [b])[0]
