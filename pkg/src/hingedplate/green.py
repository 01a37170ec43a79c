"""Certified evaluation of the Green function series.

    G(p, q) = sum_m phi_m(y, w) / (2 pi m^3) sin(m rho) sin(m x),

for the load point ``p = (rho, w)`` and the field point ``q = (x, y)``.
Since ``phi_m`` decreases in ``m`` and ``|sin| <= 1``, truncating after
``M`` modes leaves an error of at most

    phi_{M+1}(y, w) / (2 pi) * sum_{m>M} m^-3 <= phi_{M+1}(y, w) / (4 pi M^2).
"""

from dataclasses import dataclass

import numpy as np

from .core import PlateConfig, Point
from .errors import DomainError, ToleranceUnreachable
from .modes import phi_table

#: Default upper limit on the number of modes.
MODE_CAP = 10**6


@dataclass(frozen=True)
class SeriesValue:
    """Truncated series with a certified bound on the truncation error."""

    value: float
    tail_bound: float
    terms_used: int


@dataclass(frozen=True)
class GridSpec:
    """Tensor grid over the closed plate.

    ``nx`` points on ``[0, pi]`` and ``ny`` points on ``[-ell, ell]``,
    endpoints included.  ``interior=True`` drops the hinged edges
    ``x = 0, pi`` (the long edges ``y = +-ell`` are kept).
    """

    nx: int
    ny: int
    interior: bool = False

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise DomainError("a grid needs at least 2 points per axis")

    def x(self):
        if self.interior:
            return np.linspace(0, np.pi, self.nx + 2)[1:-1]
        return np.linspace(0, np.pi, self.nx)

    def y(self, cfg: PlateConfig):
        return np.linspace(-cfg.ell, cfg.ell, self.ny)

    def describe(self):
        return {"nx": self.nx, "ny": self.ny, "interior": self.interior}


@dataclass(frozen=True)
class GreenField:
    """Green function on a tensor grid of field points (arrays are ``(ny, nx)``)."""

    x: np.ndarray
    y: np.ndarray
    value: np.ndarray
    tail_bound: np.ndarray
    terms_used: np.ndarray


def tail_bounds(phi_next, M):
    """``phi_{M+1} / (4 pi M^2)`` for arrays of ``phi_{M+1}`` and ``M``."""
    return phi_next / (4 * np.pi * np.asarray(M, dtype=float) ** 2)


def _check_tol(tol):
    if not (tol > 0) or not np.isfinite(tol):
        raise DomainError(f"tolerance must be positive and finite, got {tol}")


def _mode_budget(phi1, tol, mode_cap):
    """Smallest M guaranteed to satisfy the bound when phi_{M+1} <= phi_1."""
    M = int(np.ceil(np.sqrt(np.max(phi1) / (4 * np.pi * tol))))
    return max(1, min(M, mode_cap))


def choose_modes(y, w, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Mode tables and the smallest admissible truncation per ``(y, w)`` pair.

    Returns
    -------
    phi : ndarray, shape ``(Mmax + 1, ny, nw)``
        ``phi_m`` for ``m = 1..Mmax+1``.
    M : ndarray of int, shape ``(ny, nw)``
        Smallest ``M`` whose certified tail bound is at most ``tol``.
    tail : ndarray
        The tail bound at that ``M``.
    """
    _check_tol(tol)
    y = np.atleast_1d(np.asarray(y, dtype=float))
    w = np.atleast_1d(np.asarray(w, dtype=float))
    phi1 = phi_table(1, y, w, cfg)[0]
    budget = _mode_budget(phi1, tol, mode_cap)
    # grow the table geometrically; the budget from phi_1 is usually far too large
    Mmax = min(budget, 64)
    while True:
        phi = phi_table(Mmax + 1, y, w, cfg)
        m = np.arange(1, Mmax + 1)[:, None, None]
        tails = tail_bounds(phi[1:], m)  # tails[j] belongs to M = j + 1
        ok = tails <= tol
        if ok[-1].all() or Mmax == budget:
            break
        Mmax = min(budget, 4 * Mmax)
    if not ok[-1].all():
        worst = float(tails[-1].max())
        raise ToleranceUnreachable(
            f"tail bound {worst:.3g} still exceeds tol={tol:g} at the mode cap {mode_cap}")
    M = np.argmax(ok, axis=0) + 1
    tail = np.take_along_axis(tails, (M - 1)[None], axis=0)[0]
    return phi, M, tail


def green_eval(p: Point, q: Point, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Green function ``G(p, q)`` with a certified truncation bound.

    Parameters
    ----------
    p : Point
        Load point ``(rho, w)``.
    q : Point
        Field point ``(x, y)``.
    tol : float
        Requested bound on the truncation error.
    cfg : PlateConfig
    mode_cap : int
        Largest admissible number of modes.

    Returns
    -------
    SeriesValue

    Raises
    ------
    ToleranceUnreachable
        If more than ``mode_cap`` modes would be required.

    Examples
    --------
    >>> cfg = PlateConfig(1.0, 0.2)
    >>> green_eval(Point(1.0, 0.0), Point(0.0, 0.3), 1e-8, cfg).value
    0.0
    """
    p.check(cfg, "load point")
    q.check(cfg, "field point")
    _check_tol(tol)
    if q.x in (0.0, np.pi) or p.x in (0.0, np.pi):
        return SeriesValue(0.0, 0.0, 1)
    phi, M, tail = choose_modes(q.y, p.y, tol, cfg, mode_cap)
    M = int(M[0, 0])
    m = np.arange(1, M + 1)
    terms = phi[:M, 0, 0] / (2 * np.pi * m**3) * np.sin(m * p.x) * np.sin(m * q.x)
    return SeriesValue(float(np.sum(terms[::-1])), float(tail[0, 0]), M)


def green_grid(p: Point, grid: GridSpec, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Green function ``G(p, .)`` on a tensor grid of field points.

    The mode values ``phi_m(y, w)`` are computed once per grid row and
    shared by all ``x`` columns; the sum over modes is a matrix product.

    Returns
    -------
    GreenField
    """
    p.check(cfg, "load point")
    x, y = grid.x(), grid.y(cfg)
    return green_field(p, x, y, tol, cfg, mode_cap)


def green_field(p: Point, x, y, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Green function ``G(p, (x_i, y_j))`` for arbitrary 1-d node arrays."""
    p.check(cfg, "load point")
    _check_tol(tol)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any((x < 0) | (x > np.pi)):
        raise DomainError("field points must have x in [0, pi]")
    if p.x in (0.0, np.pi):
        z = np.zeros((y.size, x.size))
        return GreenField(x, y, z, z.copy(), np.ones_like(z, dtype=int))
    phi, M, tail = choose_modes(y, p.y, tol, cfg, mode_cap)
    phi, M, tail = phi[:, :, 0], M[:, 0], tail[:, 0]
    Mmax = int(M.max())
    m = np.arange(1, Mmax + 1)
    coef = phi[:Mmax].T * (np.sin(m * p.x) / (2 * np.pi * m**3))[None, :]
    coef[m[None, :] > M[:, None]] = 0.0
    value = coef @ np.sin(np.outer(m, x))
    edge = (x == 0.0) | (x == np.pi)
    value[:, edge] = 0.0
    tails = np.broadcast_to(tail[:, None], value.shape).copy()
    tails[:, edge] = 0.0
    terms = np.broadcast_to(M[:, None], value.shape).copy()
    return GreenField(x, y, value, tails, terms)


def lower_bound_margin(rho, x, phi1):
    """Slack of ``G >= phi_1/(2 pi) sin(rho) [sin(x) - (pi^2/6 - 1)]``.

    Returns the right-hand side; callers compare it with the series value.
    """
    return phi1 / (2 * np.pi) * np.sin(rho) * (np.sin(x) - (np.pi**2 / 6 - 1))


@dataclass(frozen=True)
class PositivityScan:
    """Outcome of a positivity scan of ``G`` over interior nodes."""

    min_value: float
    argmin: tuple
    min_margin_over_tail: float
    max_tail: float
    tol: float
    nodes: int

    @property
    def passed(self):
        return self.min_value > 0 and self.min_margin_over_tail > 1


def positivity_scan(cfg: PlateConfig, nx=101, ny=41, tol=1e-6, mode_cap=MODE_CAP):
    """Scan ``G((rho, w), (x, y))`` over interior ``x, rho`` and all ``y, w``.

    ``nx`` interior nodes are used on ``(0, pi)`` for both ``x`` and ``rho``
    and ``ny`` nodes on ``[-ell, ell]`` for both ``y`` and ``w``.  For each
    ``(y, w)`` pair the series is truncated so its certified tail is at most
    ``tol``; if some value is not larger than its tail the scan is repeated
    with a tolerance ten times below the smallest value found.

    Returns
    -------
    PositivityScan
    """
    x = np.linspace(0, np.pi, nx + 2)[1:-1]
    y = np.linspace(-cfg.ell, cfg.ell, ny)
    for _ in range(4):
        phi, M, tail = choose_modes(y, y, tol, cfg, mode_cap)
        Mmax = int(M.max())
        m = np.arange(1, Mmax + 1)
        S = np.sin(np.outer(m, x))  # (M, nx)
        best = (np.inf, None)
        ratio = np.inf
        for i in range(ny):
            for j in range(ny):
                Mi = int(M[i, j])
                a = phi[:Mi, i, j] / (2 * np.pi * m[:Mi] ** 3)
                G = (S[:Mi].T * a) @ S[:Mi]  # G[x, rho]
                gmin = G.min()
                if gmin < best[0]:
                    ix, ir = np.unravel_index(np.argmin(G), G.shape)
                    best = (gmin, (float(x[ix]), float(y[i]), float(x[ir]), float(y[j])))
                ratio = min(ratio, gmin / tail[i, j] if tail[i, j] > 0 else np.inf)
        scan = PositivityScan(float(best[0]), best[1], float(ratio), float(tail.max()),
                              tol, nx * nx * ny * ny)
        if scan.passed or best[0] <= 0:
            return scan
        tol = best[0] / 10
    return scan
