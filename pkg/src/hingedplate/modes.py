"""Mode functions of the Green function.

The m-th Fourier coefficient of the Green function is, up to the factor
``1/(2 pi m^3)``,

    phi_m(y, w) = exp(-z) g(s, k, z) + h(s, k, z),   z = m*ell,

with ``k = y/ell``, ``s = w/ell`` and ``h = (1 + z|k-s|) exp(-z|k-s|)``.
The boundary part ``exp(-z) g`` is evaluated through the stable expansions
of :mod:`hingedplate.expansions`; the four limit coefficients ``cbar`` give
an independent second formula for the same quantity.
"""

from dataclasses import dataclass

import numpy as np

from . import expansions
from .core import (F_pair_mantissa, PlateConfig, ScaledCoords, check_scaled, check_sigma,
                   sum_scaled)
from .errors import DomainError

#: Gauss-Legendre nodes used to integrate -phi_z between consecutive modes.
GAP_NODES = 16


@dataclass(frozen=True)
class ModeValue:
    """``phi = g_part + h_part`` at one point."""

    value: float
    g_part: float
    h_part: float


def h_part(s, k, z):
    """Whole-line part ``(1 + z|k-s|) exp(-z|k-s|)``, in ``(0, 1]``."""
    d = np.asarray(z) * np.abs(np.asarray(k) - np.asarray(s))
    return (1 + d) * np.exp(-d)


def g_part(s, k, z, sigma):
    """Boundary part ``exp(-z) g(s, k, z)`` (vectorized, finite for z <= 1e5)."""
    check_scaled(s, k, z)
    return expansions.evaluate("phi_g", sigma, z, k, s).value()


def phi_values(s, k, z, sigma):
    """Vectorized ``phi(s, k, z)``."""
    return g_part(s, k, z, sigma) + h_part(s, k, z)


def phi_scaled(c: ScaledCoords, sigma):
    """Mode function in scaled variables.

    Parameters
    ----------
    c : ScaledCoords
        ``s = w/ell``, ``k = y/ell``, ``z = m*ell``.
    sigma : float
        Poisson ratio.

    Returns
    -------
    ModeValue

    Examples
    --------
    >>> v = phi_scaled(ScaledCoords(0.5, 0.5, 1.0), 0.2)
    >>> v.h_part
    1.0
    """
    g = float(g_part(c.s, c.k, c.z, sigma))
    h = float(h_part(c.s, c.k, c.z))
    return ModeValue(g + h, g, h)


def _coords(m, y, w, cfg):
    m = np.asarray(m)
    if np.any(m < 1) or np.any(m != np.floor(m)):
        raise DomainError("mode index m must be a positive integer")
    y, w = np.asarray(y, dtype=float), np.asarray(w, dtype=float)
    if np.any(np.abs(y) > cfg.ell * (1 + 1e-12)) or np.any(np.abs(w) > cfg.ell * (1 + 1e-12)):
        raise DomainError(f"y and w must lie in [-ell, ell] with ell={cfg.ell}")
    s = np.clip(w / cfg.ell, -1, 1)
    k = np.clip(y / cfg.ell, -1, 1)
    return s, k, m * cfg.ell


def phi_m(m, y, w, cfg: PlateConfig):
    """``phi_m(y, w)``; broadcasts over array arguments.

    Examples
    --------
    >>> cfg = PlateConfig(1.0, 0.2)
    >>> bool(phi_m(2, 0.3, -0.4, cfg) < phi_m(1, 0.3, -0.4, cfg))
    True
    """
    s, k, z = _coords(m, y, w, cfg)
    return phi_values(s, k, z, cfg.sigma)


def phi_table(M, y, w, cfg: PlateConfig):
    """``phi_m(y_i, w_j)`` for ``m = 1..M`` on a tensor grid, shape ``(M, ny, nw)``."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    w = np.atleast_1d(np.asarray(w, dtype=float))
    s, k, _ = _coords(1, y, w, cfg)
    z = np.arange(1, M + 1) * cfg.ell
    check_scaled(0.0, 0.0, z)
    r = expansions.evaluate_grid("phi_g", cfg.sigma, z, k, s)
    g = r.value()  # (nw, ny, M)
    h = h_part(s[:, None, None], k[None, :, None], z[None, None, :])
    return np.transpose(g + h, (2, 1, 0))


def phi_limit(s, k, sigma):
    """Large-z limit of ``exp(-z) g(s, k, z)``.

    The limit vanishes except at the two corners ``k = s = +-1``, where it
    equals ``(4 + (1+sigma)^2) / ((1-sigma)(3+sigma))``.

    Examples
    --------
    >>> phi_limit(0.3, -0.7, 0.2)
    0.0
    >>> round(phi_limit(1, 1, 0.2), 12)
    2.125
    """
    check_sigma(sigma)
    if abs(s) > 1 or abs(k) > 1:
        raise DomainError("scaled coordinates s, k must lie in [-1, 1]")
    if k == s and abs(k) == 1:
        return (4 + (1 + sigma) ** 2) / ((1 - sigma) * (3 + sigma))
    return 0.0


def phi_z(s, k, z, sigma):
    """z-derivative of ``phi`` in scaled form.

    ``phi_z = exp(-z) (g_z - g) + h_z`` with ``g_z`` from the analytic
    derivatives of the auxiliary functions.
    """
    check_scaled(s, k, z)
    r = expansions.evaluate("gmono", sigma, z, k, s)
    d = np.abs(np.asarray(k) - np.asarray(s))
    z = np.asarray(z, dtype=float)
    return sum_scaled([(r.mantissa, r.exponent - z), (-(d * d) * z, -z * d)])


def mode_gap(m, y, w, cfg: PlateConfig):
    """``phi_m(y, w) - phi_{m+1}(y, w)`` in scaled form.

    For large ``m*ell`` the difference falls below the resolution of
    ``phi_m`` itself, so it is computed as the integral of ``-phi_z`` over
    ``[m ell, (m+1) ell]`` by Gauss-Legendre quadrature, summed in scaled
    arithmetic.  Broadcasts over ``m``, ``y`` and ``w``.
    """
    s, k, z0 = _coords(m, y, w, cfg)
    x, wq = np.polynomial.legendre.leggauss(GAP_NODES)
    s, k, z0 = np.broadcast_arrays(s, k, z0)
    zq = z0[..., None] + cfg.ell * (1 + x) / 2
    check_scaled(0.0, 0.0, zq)
    ps = phi_z(s[..., None], k[..., None], zq, cfg.sigma)
    with np.errstate(divide="ignore"):
        logw = np.log(wq * cfg.ell / 2)
    total = sum_scaled([(-ps.mantissa[..., i], ps.exponent[..., i] + logw[i])
                         for i in range(GAP_NODES)])
    return total


def gap_table(M, y, w, cfg: PlateConfig):
    """``phi_m - phi_{m+1}`` for ``m = 1..M`` on a tensor grid, as log-magnitude and sign.

    Returns
    -------
    log_gap, sign : ndarray
        Arrays of shape ``(M, ny, nw)``.
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    w = np.atleast_1d(np.asarray(w, dtype=float))
    s, k, _ = _coords(1, y, w, cfg)
    x, wq = np.polynomial.legendre.leggauss(GAP_NODES)
    m = np.arange(1, M + 1)
    zq = (m[:, None] * cfg.ell + cfg.ell * (1 + x)[None, :] / 2).ravel()
    check_scaled(0.0, 0.0, zq)
    r = expansions.evaluate_grid("gmono", cfg.sigma, zq, k, s)  # (nw, ny, M*Q)
    d = np.abs(k[None, :, None] - s[:, None, None])
    zz = zq[None, None, :]
    wts = np.tile(wq * cfg.ell / 2, M)[None, None, :]
    # -phi_z = -exp(-z) gmono + d^2 z exp(-z d), both weighted
    m1, e1 = -r.mantissa * wts, r.exponent - zz
    m2, e2 = np.broadcast_to(d * d * zz * wts, m1.shape), np.broadcast_to(-zz * d, m1.shape)
    e2 = np.where(m2 != 0, e2, -np.inf)
    e1 = np.where(m1 != 0, e1, -np.inf)
    shape = m1.shape[:2] + (M, GAP_NODES)
    m1, e1, m2, e2 = (a.reshape(shape) for a in (m1, e1, m2, e2))
    ref = np.maximum(e1.max(axis=-1), e2.max(axis=-1))
    ref = np.where(np.isfinite(ref), ref, 0.0)[..., None]
    tot = (m1 * np.exp(e1 - ref)).sum(axis=-1) + (m2 * np.exp(e2 - ref)).sum(axis=-1)
    with np.errstate(divide="ignore"):
        log_gap = np.log(np.abs(tot)) + ref[..., 0]
    return np.transpose(log_gap, (2, 1, 0)), np.transpose(np.sign(tot), (2, 1, 0))


def cbar_coeffs(m, w, cfg: PlateConfig, xp=np):
    """Limit coefficients ``cbar_1..cbar_4`` of the box-load solution.

    As the load shrinks to a point at ``(rho, w)`` the modal coefficient
    becomes ``cbar_1 cosh(my) + cbar_2 sinh(my) + cbar_3 y cosh(my) +
    cbar_4 y sinh(my) + Phibar_m(y, w)``.

    With ``xp=numpy`` the hyperbolic products are formed in scaled
    arithmetic so the coefficients stay finite for large ``m*ell``; with
    ``xp=mpmath`` the literal formulas are used at the working precision.
    The prefactor of ``cbar_3`` and ``cbar_4`` is ``exp(-m ell)/(4 m^2 F)``;
    with ``2 m^2`` the boundary conditions at ``y = +-ell`` fail.
    """
    sg = cfg.sigma
    ell = cfg.ell
    z = m * ell
    r = m * w
    if xp is np:
        Cl = (1 + np.exp(-2 * z)) / 2
        Sl = -np.expm1(-2 * z) / 2
        ar = abs(r)
        Cw = (1 + np.exp(-2 * ar)) / 2
        Sw = np.sign(r) * -np.expm1(-2 * ar) / 2
        Fm, Fbm = F_pair_mantissa(z, sg)
        fac = np.exp(ar - 2 * z)
        F, Fb = Fm / fac, Fbm / fac
    else:
        Cl, Sl, Cw, Sw = xp.cosh(z), xp.sinh(z), xp.cosh(r), xp.sinh(r)
        F = (3 + sg) / 2 * xp.sinh(2 * z) - z * (1 - sg)
        Fb = (3 + sg) / 2 * xp.sinh(2 * z) + z * (1 - sg)
        F, Fb = F * xp.exp(z), Fb * xp.exp(z)
    a1 = 1 - sg
    quad = z * z * a1 + z * a1
    P = 1 + sg - z * a1
    Q = 2 + z * a1
    c1 = ((quad + (1 + sg) ** 2 / a1) * Sl * Cw + (quad + 4 / a1) * Cl * Cw
          - Q * r * Cl * Sw + P * r * Sl * Sw) / (4 * m**3 * F)
    c2 = ((quad + (1 + sg) ** 2 / a1) * Sw * Cl + (quad + 4 / a1) * Sl * Sw
          - Q * r * Sl * Cw + P * r * Cl * Cw) / (4 * m**3 * Fb)
    c3 = (P * Sw * Cl + a1 * r * Sl * Cw - Q * Sl * Sw + a1 * r * Cl * Cw) / (4 * m**2 * Fb)
    c4 = (P * Sl * Cw + a1 * r * Sw * Sl - Q * Cl * Cw + a1 * r * Cl * Sw) / (4 * m**2 * F)
    return c1, c2, c3, c4


def cbar_assembly(m, y, w, cfg: PlateConfig, dps=None):
    """``phi_m(y, w) / (4 m^3)`` assembled from the limit coefficients.

    The four hyperbolic terms cancel to many digits, so the sum is formed
    in mpmath with enough precision for ``m*ell``.
    """
    import mpmath as mp

    z = m * cfg.ell
    if dps is None:
        dps = 25 + int(2 * z / np.log(10))
    with mp.workdps(dps):
        y_, w_ = mp.mpf(y), mp.mpf(w)
        c1, c2, c3, c4 = cbar_coeffs(m, w_, cfg, xp=mp)
        my = m * y_
        d = m * abs(y_ - w_)
        Phibar = (1 + d) * mp.exp(-d) / (4 * m**3)
        total = (c1 * mp.cosh(my) + c2 * mp.sinh(my) + c3 * y_ * mp.cosh(my)
                 + c4 * y_ * mp.sinh(my) + Phibar)
        return float(total)
