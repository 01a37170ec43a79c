"""Plate configuration, coordinates and overflow-safe hyperbolic building blocks.

The plate occupies ``(0, pi) x (-ell, ell)``: hinged on the short edges
``x = 0, pi`` and free on the long edges ``y = +-ell``.  Mode ``m`` of the
Green function depends on ``(y, w)`` only through the scaled coordinates
``k = y/ell``, ``s = w/ell`` and ``z = m*ell``.

Quantities that grow like ``exp(2z)`` are returned as :class:`Scaled` pairs
``mantissa * exp(exponent)`` so that nothing overflows for z up to 1e5.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError

#: Poisson ratios closer than this to 1 are rejected (every coefficient
#: carries a factor 1/(1 - sigma)).
SIGMA_ONE_GAP = 1e-6
#: Below this z, F and Fbar use their Maclaurin expansions.
Z_SERIES = 1e-6
#: Largest accepted z.  Values up to 1e5 are the documented working
#: range; the cap is higher so that long series (up to 1e6 modes on plates
#: with ell up to 10) stay admissible.
Z_MAX = 1e7


@dataclass(frozen=True)
class PlateConfig:
    """Half-width ``ell`` and Poisson ratio ``sigma`` of the plate.

    ``experimental_sigma`` admits ``sigma`` in ``(-1, 0)``, where positivity
    of the Green function is conjectured but not proved.
    """

    ell: float
    sigma: float
    experimental_sigma: bool = False

    def __post_init__(self):
        ell, sigma = float(self.ell), float(self.sigma)
        if not np.isfinite(ell) or ell <= 0:
            raise DomainError(f"plate half-width must be positive, got ell={self.ell}")
        if not np.isfinite(sigma):
            raise DomainError(f"Poisson ratio must be finite, got sigma={self.sigma}")
        if abs(1 - sigma) < SIGMA_ONE_GAP:
            raise DomainError(
                f"sigma={sigma} is too close to 1: the mode coefficients divide by 1 - sigma")
        if self.experimental_sigma:
            ok = -1 < sigma < 1
        else:
            ok = 0 <= sigma < 1
        if not ok:
            rng = "(-1, 1) with experimental_sigma" if self.experimental_sigma else "[0, 1)"
            raise DomainError(f"sigma={sigma} outside {rng}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class Point:
    """A point ``(x, y)`` of the closed plate."""

    x: float
    y: float

    def check(self, cfg: PlateConfig, name="point"):
        """Raise :class:`DomainError` unless the point lies in the closed plate."""
        if not (0 <= self.x <= np.pi) or not np.isfinite(self.x):
            raise DomainError(f"{name}: x={self.x} outside [0, pi]")
        if not abs(self.y) <= cfg.ell * (1 + 1e-12):
            raise DomainError(f"{name}: |y|={abs(self.y)} exceeds ell={cfg.ell}")
        return self


@dataclass(frozen=True)
class ScaledCoords:
    """Scaled coordinates ``s = w/ell``, ``k = y/ell``, ``z = m*ell``."""

    s: float
    k: float
    z: float

    def __post_init__(self):
        check_scaled(self.s, self.k, self.z)


def check_scaled(s, k, z):
    """Validate (array) scaled coordinates."""
    s, k, z = np.asarray(s), np.asarray(k), np.asarray(z)
    if np.any(np.abs(s) > 1 + 1e-12) or np.any(np.abs(k) > 1 + 1e-12):
        raise DomainError("scaled coordinates s, k must lie in [-1, 1]")
    if np.any(~(z > 0)):
        raise DomainError("z = m*ell must be positive")
    if np.any(z > Z_MAX):
        raise DomainError(f"z exceeds the supported range {Z_MAX:g}")


def check_sigma(sigma):
    if abs(1 - sigma) < SIGMA_ONE_GAP:
        raise DomainError(
            f"sigma={sigma} is too close to 1: the mode coefficients divide by 1 - sigma")


class Scaled(NamedTuple):
    """A value represented as ``mantissa * exp(exponent)``."""

    mantissa: np.ndarray
    exponent: np.ndarray

    def value(self):
        """Plain value; may overflow to inf or underflow to 0."""
        with np.errstate(over="ignore", under="ignore"):
            return self.mantissa * np.exp(self.exponent)

    def log(self):
        """Natural log of the absolute value."""
        with np.errstate(divide="ignore"):
            return np.log(np.abs(self.mantissa)) + self.exponent


def sum_scaled(parts):
    """Sum ``(mantissa, exponent)`` pairs relative to the largest live exponent.

    Returns a :class:`Scaled`; pairs with zero mantissa do not influence
    the reference exponent.
    """
    arrs = np.broadcast_arrays(*[np.asarray(p[0], dtype=float) for p in parts],
                               *[np.asarray(p[1], dtype=float) for p in parts])
    n = len(parts)
    M, E = np.stack(arrs[:n]), np.stack(arrs[n:])
    E = np.where(M != 0, E, -np.inf)
    ref = E.max(axis=0)
    ref = np.where(np.isfinite(ref), ref, 0.0)
    with np.errstate(under="ignore"):
        total = (M * np.exp(E - ref)).sum(axis=0)
    return Scaled(total, ref)


def scaled_cosh(x):
    """``cosh(x)`` as ``Scaled`` with exponent ``|x|``."""
    a = np.abs(np.asarray(x, dtype=float))
    return Scaled((1 + np.exp(-2 * a)) / 2, a)


def scaled_sinh(x):
    """``sinh(x)`` as ``Scaled`` with exponent ``|x|``."""
    x = np.asarray(x, dtype=float)
    a = np.abs(x)
    return Scaled(np.sign(x) * -np.expm1(-2 * a) / 2, a)


def _z(z):
    z = np.asarray(z, dtype=float)
    if np.any(~(z > 0)):
        raise DomainError("z must be positive")
    return z


def F_pair_mantissa(z, sigma):
    """``F exp(-2z)`` and ``Fbar exp(-2z)`` as plain arrays (no validation)."""
    z = np.asarray(z, dtype=float)
    with np.errstate(over="ignore"):
        e2 = np.exp(-2 * z)
        half = (3 + sigma) / 4 * -np.expm1(-4 * z)
        lin = z * (1 - sigma) * e2
        Fm, Fbm = half - lin, half + lin
        small = z < Z_SERIES
        if np.any(small):
            zs = z[small] if z.ndim else z
            odd = (2.0 / 3.0) * (3 + sigma) * zs**3 + (2.0 / 15.0) * (3 + sigma) * zs**5
            es = np.exp(-2 * zs)
            fs = (2 * (1 + sigma) * zs + odd) * es
            fbs = (4 * zs + odd) * es
            if z.ndim:
                Fm[small], Fbm[small] = fs, fbs
            else:
                Fm, Fbm = fs, fbs
    return Fm, Fbm


def F_pair(z, sigma):
    """Return ``F(z)`` and ``Fbar(z)`` in scaled form.

    ``F = (3+sigma)/2 sinh(2z) - z(1-sigma)`` and ``Fbar`` has ``+ z(1-sigma)``.
    Both carry the exponent ``2z``; below ``z = 1e-6`` the mantissas come
    from the three-term Maclaurin series.

    Examples
    --------
    >>> F, Fb = F_pair(1.0, 0.2)
    >>> round(float(F.value()), 5), round(float(Fb.value()), 5)
    (5.00298, 6.60298)
    """
    check_sigma(sigma)
    z = _z(z)
    Fm, Fbm = F_pair_mantissa(z, sigma)
    return Scaled(Fm, 2 * z), Scaled(Fbm, 2 * z)


def F_derivs(z, sigma):
    """Return ``F'(z)`` and ``Fbar'(z)`` in scaled form (exponent ``2z``).

    ``F' = (3+sigma) cosh(2z) - (1-sigma)`` and ``Fbar' = ... + (1-sigma)``.
    """
    check_sigma(sigma)
    z = _z(z)
    e2 = np.exp(-2 * z)
    half = (3 + sigma) / 2 * (1 + e2 * e2)
    return Scaled(half - (1 - sigma) * e2, 2 * z), Scaled(half + (1 - sigma) * e2, 2 * z)


@dataclass(frozen=True)
class AuxValues:
    """Auxiliary functions and their z-derivatives, scaled by ``exp(-exponent)``.

    Every field is the true value times ``exp(-exponent)`` with
    ``exponent = z (1 + |k|)``.
    """

    zeta: np.ndarray
    eta: np.ndarray
    psi: np.ndarray
    xi: np.ndarray
    zeta_z: np.ndarray
    eta_z: np.ndarray
    psi_z: np.ndarray
    xi_z: np.ndarray
    exponent: np.ndarray

    def unscaled(self, name):
        """Plain value of one field; may overflow for large z."""
        return Scaled(getattr(self, name), self.exponent).value()


def hyperbolic_basis(k, z):
    """Products ``cosh(kz)cosh(z)``, ``cosh(kz)sinh(z)``, ``sinh(kz)cosh(z)``,
    ``sinh(kz)sinh(z)`` times ``exp(-z(1+|k|))``."""
    k, z = np.asarray(k, dtype=float), np.asarray(z, dtype=float)
    ak = np.abs(k) * z
    sgn = np.sign(k)
    ck = (1 + np.exp(-2 * ak)) / 2
    sk = sgn * -np.expm1(-2 * ak) / 2
    c = (1 + np.exp(-2 * z)) / 2
    s = -np.expm1(-2 * z) / 2
    return ck * c, ck * s, sk * c, sk * s


def aux_values(c, sigma):
    """Auxiliary functions ``zeta, eta, psi, xi`` and their z-derivatives.

    Parameters
    ----------
    c : ScaledCoords or tuple
        Coordinates; only ``k`` and ``z`` are used.  A tuple ``(k, z)`` of
        broadcastable arrays is accepted for vectorized evaluation.
    sigma : float
        Poisson ratio.

    Returns
    -------
    AuxValues
        Values scaled by ``exp(-z(1+|k|))`` so the mantissas stay finite.
    """
    check_sigma(sigma)
    from .formulas import aux_from_basis

    if isinstance(c, ScaledCoords):
        k, z = c.k, c.z
    else:
        k, z = c
    k, z = np.broadcast_arrays(np.asarray(k, dtype=float), _z(z))
    vals = aux_from_basis(k, z, sigma, *hyperbolic_basis(k, z))
    return AuxValues(*vals, exponent=z * (1 + np.abs(k)))
