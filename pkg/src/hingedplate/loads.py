"""Plate deflection under box loads and gridded loads.

A box load of unit total mass spread uniformly over
``[rho - alpha, rho + alpha] x [w - eta, w + eta]`` has the exact modal
solution

    phi^p_m(y) = (2/pi) sinc(m alpha) sin(m rho)
                 [c1 cosh(my) + c2 sinh(my) + c3 y cosh(my) + c4 y sinh(my) + Phi(y)]

where ``Phi`` is the kernel ``(1 + m|u|) exp(-m|u|) / (4 m^3)`` averaged
over the load strip and ``c1..c4`` enforce the free-edge conditions at
``y = +-ell``.  Gridded loads are integrated against the Green function.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .core import PlateConfig, Point, Scaled, scaled_cosh, scaled_sinh, sum_scaled
from .errors import DomainError, ToleranceUnreachable
from .green import MODE_CAP, SeriesValue, green_field
from .modes import phi_table


@dataclass(frozen=True)
class BoxLoad:
    """Uniform load of unit mass on ``[rho-alpha, rho+alpha] x [w-eta, w+eta]``."""

    rho: float
    w: float
    alpha: float
    eta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.eta > 0):
            raise DomainError("box half-widths alpha and eta must be positive")

    def check(self, cfg: PlateConfig):
        """Raise :class:`DomainError` unless the box lies inside the open plate."""
        if not (0 < self.rho - self.alpha and self.rho + self.alpha < np.pi):
            raise DomainError("box load must satisfy 0 < rho - alpha and rho + alpha < pi")
        if not (-cfg.ell < self.w - self.eta and self.w + self.eta < cfg.ell):
            raise DomainError("box load must satisfy -ell < w - eta and w + eta < ell")
        return self


def modal_load_coeff(m, load: BoxLoad, y):
    """Sine coefficient ``(2/pi) int f(x, y) sin(mx) dx`` of the box load.

    Examples
    --------
    >>> abs(float(modal_load_coeff(2, BoxLoad(np.pi / 2, 0.0, 0.1, 0.1), 0.0))) < 1e-15
    True
    """
    y = np.asarray(y, dtype=float)
    inside = np.abs(y - load.w) <= load.eta
    return np.where(inside, 1 / (np.pi * load.eta), 0.0) * _sinc(m * load.alpha) * np.sin(m * load.rho)


def _sinc(t):
    return np.sinc(np.asarray(t, dtype=float) / np.pi)


def _phi_conv_scaled(m, w, eta, y, order):
    """Scaled ``Phi^{(order)}_{m,w,eta}(y)`` with exponent ``-m max(|y-w| - eta, 0)``."""
    m = np.asarray(m, dtype=float)
    d = np.asarray(y, dtype=float) - w
    m, d = np.broadcast_arrays(m, d)
    ad = np.abs(d)
    sgn = np.where(d < 0, -1.0, 1.0)
    out = np.zeros(m.shape)
    expo = np.zeros(m.shape)
    c = 1 / (8 * eta * m**3)  # 1 / (2 eta) from the average, 1 / (4 m^3) from the kernel
    outside = ad >= eta
    # outside the strip: factor exp(-m b), b = |d| - eta, out of both kernel values
    mo, b = m[outside], ad[outside] - eta
    if mo.size:
        em = np.expm1(-2 * mo * eta)
        e2 = np.exp(-2 * mo * eta)
        if order == 0:
            v = -em * (b + 2 / mo) - 2 * eta * e2
        elif order == 1:
            v = sgn[outside] * ((1 + mo * b) * em + 2 * mo * eta * e2)
        elif order == 2:
            v = -mo**2 * (b * em + 2 * eta * e2)
        else:
            v = -sgn[outside] * mo**2 * ((1 - mo * b) * em - 2 * mo * eta * e2)
        out[outside] = v * c[outside]
        expo[outside] = -mo * b
    mi, di = m[~outside], d[~outside]
    if mi.size:
        a, bb = di + eta, di - eta  # a > 0 > bb
        if order == 0:
            def I(u):
                au = np.abs(u)
                return -np.expm1(-mi * au) * 2 / mi - au * np.exp(-mi * au)
            v = I(a) + I(bb)
        elif order == 1:
            def K(u):
                au = np.abs(u)
                return (1 + mi * au) * np.exp(-mi * au)
            v = K(a) - K(bb)
        elif order == 2:
            def K(u):
                return -mi**2 * u * np.exp(-mi * np.abs(u))
            v = K(a) - K(bb)
        else:
            def K(u):
                au = np.abs(u)
                return -mi**2 * (1 - mi * au) * np.exp(-mi * au)
            v = K(a) - K(bb)
        out[~outside] = v * c[~outside]
    return Scaled(out, expo)


def phi_convolution(m, w, eta, y, order=0):
    """Kernel average ``Phi_{m,w,eta}(y)`` or one of its first three y-derivatives.

    ``Phi(y) = 1/(2 eta) int_{w-eta}^{w+eta} (1 + m|y-t|) exp(-m|y-t|) / (4 m^3) dt``
    in closed form.  Outside the strip the common factor ``exp(-m(|y-w|-eta))``
    is pulled out before subtracting, so there is no cancellation.

    Examples
    --------
    >>> round(float(phi_convolution(1, 0.0, 1e-6, 0.0)), 9)
    0.25
    """
    if not eta > 0:
        raise DomainError(f"eta must be positive, got {eta}")
    if order not in (0, 1, 2, 3):
        raise DomainError("order must be 0, 1, 2 or 3")
    return _phi_conv_scaled(m, w, eta, y, order).value()


def _VW(m, load, cfg, side):
    """Boundary data ``V(side*ell)`` and ``W(side*ell)`` in scaled form."""
    sg = cfg.sigma
    y = side * cfg.ell
    P0, P1, P2, P3 = (_phi_conv_scaled(m, load.w, load.eta, y, n) for n in range(4))
    # all four share the exponent -m(|y - w| - eta)
    V = Scaled(sg * m**2 * P0.mantissa - P2.mantissa, P0.exponent)
    W = Scaled((sg - 2) * m**2 * P1.mantissa + P3.mantissa, P0.exponent)
    return V, W


def _box_coeffs_scaled(m, load: BoxLoad, cfg: PlateConfig):
    m = np.asarray(m, dtype=float)
    sg, ell = cfg.sigma, cfg.ell
    z = m * ell
    Vp, Wp = _VW(m, load, cfg, 1)
    Vm, Wm = _VW(m, load, cfg, -1)
    ch, sh = scaled_cosh(z), scaled_sinh(z)  # exponent z
    C, S = ch.mantissa, sh.mantissa
    e2 = np.exp(-2 * z)
    half = (3 + sg) / 4 * -np.expm1(-4 * z)
    Fm, Fbm = half - z * (1 - sg) * e2, half + z * (1 - sg) * e2  # exponent 2z
    A = (1 + sg) * S - (1 - sg) * z * C
    B = 2 * C + (1 - sg) * z * S
    Ab = (1 + sg) * C - (1 - sg) * z * S
    Bb = 2 * S + (1 - sg) * z * C

    def comb(x1, P, sgn1, x2, Q, sgn2):
        # x1 * [P(ell) + sgn1 P(-ell)] + x2 * [Q(ell) + sgn2 Q(-ell)]
        return sum_scaled([(x1 * P[0].mantissa, P[0].exponent),
                           (sgn1 * x1 * P[1].mantissa, P[1].exponent),
                           (x2 * Q[0].mantissa, Q[0].exponent),
                           (sgn2 * x2 * Q[1].mantissa, Q[1].exponent)])

    V, W = (Vp, Vm), (Wp, Wm)
    n1 = comb(m * A, V, 1, B, W, -1)
    n2 = comb(m * Ab, V, -1, Bb, W, 1)
    n3 = comb(m * C, V, -1, -S, W, 1)
    n4 = comb(m * S, V, 1, -C, W, -1)
    # numerators carry exponent z from the hyperbolics, denominators 2z
    c1 = Scaled(n1.mantissa / (2 * m**3 * (1 - sg) * Fm), n1.exponent - z)
    c2 = Scaled(n2.mantissa / (2 * m**3 * (1 - sg) * Fbm), n2.exponent - z)
    c3 = Scaled(n3.mantissa / (2 * m**2 * Fbm), n3.exponent - z)
    c4 = Scaled(n4.mantissa / (2 * m**2 * Fm), n4.exponent - z)
    return c1, c2, c3, c4


def box_coeffs(m, load: BoxLoad, cfg: PlateConfig):
    """Free-edge constants ``(c1, c2, c3, c4)`` of the box-load modal solution.

    Examples
    --------
    >>> cfg = PlateConfig(1.0, 0.2)
    >>> c = box_coeffs(3, BoxLoad(1.0, 0.0, 0.1, 0.1), cfg)
    >>> abs(float(c[1])) < 1e-15 and abs(float(c[2])) < 1e-15
    True
    """
    load.check(cfg)
    return tuple(c.value() for c in _box_coeffs_scaled(m, load, cfg))


def _hyper_derivs(m, y, order):
    """Scaled ``d^n/dy^n`` of ``cosh(my), sinh(my), y cosh(my), y sinh(my)``."""
    my = m * y
    ch, sh = scaled_cosh(my), scaled_sinh(my)
    e = ch.exponent
    pair = [ch.mantissa, sh.mantissa]  # cosh, sinh; derivatives alternate
    def f(n, which):
        return m**n * pair[(which + n) % 2]
    base = [f(order, 0), f(order, 1)]
    lin = [y * f(order, 0) + (order * f(order - 1, 0) if order else 0.0),
           y * f(order, 1) + (order * f(order - 1, 1) if order else 0.0)]
    return [Scaled(v, e) for v in base + lin]


@dataclass(frozen=True)
class ModalProfile:
    """Mode ``m`` of the box-load solution as a function of ``y``.

    ``bracket(y)`` is ``c1 cosh(my) + c2 sinh(my) + c3 y cosh(my)
    + c4 y sinh(my) + Phi(y)`` and ``coefficient(y)`` multiplies it by
    ``(2/pi) sinc(m alpha) sin(m rho)``.
    """

    m: int
    load: BoxLoad
    cfg: PlateConfig

    def bracket(self, y, order=0):
        """Bracket or one of its first three y-derivatives (vectorized in y)."""
        cs = _box_coeffs_scaled(self.m, self.load, self.cfg)
        y = np.asarray(y, dtype=float)
        parts = []
        for c, h in zip(cs, _hyper_derivs(self.m, y, order)):
            parts.append((c.mantissa * h.mantissa, c.exponent + h.exponent))
        P = _phi_conv_scaled(self.m, self.load.w, self.load.eta, y, order)
        parts.append((P.mantissa, P.exponent))
        return sum_scaled(parts).value()

    def prefactor(self):
        return 2 / np.pi * float(_sinc(self.m * self.load.alpha)) * np.sin(self.m * self.load.rho)

    def coefficient(self, y, order=0):
        return self.prefactor() * self.bracket(y, order)

    def forcing(self, y):
        """Right-hand side of the modal equation at ``y``."""
        return modal_load_coeff(self.m, self.load, y)


def box_profiles(M, load: BoxLoad, y, cfg: PlateConfig):
    """Brackets of modes ``1..M`` at a single ``y`` (vectorized over m)."""
    m = np.arange(1, M + 1, dtype=float)
    cs = _box_coeffs_scaled(m, load, cfg)
    parts = []
    for c, h in zip(cs, _hyper_derivs(m, np.full(M, float(y)), 0)):
        parts.append((c.mantissa * h.mantissa, c.exponent + h.exponent))
    P = _phi_conv_scaled(m, load.w, load.eta, y, 0)
    parts.append((P.mantissa, P.exponent))
    return sum_scaled(parts).value()


def solve_box(load: BoxLoad, q: Point, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Deflection at ``q`` under a box load, with a certified truncation bound.

    The bracket of mode ``m`` is the average over the load strip of
    ``phi_m(y, t) / (4 m^3)``, so ``m^3`` times it decreases in ``m``; with
    ``|sinc| <= 1`` and ``|sin| <= 1`` the tail after ``M`` modes is at most
    ``(2/pi) (M+1)^3 P_{M+1}(y) / (2 M^2)``.

    Returns
    -------
    SeriesValue
    """
    load.check(cfg)
    q.check(cfg, "field point")
    if not (tol > 0) or not np.isfinite(tol):
        raise DomainError(f"tolerance must be positive and finite, got {tol}")
    if q.x in (0.0, np.pi):
        return SeriesValue(0.0, 0.0, 1)
    P1 = float(box_profiles(1, load, q.y, cfg)[0])
    Mmax = int(np.ceil(np.sqrt(2 / np.pi * P1 / (2 * tol))))
    Mmax = max(1, min(Mmax, mode_cap))
    P = box_profiles(Mmax + 1, load, q.y, cfg)
    m = np.arange(1, Mmax + 2, dtype=float)
    Mv = m[:-1]
    tails = 2 / np.pi * (Mv + 1) ** 3 * P[1:] / (2 * Mv**2)
    ok = tails <= tol
    if not ok[-1]:
        raise ToleranceUnreachable(
            f"tail bound {tails[-1]:.3g} still exceeds tol={tol:g} at the mode cap {mode_cap}")
    M = int(np.argmax(ok)) + 1
    mm = m[:M]
    terms = 2 / np.pi * _sinc(mm * load.alpha) * np.sin(mm * load.rho) * P[:M] * np.sin(mm * q.x)
    return SeriesValue(float(np.sum(terms[::-1])), float(tails[M - 1]), M)


@dataclass(frozen=True)
class GridLoad:
    """Load sampled on a tensor grid covering the closed plate.

    ``values[j, i]`` is the load at ``(x[i], y[j])``.
    """

    x: np.ndarray
    y: np.ndarray
    values: np.ndarray

    def check(self, cfg: PlateConfig):
        x, y, v = self.x, self.y, self.values
        if v.shape != (y.size, x.size):
            raise DomainError("load values must have shape (ny, nx)")
        if not np.all(np.isfinite(v)):
            raise DomainError("load values must be finite")
        if np.any(np.diff(x) <= 0) or np.any(np.diff(y) <= 0):
            raise DomainError("grid coordinates must be strictly increasing")
        tol = 1e-9
        if abs(x[0]) > tol or abs(x[-1] - np.pi) > tol:
            raise DomainError("grid must span x in [0, pi]")
        if abs(y[0] + cfg.ell) > tol * max(1, cfg.ell) or abs(y[-1] - cfg.ell) > tol * max(1, cfg.ell):
            raise DomainError("grid must span y in [-ell, ell]")
        return self

    @classmethod
    def from_csv(cls, path):
        """Read ``x,y,value`` rows (header required) forming a full tensor grid."""
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = [h.strip() for h in next(reader)]
            if header[:3] != ["x", "y", "value"]:
                raise DomainError("grid load CSV needs the header x,y,value")
            try:
                rows = [tuple(float(v) for v in r[:3]) for r in reader if r]
            except ValueError as exc:
                raise DomainError(f"grid load CSV has a malformed number: {exc}") from None
        data = np.array(rows)
        xs, ys = np.unique(data[:, 0]), np.unique(data[:, 1])
        if xs.size * ys.size != len(rows):
            raise DomainError("grid load CSV must contain every (x, y) node exactly once")
        vals = np.full((ys.size, xs.size), np.nan)
        vals[np.searchsorted(ys, data[:, 1]), np.searchsorted(xs, data[:, 0])] = data[:, 2]
        if np.isnan(vals).any():
            raise DomainError("grid load CSV has missing nodes")
        return cls(xs, ys, vals)


@dataclass(frozen=True)
class GridSolution:
    """Deflection from a gridded load."""

    value: float
    error_estimate: float
    tail_bound: float


def _weights(t):
    """Composite Simpson weights on (possibly uneven pairs of) nodes.

    Falls back to the trapezoid rule on the last interval when the number
    of intervals is odd.
    """
    n = t.size - 1
    w = np.zeros(t.size)
    stop = n - (n % 2)
    for i in range(0, stop, 2):
        h0, h1 = t[i + 1] - t[i], t[i + 2] - t[i + 1]
        H = h0 + h1
        w[i] += H / 6 * (2 - h1 / h0)
        w[i + 1] += H**3 / (6 * h0 * h1)
        w[i + 2] += H / 6 * (2 - h0 / h1)
    if n % 2:
        h = t[-1] - t[-2]
        w[-2] += h / 2
        w[-1] += h / 2
    return w


def _trap(t):
    w = np.zeros(t.size)
    h = np.diff(t)
    w[:-1] += h / 2
    w[1:] += h / 2
    return w


def solve_grid_load(f: GridLoad, p: Point, tol, cfg: PlateConfig, mode_cap=MODE_CAP):
    """Deflection ``u(p) = int G(p, q) f(q) dq`` for a gridded load.

    The Green function is evaluated at every grid node (one mode table per
    grid row) and integrated with tensor Simpson weights.  The error
    estimate is the difference to the tensor trapezoid rule on the same
    nodes.  It is reliable for smooth loads; for a load with jumps, put
    the jumps on even-numbered nodes so both rules see them at a panel
    boundary.

    Returns
    -------
    GridSolution
    """
    f.check(cfg)
    p.check(cfg, "evaluation point")
    if not np.any(f.values):
        return GridSolution(0.0, 0.0, 0.0)
    # G is symmetric, so G(p, q) is the field of a unit load at p
    field = green_field(p, f.x, f.y, tol, cfg, mode_cap)
    integrand = field.value * f.values
    wx, wy = _weights(f.x), _weights(f.y)
    tx, ty = _trap(f.x), _trap(f.y)
    simpson = float(wy @ integrand @ wx)
    trap = float(ty @ integrand @ tx)
    tail = float(ty @ (field.tail_bound * np.abs(f.values)) @ tx)
    return GridSolution(simpson, abs(simpson - trap), tail)


def mode_profile_table(M, load: BoxLoad, y, cfg: PlateConfig):
    """``phi_m(y, t)`` averaged over the load strip, times ``1/(4 m^3)``.

    Independent route to the brackets of :func:`box_profiles` by
    Gauss-Legendre averaging of the point-load modes; used as a check.
    """
    x, wq = np.polynomial.legendre.leggauss(24)
    t = load.w + load.eta * x
    phi = phi_table(M, np.atleast_1d(y), t, cfg)[:, 0, :]  # (M, nq)
    m = np.arange(1, M + 1)
    return (phi @ wq) / 2 / (4 * m**3)
