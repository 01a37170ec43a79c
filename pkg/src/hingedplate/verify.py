"""Numerical audit of the inequalities behind mode monotonicity and positivity.

Each :class:`InequalityId` names one inequality of the chain (or a family of
closely related ones).  :func:`check` evaluates every component expression
on a fixed grid and reports the smallest signed margin, positive when the
claimed strict sign holds with room to spare.

For the expressions of the z-chain the margin is relative:

    margin = claimed_sign * value / scale,

where ``scale`` is the sum of the absolute values of all terms of the
exponential-polynomial expansion at that node.  It lies in ``[-1, 1]`` and
measures how much of the expression survives cancellation.  Identity checks
report ``IDENTITY_TOL - residual``.

A passing report is evidence on a grid, not a proof.
"""

import json
import math
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np

from . import expansions
from .core import PlateConfig, aux_values
from .errors import DomainError

#: Relative residual allowed for identity and parity checks.
IDENTITY_TOL = 1e-12
#: Number of ``s`` rows evaluated at once for three-variable expressions.
S_CHUNK = 16


class InequalityId(str, Enum):
    DIS2 = "DIS2"
    INEQVARIE = "INEQVARIE"
    DIS1 = "DIS1"
    G_MONOTONE = "G_MONOTONE"
    DIS8 = "DIS8"
    DIS0 = "DIS0"
    CHI_PLUS = "CHI_PLUS"
    CHI_MINUS = "CHI_MINUS"
    MU_POSITIVE = "MU_POSITIVE"
    MU1_MU2 = "MU1_MU2"
    MUBAR_NEGATIVE = "MUBAR_NEGATIVE"
    XI_PLUS = "XI_PLUS"
    XI_MINUS = "XI_MINUS"
    VERTEX_PLUS = "VERTEX_PLUS"
    VERTEX_MINUS = "VERTEX_MINUS"
    SIGMA_VARSIGMA = "SIGMA_VARSIGMA"
    AF_F1 = "AF_F1"
    PARITY = "PARITY"
    SIN2 = "SIN2"
    SIN3 = "SIN3"
    UPSILON_ZEROS = "UPSILON_ZEROS"
    CONSTANTS_CN = "CONSTANTS_CN"
    CONSTANTS_CNBAR = "CONSTANTS_CNBAR"
    SINE_LOWER = "SINE_LOWER"


@dataclass(frozen=True)
class VerifyGrid:
    """Node counts and ranges of the verification grids.

    ``k`` and ``s`` are uniform on ``[-1, 1]``, ``z`` is log-spaced on
    ``[z_min, z_max]`` and ``omega`` is uniform on ``[-1, 1]``.  The sine
    lemmas use ``n_points`` interior nodes per axis and ``N <= n_max``.
    """

    nk: int = 201
    ns: int = 201
    nz: int = 400
    z_min: float = 1e-3
    z_max: float = 50.0
    nomega: int = 81
    n_max: int = 40
    n_points: int = 500

    def __post_init__(self):
        if min(self.nk, self.ns, self.nz, self.nomega) < 2 or self.n_points < 2:
            raise DomainError("verification grids need at least 2 nodes per axis")
        if not 0 < self.z_min < self.z_max:
            raise DomainError("need 0 < z_min < z_max")
        if self.n_max < 3:
            raise DomainError("n_max must be at least 3")

    def k(self):
        return np.linspace(-1.0, 1.0, self.nk)

    def s(self):
        return np.linspace(-1.0, 1.0, self.ns)

    def z(self):
        return np.geomspace(self.z_min, self.z_max, self.nz)

    def omega(self):
        return np.linspace(-1.0, 1.0, self.nomega)

    def describe(self):
        return asdict(self)


@dataclass(frozen=True)
class MarginReport:
    """Smallest signed margin of one inequality over its grid."""

    id: InequalityId
    sigma: float
    grid: dict
    min_margin: float
    argmin: dict = field(default_factory=dict)
    evaluations: int = 0

    @property
    def passed(self):
        return bool(self.min_margin > 0)

    def to_dict(self):
        d = asdict(self)
        d["id"] = self.id.value
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


class _Worst:
    """Running minimum over components; ties keep the first node seen."""

    def __init__(self):
        self.margin = np.inf
        self.where = {}
        self.count = 0

    def add(self, label, margin, axes):
        margin = np.asarray(margin, dtype=float)
        self.count += margin.size
        if margin.size == 0:
            return
        bad = np.isnan(margin)
        if bad.any():
            margin = np.where(bad, -np.inf, margin)
        i = int(np.argmin(margin))
        if margin.flat[i] < self.margin:
            idx = np.unravel_index(i, margin.shape)
            self.margin = float(margin.flat[i])
            self.where = {"expression": label}
            for (name, values), j in zip(axes, idx):
                self.where[name] = float(values[j]) if np.ndim(values) else values

    def report(self, id_, sigma, grid):
        return MarginReport(id_, float(sigma), grid, self.margin, self.where, self.count)


# -- expression components ---------------------------------------------------

def _expr(w, name, sign, sigma, z, k=None, s=None):
    """Add ``sign * relative`` of an expansion on the ``(s, k, z)`` grid."""
    if z.size == 0:
        return
    if s is None:
        kk = k if k is not None else np.zeros(1)
        r = expansions.evaluate_grid(name, sigma, z, kk, (0.0,))
        m = sign * r.relative()[0]
        axes = [("k", kk), ("z", z)] if k is not None else [("z", z)]
        label = name if isinstance(name, str) else " - ".join(name)
        w.add(label, m if k is not None else m[0], axes)
        return
    for a in range(0, s.size, S_CHUNK):
        sc = s[a:a + S_CHUNK]
        r = expansions.evaluate_grid(name, sigma, z, k, sc)
        w.add(name, sign * r.relative(), [("s", sc), ("k", k), ("z", z)])


def _scaled(name, sigma, z):
    r = expansions.evaluate_grid(name, sigma, z)
    return r.mantissa[0, 0], r.exponent[0, 0], r.scale[0, 0]


def _mu_gap(w, sigma, z):
    """``mu2 - mu1 > 0``, expanded as one difference so nothing cancels."""
    _expr(w, ("mu2", "mu1"), 1, sigma, z)


def _mubar1(w, z):
    """``(1+z) cosh(4z) - 2z sinh(4z) - 1 < 0`` for ``z > 1``."""
    z = z[z > 1]
    e8, e4 = np.exp(-8 * z), np.exp(-4 * z)
    val = (1 + z) * (1 + e8) - 2 * z * (1 - e8) - 2 * e4
    scale = (1 + z) * (1 + e8) + 2 * z * (1 - e8) + 2 * e4
    w.add("mubar1", -val / scale, [("z", z)])


def mubar1_at_one():
    """``mubar1(1)``, which equals ``2 exp(-4) - 1``."""
    return 2 * math.cosh(4.0) - 2 * math.sinh(4.0) - 1


def _dis2(w, sigma, omega, z):
    t = np.tanh(np.outer(omega, z))
    w.add("dis2", (2 - (1 + sigma) * t) / (2 + (1 + sigma) * np.abs(t)),
          [("omega", omega), ("z", z)])


def _af_beta(w, sigma, z):
    """``beta(z) < 0`` on ``(0, 1/2]`` (the difference term of the AF_F1 check)."""
    z = z[z <= 0.5]
    a = (3 + sigma) ** 2 / 16
    b = (1 - sigma) ** 2
    terms = [a * np.exp(4 * z) * (1 - 2 * z), a * np.exp(-4 * z) * (1 + 6 * z),
             -a * (4 * z + 2), b * z**2, -2 * b * z**3]
    val = sum(terms)
    scale = sum(np.abs(t) for t in terms)
    w.add("af_beta", -val / scale, [("z", z)])


def _identity(w, label, got, want, axes):
    with np.errstate(invalid="ignore", divide="ignore"):
        res = np.abs(got - want) / np.maximum(np.abs(want), np.finfo(float).tiny)
    w.add(label, IDENTITY_TOL - res, axes)


def _varsigma_identities(w, sigma, z):
    """Closed displays of ``varsigma``, ``varsigma + bar`` and ``varsigma - bar``."""
    sg = sigma
    # each closed form as mantissa * exp(exponent)
    closed = {
        "varsigma": (0.5 * (-(1 - sg) ** 2 * z - 4 * (1 + sg)
                            - 4 * (3 + sg) * (1 + sg) / (1 - sg) * np.exp(-2 * z)
                            + (3 + sg) ** 2 * z * np.exp(-4 * z)), z),
        "varsigma_sum": (np.full(z.shape, -4 * (1 + sg) * (3 + sg) / (1 - sg)), -z),
        "varsigma_diff": (-(1 - sg) ** 2 * z - 4 * (1 + sg)
                          + (3 + sg) ** 2 * z * np.exp(-4 * z), z),
    }
    for name, (cm, ce) in closed.items():
        m, e, _ = _scaled(name, sigma, z)
        _identity(w, name + " identity", m * np.exp(e - ce), cm, [("z", z)])


def _parity(w, sigma, k, z):
    kk, zz = np.meshgrid(k, z, indexing="ij")
    a = aux_values((kk, zz), sigma)
    b = aux_values((-kk, zz), sigma)
    names = ("zeta", "eta", "psi", "xi", "zeta_z", "eta_z", "psi_z", "xi_z")
    odd = {"eta", "xi", "eta_z", "xi_z"}
    worst = np.zeros(kk.shape)
    for n in names:
        x, y = getattr(a, n), getattr(b, n)
        y = -y if n in odd else y
        den = np.abs(x) + np.abs(y)
        with np.errstate(invalid="ignore", divide="ignore"):
            r = np.where(den > 0, np.abs(x - y) / den, 0.0)
        worst = np.maximum(worst, r)
    w.add("aux parity", IDENTITY_TOL - worst, [("k", k), ("z", z)])


# -- sine lemmas -------------------------------------------------------------

def _open(b, n):
    """``n`` interior nodes of ``(0, b)``."""
    return np.linspace(0.0, b, n + 2)[1:-1]


def a_coeff(m):
    """``a_m = [m^(-3/2) - (m+1)^(-3/2)]^2``."""
    return (m ** -1.5 - (m + 1) ** -1.5) ** 2


def upsilon(m, t):
    """``sin(mt)/m^2 - sin((m+1)t)/(m+1)^2 - a_m sin(t)``."""
    t = np.asarray(t, dtype=float)
    return np.sin(m * t) / m**2 - np.sin((m + 1) * t) / (m + 1) ** 2 - a_coeff(m) * np.sin(t)


def _sin2(w, N, n):
    t = _open(np.pi / (N + 1), n)
    st = np.sin(t)
    for m in range(2, N + 1):
        r = np.sin(m * t) / st
        w.add(f"sin2 N={N} m={m}", np.outer(r, r) - 1, [("rho", t), ("x", t)])


def _sin3(w, N, n):
    t = _open(np.pi / (N + 1), n)
    st = np.sin(t)
    for m in range(3, N + 1):
        r0 = np.sin(m * t) / st
        r1 = np.sin((m + 1) * t) / st
        val = np.outer(r0, r0) / m**3 - np.outer(r1, r1) / (m + 1) ** 3 - a_coeff(m)
        scale = (np.outer(np.abs(r0), np.abs(r0)) / m**3
                 + np.outer(np.abs(r1), np.abs(r1)) / (m + 1) ** 3 + a_coeff(m))
        w.add(f"sin3 N={N} m={m}", val / scale, [("rho", t), ("x", t)])


def _upsilon(w, m, n):
    """Unique positive zero of ``upsilon_m`` inside ``(2pi/(2m+1), 3pi/(2m))``.

    Checked as: ``upsilon > 0`` on ``(0, lo]``, ``upsilon' < 0`` on
    ``(lo, hi)`` and ``upsilon < 0`` on ``[hi, 2pi/(m+1)]``.
    """
    lo, hi, end = 2 * np.pi / (2 * m + 1), 3 * np.pi / (2 * m), 2 * np.pi / (m + 1)
    am = a_coeff(m)

    def scale(t):
        return (np.abs(np.sin(m * t)) / m**2 + np.abs(np.sin((m + 1) * t)) / (m + 1) ** 2
                + am * np.sin(t))

    t = np.append(_open(lo, n - 1), lo)
    w.add(f"upsilon>0 m={m}", upsilon(m, t) / scale(t), [("t", t)])
    t = _open(hi - lo, n) + lo
    d = np.cos(m * t) / m - np.cos((m + 1) * t) / (m + 1) - am * np.cos(t)
    ds = np.abs(np.cos(m * t)) / m + np.abs(np.cos((m + 1) * t)) / (m + 1) + am * np.cos(t)
    w.add(f"upsilon'<0 m={m}", -d / ds, [("t", t)])
    t = np.linspace(hi, end, n) if end > hi else np.array([hi])
    w.add(f"upsilon<0 m={m}", -upsilon(m, t) / scale(t), [("t", t)])


def upsilon_zero(m, tol=1e-14):
    """Bisection for the zero ``t1`` of ``upsilon_m`` in ``[2pi/(2m+1), 3pi/(2m)]``."""
    a, b = 2 * np.pi / (2 * m + 1), 3 * np.pi / (2 * m)
    fa = upsilon(m, a)
    if not (fa > 0 > upsilon(m, b)):
        raise DomainError(f"upsilon_{m} has no sign change on the bracket")
    while b - a > tol * b:
        c = 0.5 * (a + b)
        if upsilon(m, c) > 0:
            a = c
        else:
            b = c
    return 0.5 * (a + b)


# -- constants of the positivity scheme --------------------------------------

ZETA2 = math.pi**2 / 6


def inv_square_tail(N):
    """``sum_{m > N} m^-2`` as ``pi^2/6`` minus the partial sum."""
    return ZETA2 - math.fsum(1.0 / m**2 for m in range(1, N + 1))


def C_N(N):
    """``sum_{m>N} m^-2 / sum_{m<=N} m^-3``."""
    return inv_square_tail(N) / math.fsum(1.0 / m**3 for m in range(1, N + 1))


def Cbar_N(N):
    """``sum_{m>N+1} m^-2 / (1/2 + sum_{m=3, odd}^{N} a_m)`` for odd ``N >= 3``."""
    den = 0.5 + math.fsum(a_coeff(m) for m in range(3, N + 1, 2))
    return inv_square_tail(N + 1) / den


@dataclass(frozen=True)
class ConstantsRow:
    N: int
    C: float
    x: float
    Cbar: float | None
    xbar: float | None


def constants(N_max):
    """Table of ``(N, C_N, x_N, Cbar_N, xbar_N)`` for ``N = 1..N_max``.

    ``x_N = arcsin(C_N)``; ``Cbar_N`` and ``xbar_N`` exist for odd
    ``N >= 3`` and are ``None`` otherwise.

    Examples
    --------
    >>> round(constants(3)[0].x, 2)
    0.7
    """
    if N_max < 3:
        raise DomainError("N_max must be at least 3")
    rows = []
    for N in range(1, N_max + 1):
        c = C_N(N)
        cb = Cbar_N(N) if N >= 3 and N % 2 else None
        rows.append(ConstantsRow(N, c, math.asin(c), cb,
                                 math.asin(cb) if cb is not None else None))
    return rows


def _constants_cn(w, N_max):
    rows = constants(N_max)
    Ns = np.array([r.N for r in rows if r.N >= 2])
    C = np.array([r.C for r in rows if r.N >= 2])
    w.add("C_N < 1/N", 1 - C * Ns, [("N", Ns)])
    sel = Ns >= 3
    x = np.arcsin(C[sel])
    b = np.pi / (Ns[sel] + 2)
    w.add("x_N < pi/(N+2)", (b - x) / b, [("N", Ns[sel])])
    sel = Ns >= 4
    w.add("C_N < sin(pi/(N+2))", 1 - C[sel] / np.sin(np.pi / (Ns[sel] + 2)), [("N", Ns[sel])])


def _constants_cnbar(w, N_max):
    rows = [r for r in constants(N_max) if r.Cbar is not None]
    Ns = np.array([r.N for r in rows])
    C = np.array([r.Cbar for r in rows])
    w.add("Cbar_N < sin(pi/(N+3))", 1 - C / np.sin(np.pi / (Ns + 3)), [("N", Ns)])
    w.add("Cbar_N < 2/(N+1)", 1 - C * (Ns + 1) / 2, [("N", Ns)])


def _sine_lower(w, n):
    # equality holds at x = pi/6 itself, so only the open interval is sampled
    x = _open(np.pi / 6, n)
    w.add("sin(x) >= 3x/pi", np.sin(x) * np.pi / (3 * x) - 1, [("x", x)])


# -- dispatch ----------------------------------------------------------------

def _components(id_, sigma, g: VerifyGrid, w):
    I = InequalityId
    z, k = g.z(), g.k()
    zk = dict(z=z, k=k)
    if id_ is I.DIS2:
        _dis2(w, sigma, g.omega(), z)
    elif id_ is I.INEQVARIE:
        for n in ("ineq1_p", "ineq1_m", "ineq2_p", "ineq2_m"):
            _expr(w, n, 1, sigma, z)
    elif id_ is I.DIS1:
        _expr(w, "dis1_p", 1, sigma, **zk)
        _expr(w, "dis1_m", 1, sigma, **zk)
    elif id_ is I.G_MONOTONE:
        _expr(w, "gmono", -1, sigma, z, k, g.s())
    elif id_ is I.DIS8:
        _expr(w, "dis8_p", -1, sigma, **zk)
        _expr(w, "dis8_m", -1, sigma, **zk)
    elif id_ is I.DIS0:
        _expr(w, "dis0_p", -1, sigma, **zk)
        _expr(w, "dis0_m", -1, sigma, **zk)
    elif id_ is I.CHI_PLUS:
        _expr(w, "s_plus_p", -1, sigma, z)
        _expr(w, "mu", 1, sigma, z)
        _expr(w, "chi_p", -1, sigma, **zk)
    elif id_ is I.CHI_MINUS:
        _expr(w, "s_minus_p", -1, sigma, z)
        _expr(w, "chi_m_at_m1", -1, sigma, z)
        _expr(w, "chi_m", -1, sigma, **zk)
    elif id_ is I.MU_POSITIVE:
        _expr(w, "mu", 1, sigma, z)
    elif id_ is I.MU1_MU2:
        _expr(w, "mu1", 1, sigma, z)
        _mu_gap(w, sigma, z)
    elif id_ is I.MUBAR_NEGATIVE:
        _expr(w, "mubar", -1, sigma, z)
        _expr(w, "wbar_minus_qbar", -1, sigma, z)
        _expr(w, "wbar_plus_qbar", -1, sigma, z[z > 1])
        _mubar1(w, z)
        want = 2 * math.exp(-4) - 1
        w.add("mubar1(1) identity",
              IDENTITY_TOL - abs(mubar1_at_one() - want) / abs(want), [])
    elif id_ is I.XI_PLUS:
        _expr(w, "a_plus_d", -1, sigma, z)
        _expr(w, "xi_p_at_1", -1, sigma, z)
        _expr(w, "xi_p", -1, sigma, **zk)
    elif id_ is I.XI_MINUS:
        _expr(w, "a_minus_d", -1, sigma, z)
        _expr(w, "xi_m_at_m1", -1, sigma, z)
        _expr(w, "xi_m", -1, sigma, **zk)
    elif id_ is I.VERTEX_PLUS:
        _expr(w, "vertex_p", 1, sigma, z)
    elif id_ is I.VERTEX_MINUS:
        _expr(w, "vertex_m", -1, sigma, z)
    elif id_ is I.SIGMA_VARSIGMA:
        for n in ("varsigma", "varsigma_sum", "varsigma_diff", "varsigma_tilde"):
            _expr(w, n, -1, sigma, z)
        _varsigma_identities(w, sigma, z)
    elif id_ is I.AF_F1:
        _expr(w, "af_alpha", -1, sigma, z)
        _expr(w, "af_p", -1, sigma, z)
        _expr(w, "af_m", -1, sigma, z)
        _af_beta(w, sigma, z)
        want = -2 * (1 + sigma)
        w.add("alpha(0) identity", IDENTITY_TOL - abs(alpha(0.0, sigma) - want) / abs(want), [])
    elif id_ is I.PARITY:
        _parity(w, sigma, k, z)
    elif id_ is I.SIN2:
        for N in range(2, g.n_max + 1):
            _sin2(w, N, g.n_points)
    elif id_ is I.SIN3:
        for N in range(3, g.n_max + 1):
            _sin3(w, N, g.n_points)
    elif id_ is I.UPSILON_ZEROS:
        for m in range(3, g.n_max + 1):
            _upsilon(w, m, g.n_points)
    elif id_ is I.CONSTANTS_CN:
        _constants_cn(w, g.n_max)
    elif id_ is I.CONSTANTS_CNBAR:
        _constants_cnbar(w, g.n_max)
    elif id_ is I.SINE_LOWER:
        _sine_lower(w, g.n_points)
    else:  # pragma: no cover
        raise KeyError(id_)


def alpha(z, sigma):
    """``2F(z) - F'(z) = (3+sigma)[sinh(2z) - cosh(2z)] + (1-sigma)(1-2z)``."""
    return (3 + sigma) * -math.exp(-2 * z) + (1 - sigma) * (1 - 2 * z)


def check(id_, grid: VerifyGrid | None = None, cfg: PlateConfig | None = None):
    """Evaluate one inequality on its grid.

    Parameters
    ----------
    id_ : InequalityId or str
    grid : VerifyGrid, optional
        Defaults to :class:`VerifyGrid` ().
    cfg : PlateConfig, optional
        Only the Poisson ratio is used; defaults to ``sigma = 0.2``.

    Returns
    -------
    MarginReport
    """
    try:
        id_ = InequalityId(id_)
    except ValueError:
        raise KeyError(f"unknown inequality id {id_!r}") from None
    grid = grid or VerifyGrid()
    cfg = cfg or PlateConfig(1.0, 0.2)
    w = _Worst()
    _components(id_, cfg.sigma, grid, w)
    return w.report(id_, cfg.sigma, grid.describe())


def check_all(grid: VerifyGrid | None = None, cfg: PlateConfig | None = None, ids=None):
    """Reports for ``ids`` (default: every id), in enumeration order."""
    ids = list(InequalityId) if ids is None else [InequalityId(i) for i in ids]
    return [check(i, grid, cfg) for i in ids]


def check_sin_lemmas(N_max, n_points=500):
    """Reports for the two sine inequalities and the zeros of ``upsilon_m``."""
    if N_max < 3:
        raise DomainError("N_max must be at least 3")
    g = VerifyGrid(n_max=N_max, n_points=n_points)
    return check_all(g, ids=(InequalityId.SIN2, InequalityId.SIN3, InequalityId.UPSILON_ZEROS))
