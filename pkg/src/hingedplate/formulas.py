"""Literal hyperbolic forms of the mode function and the inequality chain.

Every function here transcribes a closed-form expression term by term and
accepts a backend ``xp`` providing ``cosh``, ``sinh`` and ``exp``: ``numpy``
for vectorized double precision at moderate z, or ``mpmath`` for
arbitrary-precision reference values.  In double precision these forms lose
relative accuracy once z exceeds a few units because large exponentials
cancel; :mod:`hingedplate.expansions` evaluates the same quantities stably.

Notation: ``k = y/ell``, ``s = w/ell``, ``z = m*ell`` and ``sg`` is the
Poisson ratio.
"""

import numpy as np


def F_values(z, sg, xp=np):
    """Return ``(F, Fbar, F', Fbar')`` at ``z``."""
    sh2, ch2 = xp.sinh(2 * z), xp.cosh(2 * z)
    F = (3 + sg) / 2 * sh2 - z * (1 - sg)
    Fb = (3 + sg) / 2 * sh2 + z * (1 - sg)
    Fp = (3 + sg) * ch2 - (1 - sg)
    Fbp = (3 + sg) * ch2 + (1 - sg)
    return F, Fb, Fp, Fbp


def aux_from_basis(k, z, sg, cc, cs, sc, ss):
    """Auxiliary functions and their z-derivatives from product terms.

    Parameters
    ----------
    k, z : array_like
        Scaled coordinates.
    sg : float
        Poisson ratio.
    cc, cs, sc, ss : array_like
        ``cosh(kz)cosh(z)``, ``cosh(kz)sinh(z)``, ``sinh(kz)cosh(z)`` and
        ``sinh(kz)sinh(z)``, possibly all multiplied by a common scale.

    Returns
    -------
    tuple
        ``(zeta, eta, psi, xi, zeta_z, eta_z, psi_z, xi_z)`` carrying the
        same common scale as the inputs.
    """
    q = 1 / (1 - sg)
    r = k * z
    k2 = 1 - k * k
    A = 4 * q - z * (1 + sg)
    B = (1 + sg) ** 2 * q + 2 * z
    zeta = A * cc + B * cs - 2 * r * sc + r * (1 + sg) * ss
    eta = r * (1 + sg) * cc - 2 * r * cs + B * sc + A * ss
    P = 2 + (1 - sg) * z
    R = -(1 + sg) + z * (1 - sg)
    psi = P * cc + R * cs - r * (1 - sg) * sc - r * (1 - sg) * ss
    xi = -r * (1 - sg) * cc - r * (1 - sg) * cs + R * sc + P * ss
    G1 = 2 * sg * (1 + sg) * q + 2 * z * k2
    G2 = 2 * (3 - sg) * q - z * (1 + sg) * k2
    G3 = 2 * (1 + sg) * q * k
    zeta_z = G1 * cc + G2 * cs + G3 * sc + G3 * ss
    eta_z = G3 * cc + G3 * cs + G2 * sc + G1 * ss
    H1 = -2 * sg + z * k2 * (1 - sg)
    H2 = 3 - sg + z * k2 * (1 - sg)
    psi_z = H1 * cc + H2 * cs + k * (1 + sg) * sc - 2 * k * ss
    xi_z = -2 * k * cc + k * (1 + sg) * cs + H2 * sc + H1 * ss
    return zeta, eta, psi, xi, zeta_z, eta_z, psi_z, xi_z


def aux(k, z, sg, xp=np):
    """Unscaled auxiliary functions ``zeta, eta, psi, xi`` and z-derivatives."""
    ck, sk = xp.cosh(k * z), xp.sinh(k * z)
    c, s_ = xp.cosh(z), xp.sinh(z)
    return aux_from_basis(k, z, sg, ck * c, ck * s_, sk * c, sk * s_)


def g_part(s, k, z, sg, xp=np):
    """``exp(-z) g(s, k, z)``, the boundary-correction part of the mode."""
    F, Fb, _, _ = F_values(z, sg, xp)
    ze, et, ps, x, *_ = aux(k, z, sg, xp)
    g = (xp.cosh(s * z) * (ze / F + z * ps / F - s * z * x / Fb)
         + xp.sinh(s * z) * (et / Fb + z * x / Fb - s * z * ps / F))
    return xp.exp(-z) * g


def h_part(s, k, z, xp=np):
    """Whole-line part ``(1 + z|k-s|) exp(-z|k-s|)``."""
    d = z * abs(k - s)
    return (1 + d) * xp.exp(-d)


def gmono(s, k, z, sg, xp=np):
    """``g_z - g`` assembled as ``W cosh(sz) + Q sinh(sz)``."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    ze, et, ps, x, ze_z, et_z, ps_z, x_z = aux(k, z, sg, xp)
    # quotient derivatives
    dzeF = (ze_z * F - ze * Fp) / F**2
    detFb = (et_z * Fb - et * Fbp) / Fb**2
    dzpsF = (ps + z * ps_z) / F - z * ps * Fp / F**2
    dzxFb = (x + z * x_z) / Fb - z * x * Fbp / Fb**2
    W = (dzeF + dzpsF - (ze / F + z * ps / F)
         + s * (et / Fb + 2 * z * x / Fb - dzxFb) - s * s * z * ps / F)
    Q = (detFb + dzxFb - (et / Fb + z * x / Fb)
         + s * (ze / F + 2 * z * ps / F - dzpsF) - s * s * z * x / Fb)
    return W * xp.cosh(s * z) + Q * xp.sinh(s * z)


def dis1(k, z, sg, sign, xp=np):
    """``psi/F + sign * xi/Fbar``."""
    F, Fb, _, _ = F_values(z, sg, xp)
    _, _, ps, x, *_ = aux(k, z, sg, xp)
    return ps / F + sign * x / Fb


def dis8(k, z, sg, sign, xp=np):
    """``[z psi/F +- z xi/Fbar]_z - [zeta/F +- eta/Fbar]`` in quotient form."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    ze, et, ps, x, _, _, ps_z, x_z = aux(k, z, sg, xp)
    return (((ps + z * ps_z - ze) * F - z * ps * Fp) / F**2
            + sign * ((x + z * x_z - et) * Fb - z * x * Fbp) / Fb**2)


def dis0(k, z, sg, sign, xp=np):
    """``[zeta/F +- eta/Fbar]_z`` in quotient form."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    ze, et, _, _, ze_z, et_z, _, _ = aux(k, z, sg, xp)
    return (ze_z * F - ze * Fp) / F**2 + sign * (et_z * Fb - et * Fbp) / Fb**2


def chi_coeffs(z, sg, xp=np):
    """Coefficient family ``(p, q, r, s, t, u)`` of the chi parabolas."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    c, sh = xp.cosh(z), xp.sinh(z)
    cs = c + sh
    a1 = 1 - sg
    tail = -2 * (1 + sg) / a1 + 2 * z * a1 + z**2 * a1
    p = -a1 / Fb * cs
    q = 1 / F * (2 * (1 + sg) * c - 4 * sh + z * a1 * cs * Fp / F)
    r = 1 / Fb * (cs * tail - z * (c * (-1 - sg + z * a1) + sh * (2 + z * a1)) * Fbp / Fb)
    s = -a1 / F * cs
    t = 1 / Fb * (-4 * c + 2 * (1 + sg) * sh + z * a1 * cs * Fbp / Fb)
    u = 1 / F * (cs * tail - z * (c * (2 + z * a1) + sh * (-1 - sg + z * a1)) * Fp / F)
    return p, q, r, s, t, u


def chi(k, z, sg, sign, xp=np):
    """``chi^{+-}(k, z) = k^2 z^2 [s +- p] + kz [t +- q] + u +- r``."""
    p, q, r, s, t, u = chi_coeffs(z, sg, xp)
    return k * k * z * z * (s + sign * p) + k * z * (t + sign * q) + u + sign * r


def xi_coeffs(z, sg, xp=np):
    """Coefficient family ``(a, b, c, d, e, f)`` of the Xi parabolas."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    c, sh = xp.cosh(z), xp.sinh(z)
    q = 1 / (1 - sg)
    a = -z / F * (2 * c - (1 + sg) * sh)
    b = 1 / Fb * (2 * (1 + sg) * q * (c + sh) + z * (2 * sh - (1 + sg) * c) * Fbp / Fb)
    cc = 1 / F * (c * (2 * sg * (1 + sg) * q + 2 * z) + sh * (2 * (3 - sg) * q - z * (1 + sg))
                  - (c * (4 * q - z * (1 + sg)) + sh * ((1 + sg) ** 2 * q + 2 * z)) * Fp / F)
    d = -z / Fb * (2 * sh - (1 + sg) * c)
    e = 1 / F * (2 * (1 + sg) * q * (c + sh) + z * (2 * c - (1 + sg) * sh) * Fp / F)
    f = 1 / Fb * (c * (2 * (3 - sg) * q - z * (1 + sg)) + sh * (2 * sg * (1 + sg) * q + 2 * z)
                  - (c * ((1 + sg) ** 2 * q + 2 * z) + sh * (4 * q - z * (1 + sg))) * Fbp / Fb)
    return a, b, cc, d, e, f


def xi_parabola(k, z, sg, sign, xp=np):
    """``Xi^{+-}(k, z) = k^2 [a +- d] + k [b +- e] + c +- f``."""
    a, b, c, d, e, f = xi_coeffs(z, sg, xp)
    return k * k * (a + sign * d) + k * (b + sign * e) + c + sign * f


def af_terms(z, sg, xp=np):
    """``(2F - F')/F^2`` and ``(2Fbar - Fbar')/Fbar^2``."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    return (2 * F - Fp) / F**2, (2 * Fb - Fbp) / Fb**2


def varsigma_pair(z, sg, xp=np):
    """The pair ``(varsigma, varsigma_bar)`` with ``Xi^+(1) = vs/F^2 + vsb/Fbar^2``."""
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    c, sh = xp.cosh(z), xp.sinh(z)
    q = 1 / (1 - sg)
    vs = (c * (2 * (1 + sg) ** 2 * q * F + Fp * (z * (3 + sg) - 4 * q))
          + sh * (8 * q * F - Fp * (z * (3 + sg) + (1 + sg) ** 2 * q)))
    vsb = (c * (8 * q * Fb - Fbp * (z * (3 + sg) + (1 + sg) ** 2 * q))
           + sh * (2 * (1 + sg) ** 2 * q * Fb + Fbp * (z * (3 + sg) - 4 * q)))
    return vs, vsb


def varsigma_closed(z, sg, xp=np):
    """Closed form of ``varsigma`` as a short exponential sum."""
    return xp.exp(z) / 2 * (-(1 - sg) ** 2 * z - 4 * (1 + sg)
                            - 4 * (3 + sg) * (1 + sg) / (1 - sg) * xp.exp(-2 * z)
                            + (3 + sg) ** 2 * z * xp.exp(-4 * z))


def varsigma_sum_closed(z, sg, xp=np):
    """Closed form of ``varsigma + varsigma_bar``."""
    return -4 * (1 + sg) * (3 + sg) / (1 - sg) * xp.exp(-z)


def varsigma_tilde(z, sg, xp=np):
    """``-(1-sg)^2 z - 4(1+sg) + (3+sg)^2 z exp(-4z)``."""
    return -(1 - sg) ** 2 * z - 4 * (1 + sg) + (3 + sg) ** 2 * z * xp.exp(-4 * z)


def wbar_qbar(z, sg, xp=np):
    """The pair ``(Wbar, Qbar)`` with ``mubar = cosh(z) Wbar + sinh(z) Qbar``."""
    F, Fb, _, _ = F_values(z, sg, xp)
    a1, a2 = af_terms(z, sg, xp)
    common = z * (1 - sg) * (a1 - a2)
    return -4 / Fb - 2 * (1 + sg) / F + common, 2 * (1 + sg) / Fb + 4 / F + common


def mubar1(z, xp=np):
    """``(1+z) cosh(4z) - 2z sinh(4z) - 1``."""
    return (1 + z) * xp.cosh(4 * z) - 2 * z * xp.sinh(4 * z) - 1


def _mu(z, sg, xp):
    p, q, r, s, t, u = chi_coeffs(z, sg, xp)
    return 4 * (s + p) * (u + r) - (t + q) ** 2


def _mu12(z, sg, xp, bar):
    F, Fb, Fp, Fbp = F_values(z, sg, xp)
    if bar:
        return (4 + 2 * z) * Fb - z * Fbp
    return (4 + 2 * z) * F - z * Fp


def _z_only(fn):
    return lambda s, k, z, sg, xp=np: fn(z, sg, xp)


def _k_z(fn, *args):
    return lambda s, k, z, sg, xp=np: fn(k, z, sg, *args, xp=xp)


def _pick(fn, index, *args):
    return lambda s, k, z, sg, xp=np: fn(z, sg, *args, xp=xp)[index]


def _combine(fn, i, j, sign):
    def f(s, k, z, sg, xp=np):
        vals = fn(z, sg, xp=xp)
        return vals[i] + sign * vals[j]
    return f


def _ineq(power, sign):
    def f(s, k, z, sg, xp=np):
        F, Fb, _, _ = F_values(z, sg, xp)
        return 1 / F**power + sign / Fb**power
    return f


def _vertex(sign):
    def f(s, k, z, sg, xp=np):
        a, b, c, d, e, f_ = xi_coeffs(z, sg, xp)
        if sign > 0:
            return b + e + 2 * (a + d)
        return b - e + 2 * (d - a)
    return f


def _mubar(s, k, z, sg, xp=np):
    p, q, r, s_, t, u = chi_coeffs(z, sg, xp)
    return t - q + 2 * z * (p - s_)


def _af_alpha(s, k, z, sg, xp=np):
    F, _, Fp, _ = F_values(z, sg, xp)
    return 2 * F - Fp


# Uniform signature fn(s, k, z, sigma, xp) for every expression name that
# also has an exponential-polynomial expansion.
DIRECT = {
    "phi_g": lambda s, k, z, sg, xp=np: g_part(s, k, z, sg, xp),
    "gmono": lambda s, k, z, sg, xp=np: gmono(s, k, z, sg, xp),
    "dis1_p": _k_z(dis1, 1),
    "dis1_m": _k_z(dis1, -1),
    "dis8_p": _k_z(dis8, 1),
    "dis8_m": _k_z(dis8, -1),
    "dis0_p": _k_z(dis0, 1),
    "dis0_m": _k_z(dis0, -1),
    "chi_p": _k_z(chi, 1),
    "chi_m": _k_z(chi, -1),
    "xi_p": _k_z(xi_parabola, 1),
    "xi_m": _k_z(xi_parabola, -1),
    "ineq1_p": _ineq(1, 1),
    "ineq1_m": _ineq(1, -1),
    "ineq2_p": _ineq(2, 1),
    "ineq2_m": _ineq(2, -1),
    "af_alpha": _af_alpha,
    "af_p": _combine(af_terms, 0, 1, 1),
    "af_m": _combine(af_terms, 0, 1, -1),
    "s_plus_p": _combine(chi_coeffs, 3, 0, 1),
    "s_minus_p": _combine(chi_coeffs, 3, 0, -1),
    "mu": _z_only(_mu),
    "mu1": lambda s, k, z, sg, xp=np: _mu12(z, sg, xp, False),
    "mu2": lambda s, k, z, sg, xp=np: _mu12(z, sg, xp, True),
    "mubar": _mubar,
    "wbar_plus_qbar": _combine(wbar_qbar, 0, 1, 1),
    "wbar_minus_qbar": _combine(wbar_qbar, 0, 1, -1),
    "chi_m_at_m1": lambda s, k, z, sg, xp=np: chi(-1, z, sg, -1, xp),
    "a_plus_d": _combine(xi_coeffs, 0, 3, 1),
    "a_minus_d": _combine(xi_coeffs, 0, 3, -1),
    "vertex_p": _vertex(1),
    "vertex_m": _vertex(-1),
    "xi_p_at_1": lambda s, k, z, sg, xp=np: xi_parabola(1, z, sg, 1, xp),
    "xi_m_at_m1": lambda s, k, z, sg, xp=np: xi_parabola(-1, z, sg, -1, xp),
    "varsigma": _pick(varsigma_pair, 0),
    "varsigma_sum": _combine(varsigma_pair, 0, 1, 1),
    "varsigma_diff": _combine(varsigma_pair, 0, 1, -1),
    "varsigma_tilde": _z_only(varsigma_tilde),
}
