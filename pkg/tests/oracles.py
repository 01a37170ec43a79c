"""Independent high-precision reference values used by the tests.

Nothing here calls into the package's evaluation paths except where a
literal transcription is deliberately run at high precision.
"""

import mpmath as mp


def dps_for(z):
    """Working precision that survives the cancellations up to ``exp(5z)``."""
    return 40 + int(3 * float(z))


def F_mp(z, sg):
    """``F, Fbar, F', Fbar'`` straight from their closed forms."""
    z, sg = mp.mpf(z), mp.mpf(sg)
    F = (3 + sg) / 2 * mp.sinh(2 * z) - z * (1 - sg)
    Fb = (3 + sg) / 2 * mp.sinh(2 * z) + z * (1 - sg)
    Fp = (3 + sg) * mp.cosh(2 * z) - (1 - sg)
    Fbp = (3 + sg) * mp.cosh(2 * z) + (1 - sg)
    return F, Fb, Fp, Fbp


def _kernel_derivs(m, t, w, side):
    """Whole-line fundamental solution ``(1 + m|u|) exp(-m|u|) / (4 m^3)``
    and its first three derivatives at ``t`` (``u = t - w``).

    At ``t == w`` the one-sided derivatives with ``sign(t - w) = side`` are
    used (a load on the edge is the limit of loads just inside it).
    """
    u = t - w
    sgn = mp.sign(u) if u != 0 else side
    d = abs(u)
    e = mp.exp(-m * d) / (4 * m**3)
    f0 = (1 + m * d) * e
    f1 = -m**2 * d * e
    f2 = -m**2 * (1 - m * d) * e
    f3 = m**3 * (2 - m * d) * e
    return f0, sgn * f1, f2, sgn * f3


def modal_bvp(m, y, w, ell, sg, dps=None):
    """``phi_m(y, w)`` from a direct solve of the modal boundary value problem.

    ``v'''' - 2 m^2 v'' + m^4 v = delta(y - w)`` on ``(-ell, ell)`` with the
    free-edge conditions ``v'' - sg m^2 v = 0`` and
    ``v''' - (2 - sg) m^2 v' = 0`` at ``y = +-ell``; then
    ``phi_m = 4 m^3 v``.  The solution is the whole-line kernel plus a
    combination of ``cosh, sinh, y cosh, y sinh`` fixed by a 4x4 system.
    """
    if dps is None:
        dps = dps_for(m * ell) + 20
    with mp.workdps(dps):
        m, y, w, ell, sg = (mp.mpf(v) for v in (m, y, w, ell, sg))

        def basis(t):
            c, s = mp.cosh(m * t), mp.sinh(m * t)
            # rows: value, d1, d2, d3 for cosh, sinh, t cosh, t sinh
            return [
                [c, s, t * c, t * s],
                [m * s, m * c, c + m * t * s, s + m * t * c],
                [m**2 * c, m**2 * s, 2 * m * s + m**2 * t * c, 2 * m * c + m**2 * t * s],
                [m**3 * s, m**3 * c, 3 * m**2 * c + m**3 * t * s,
                 3 * m**2 * s + m**3 * t * c],
            ]

        rows, rhs = [], []
        for e in (ell, -ell):
            b = basis(e)
            k = _kernel_derivs(m, e, w, mp.sign(e))
            rows.append([b[2][i] - sg * m**2 * b[0][i] for i in range(4)])
            rhs.append(-(k[2] - sg * m**2 * k[0]))
            rows.append([b[3][i] - (2 - sg) * m**2 * b[1][i] for i in range(4)])
            rhs.append(-(k[3] - (2 - sg) * m**2 * k[1]))
        c = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
        b = basis(y)
        v = _kernel_derivs(m, y, w, 1)[0] + sum(c[i] * b[0][i] for i in range(4))
        return 4 * m**3 * v


def green_partial_sum(p, q, M, ell, sg):
    """``sum_{m<=M} phi_m / (2 pi m^3) sin(m rho) sin(m x)`` with BVP modes."""
    rho, w = p
    x, y = q
    total = mp.mpf(0)
    for m in range(1, M + 1):
        total += (modal_bvp(m, y, w, ell, sg) / (2 * mp.pi * m**3)
                  * mp.sin(m * rho) * mp.sin(m * x))
    return total
