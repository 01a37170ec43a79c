"""Generate exponential-polynomial expansions of the plate mode expressions.

Every expression used by the mode evaluator and the inequality audit is a
rational function of cosh/sinh of kz, sz, z and 2z with polynomial
coefficients in (k, s, z, sigma).  Written over the common denominator
F^a Fbar^b, the numerator is a finite sum of terms

    P(k, s, z, sigma) * exp(z * (ek*k + es*s + ez))

After the symbolic expansion all cancellations between exponentials are
exact, so each term can be evaluated in double precision without the
catastrophic cancellation that the hyperbolic form suffers for large z.
Each polynomial is re-expressed in the corner variables u = 1 - ek*k and
v = 1 - es*s so that exact zeros at k, s = +-1 survive rounding.

The generator also checks the closed-form displays used in the audit
against their definitions and prints any mismatch.

Run from the repository root::

    python3 tools/gen_expansions.py > src/hingedplate/_expansion_data.py
"""

import sys
import time
from fractions import Fraction

import sympy as sp

k, s, z, sg, q = sp.symbols("k s z sigma q", real=True)
u, v = sp.symbols("u v", real=True)
X, Y, Z, Fs, Fbs = sp.symbols("X Y Z F Fb", positive=True)


def ch(E):
    return (E + 1 / E) / 2


def sh(E):
    return (E - 1 / E) / 2


# F, Fbar as Laurent polynomials in Z = e^z; q stands for 1/(1 - sigma)
F_lp = (3 + sg) / 2 * sh(Z**2) - z * (1 - sg)
Fb_lp = (3 + sg) / 2 * sh(Z**2) + z * (1 - sg)
Fp = (3 + sg) * ch(Z**2) - (1 - sg)
Fbp = (3 + sg) * ch(Z**2) + (1 - sg)


def D(E):
    """Total z-derivative with X = e^{kz}, Y = e^{sz}, Z = e^z, F, Fbar."""
    return (
        sp.diff(E, z)
        + sp.diff(E, X) * k * X
        + sp.diff(E, Y) * s * Y
        + sp.diff(E, Z) * Z
        + sp.diff(E, Fs) * Fp
        + sp.diff(E, Fbs) * Fbp
    )


C, S = ch(X), sh(X)
cz, sz = ch(Z), sh(Z)
r = k * z

zeta = ((4 * q - z * (1 + sg)) * C * cz + ((1 + sg) ** 2 * q + 2 * z) * C * sz
        - 2 * r * S * cz + r * (1 + sg) * S * sz)
eta = (r * (1 + sg) * C * cz - 2 * r * C * sz
       + ((1 + sg) ** 2 * q + 2 * z) * S * cz + (4 * q - z * (1 + sg)) * S * sz)
psi = ((2 + (1 - sg) * z) * C * cz + (-(1 + sg) + z * (1 - sg)) * C * sz
       - r * (1 - sg) * S * cz - r * (1 - sg) * S * sz)
xi = (-r * (1 - sg) * C * cz - r * (1 - sg) * C * sz
      + (-(1 + sg) + z * (1 - sg)) * S * cz + (2 + (1 - sg) * z) * S * sz)

# explicit z-derivatives as printed in the parity lemma
k2 = 1 - k**2
zeta_z = ((2 * sg * (1 + sg) * q + 2 * z * k2) * C * cz
          + (2 * (3 - sg) * q - z * (1 + sg) * k2) * C * sz
          + k * 2 * (1 + sg) * q * S * cz + k * 2 * (1 + sg) * q * S * sz)
eta_z = (k * 2 * (1 + sg) * q * C * cz + k * 2 * (1 + sg) * q * C * sz
         + (2 * (3 - sg) * q - z * (1 + sg) * k2) * S * cz
         + (2 * sg * (1 + sg) * q + 2 * z * k2) * S * sz)
psi_z = ((-2 * sg + z * k2 * (1 - sg)) * C * cz + (3 - sg + z * k2 * (1 - sg)) * C * sz
         + k * (1 + sg) * S * cz - 2 * k * S * sz)
xi_z = (-2 * k * C * cz + k * (1 + sg) * C * sz
        + (3 - sg + z * (1 - sg) * k2) * S * cz + (-2 * sg + z * (1 - sg) * k2) * S * sz)

F, Fb = Fs, Fbs
cY, sY = ch(Y), sh(Y)

g = (cY * (zeta / F + z * psi / F - s * z * xi / Fb)
     + sY * (eta / Fb + z * xi / Fb - s * z * psi / F))

# coefficient families of the chi and Xi parabolas
cs = cz + sz
p_ = -(1 - sg) / Fb * cs
q_ = 1 / F * (2 * (1 + sg) * cz - 4 * sz + z * (1 - sg) * cs * Fp / F)
r_ = 1 / Fb * (cs * (-2 * (1 + sg) * q + 2 * z * (1 - sg) + z**2 * (1 - sg))
               - z * (cz * (-1 - sg + z * (1 - sg)) + sz * (2 + z * (1 - sg))) * Fbp / Fb)
s_ = -(1 - sg) / F * cs
t_ = 1 / Fb * (-4 * cz + 2 * (1 + sg) * sz + z * (1 - sg) * cs * Fbp / Fb)
u_ = 1 / F * (cs * (-2 * (1 + sg) * q + 2 * z * (1 - sg) + z**2 * (1 - sg))
              - z * (cz * (2 + z * (1 - sg)) + sz * (-1 - sg + z * (1 - sg))) * Fp / F)

a_ = -z / F * (2 * cz - (1 + sg) * sz)
b_ = 1 / Fb * (2 * (1 + sg) * q * cs + z * (2 * sz - (1 + sg) * cz) * Fbp / Fb)
c_ = 1 / F * (cz * (2 * sg * (1 + sg) * q + 2 * z) + sz * (2 * (3 - sg) * q - z * (1 + sg))
              - (cz * (4 * q - z * (1 + sg)) + sz * ((1 + sg) ** 2 * q + 2 * z)) * Fp / F)
d_ = -z / Fb * (2 * sz - (1 + sg) * cz)
e_ = 1 / F * (2 * (1 + sg) * q * cs + z * (2 * cz - (1 + sg) * sz) * Fp / F)
f_ = 1 / Fb * (cz * (2 * (3 - sg) * q - z * (1 + sg)) + sz * (2 * sg * (1 + sg) * q + 2 * z)
               - (cz * ((1 + sg) ** 2 * q + 2 * z) + sz * (4 * q - z * (1 + sg))) * Fbp / Fb)

af1 = (2 * F - Fp) / F**2
af2 = (2 * Fb - Fbp) / Fb**2

varsigma = (cz * (2 * (1 + sg) ** 2 * q * F + Fp * (z * (3 + sg) - 4 * q))
            + sz * (8 * q * F - Fp * (z * (3 + sg) + (1 + sg) ** 2 * q)))
varsigma_bar = (cz * (8 * q * Fb - Fbp * (z * (3 + sg) + (1 + sg) ** 2 * q))
                + sz * (2 * (1 + sg) ** 2 * q * Fb + Fbp * (z * (3 + sg) - 4 * q)))
varsigma_tilde = -(1 - sg) ** 2 * z - 4 * (1 + sg) + (3 + sg) ** 2 * z * Z**-4

wbar = -4 / Fb - 2 * (1 + sg) / F + z * (1 - sg) * (af1 - af2)
qbar = 2 * (1 + sg) / Fb + 4 / F + z * (1 - sg) * (af1 - af2)

chi_p = k**2 * z**2 * (s_ + p_) + k * z * (t_ + q_) + u_ + r_
chi_m = k**2 * z**2 * (s_ - p_) + k * z * (t_ - q_) + u_ - r_
xi_pl = k**2 * (a_ + d_) + k * (b_ + e_) + c_ + f_
xi_mi = k**2 * (a_ - d_) + k * (b_ - e_) + c_ - f_

EXPRESSIONS = {
    # mode function and its z-monotonicity
    "phi_g": (g / Z, "skz"),
    "gmono": (D(g) - g, "skz"),
    # inequality chain in (k, z)
    "dis1_p": (psi / F + xi / Fb, "kz"),
    "dis1_m": (psi / F - xi / Fb, "kz"),
    "dis8_p": (D(z * psi / F + z * xi / Fb) - (zeta / F + eta / Fb), "kz"),
    "dis8_m": (D(z * psi / F - z * xi / Fb) - (zeta / F - eta / Fb), "kz"),
    "dis0_p": (D(zeta / F + eta / Fb), "kz"),
    "dis0_m": (D(zeta / F - eta / Fb), "kz"),
    "chi_p": (chi_p, "kz"),
    "chi_m": (chi_m, "kz"),
    "xi_p": (xi_pl, "kz"),
    "xi_m": (xi_mi, "kz"),
    # one-variable families
    "ineq1_p": (1 / F + 1 / Fb, "z"),
    "ineq1_m": (1 / F - 1 / Fb, "z"),
    "ineq2_p": (1 / F**2 + 1 / Fb**2, "z"),
    "ineq2_m": (1 / F**2 - 1 / Fb**2, "z"),
    "af_alpha": (2 * F - Fp, "z"),
    "af_p": (af1 + af2, "z"),
    "af_m": (af1 - af2, "z"),
    "s_plus_p": (s_ + p_, "z"),
    "s_minus_p": (s_ - p_, "z"),
    "mu": (4 * (s_ + p_) * (u_ + r_) - (t_ + q_) ** 2, "z"),
    "mu1": ((4 + 2 * z) * F - z * Fp, "z"),
    "mu2": ((4 + 2 * z) * Fb - z * Fbp, "z"),
    "mubar": (t_ - q_ + 2 * z * (p_ - s_), "z"),
    "wbar_plus_qbar": (wbar + qbar, "z"),
    "wbar_minus_qbar": (wbar - qbar, "z"),
    "chi_m_at_m1": (chi_m.subs(k, -1), "z"),
    "a_plus_d": (a_ + d_, "z"),
    "a_minus_d": (a_ - d_, "z"),
    "vertex_p": (b_ + e_ + 2 * (a_ + d_), "z"),
    "vertex_m": (b_ - e_ + 2 * (d_ - a_), "z"),
    "xi_p_at_1": (xi_pl.subs(k, 1), "z"),
    "xi_m_at_m1": (xi_mi.subs(k, -1), "z"),
    "varsigma": (varsigma, "z"),
    "varsigma_sum": (varsigma + varsigma_bar, "z"),
    "varsigma_diff": (varsigma - varsigma_bar, "z"),
    "varsigma_tilde": (varsigma_tilde, "z"),
}

# closed-form displays that must agree with the definitions above
DISPLAYS = {
    "zeta_z": (D(zeta), zeta_z),
    "eta_z": (D(eta), eta_z),
    "psi_z": (D(psi), psi_z),
    "xi_z": (D(xi), xi_z),
    "psi+xi": (psi + xi, (2 + (1 - sg) * (1 - k) * z) * ch(X * Z)
               + (-(1 + sg) + z * (1 - sg) * (1 - k)) * sh(X * Z)),
    "psi-xi": (psi - xi, (2 + (1 - sg) * (1 + k) * z) * ch(Z / X)
               + (-(1 + sg) + z * (1 - sg) * (1 + k)) * sh(Z / X)),
    "dis8 quotient form": (
        EXPRESSIONS["dis8_p"][0],
        ((psi + z * psi_z - zeta) * F - z * psi * Fp) / F**2
        + ((xi + z * xi_z - eta) * Fb - z * xi * Fbp) / Fb**2),
    "dis8 = cosh W + sinh Q": (
        EXPRESSIONS["dis8_p"][0],
        C * (k**2 * z**2 * s_ + k * z * t_ + u_) + S * (k**2 * z**2 * p_ + k * z * q_ + r_)),
    "dis0 = cosh V + sinh P": (
        EXPRESSIONS["dis0_p"][0],
        C * (k**2 * a_ + k * b_ + c_) + S * (k**2 * d_ + k * e_ + f_)),
    "gmono = W cosh + Q sinh": (
        EXPRESSIONS["gmono"][0],
        cY * (D(zeta / F + z * psi / F) - (zeta / F + z * psi / F)
              + s * (eta / Fb + 2 * z * xi / Fb - D(z * xi / Fb)) - s**2 * z * psi / F)
        + sY * (D(eta / Fb + z * xi / Fb) - (eta / Fb + z * xi / Fb)
                + s * (zeta / F + 2 * z * psi / F - D(z * psi / F)) - s**2 * z * xi / Fb)),
    "F'/F - Fbar'/Fbar": (
        Fp / F - Fbp / Fb,
        (3 + sg) * (1 - sg) / (F * Fb) * (2 * z * ch(Z**2) - sh(Z**2))),
    "mu display": (
        EXPRESSIONS["mu"][0],
        2 * (1 - sg) * (3 + sg) * (1 / F**2 - 1 / Fb**2 + 2 * z / (F * Fb) * (Fp / F - Fbp / Fb))
        + (3 + sg) ** 2 / (F * Fb) ** 2 * (
            ch(Z**2) * ((7 + 10 * sg - sg**2) * sh(Z**2) ** 2 - 4 * (1 - sg) ** 2 * z**2)
            + sh(Z**2) * ((7 + 10 * sg - sg**2) * sh(Z**2) ** 2 + 4 * (1 - sg) ** 2 * z**2))
        - (ch(Z**2) + sh(Z**2)) * z * (1 - sg) ** 2 * (af1 + af2)
        * (((4 + 2 * z) * F - z * Fp) / F**2 + ((4 + 2 * z) * Fb - z * Fbp) / Fb**2)),
    "mu1 closed form": (
        EXPRESSIONS["mu1"][0],
        (3 + sg) * (z * (sh(Z**2) - ch(Z**2)) + 2 * sh(Z**2)) - (1 - sg) * (3 * z + 2 * z**2)),
    "mu2 closed form": (
        EXPRESSIONS["mu2"][0],
        (3 + sg) * (z * (sh(Z**2) - ch(Z**2)) + 2 * sh(Z**2)) + (1 - sg) * (3 * z + 2 * z**2)),
    "mubar display": (
        EXPRESSIONS["mubar"][0],
        2 / (F * Fb) * (sz * ((1 + sg) * F + 2 * Fb) - cz * (2 * F + (1 + sg) * Fb))
        + z * (1 - sg) * cs * (af1 - af2)),
    "mubar = cosh Wbar + sinh Qbar": (EXPRESSIONS["mubar"][0], cz * wbar + sz * qbar),
    "Wbar + Qbar display": (
        wbar + qbar,
        z * (1 - sg) ** 2 / (F * Fb) ** 2 * (
            (3 + sg) ** 2 * ((1 + z) * ch(Z**4) - 2 * z * sh(Z**4) - 1 - z)
            - 8 * z**3 * (1 - sg) ** 2)),
    "chi-(-1) display": (
        chi_m.subs(k, -1),
        -2 * (1 + sg) * q * (1 / F - 1 / Fb) * cs
        + z * (cz * (2 * af1 + (1 + sg) * af2) - sz * ((1 + sg) * af1 + 2 * af2))),
    "a+d display": (
        a_ + d_,
        -z * (cz * (2 / F - (1 + sg) / Fb) + sz * (2 / Fb - (1 + sg) / F))),
    "vertice1 display": (
        b_ + e_ + 2 * (a_ + d_),
        2 * (1 + sg) * q * cs * (1 / F + 1 / Fb)
        + z * (cz * (2 * (Fp / F**2 - 2 / F) - (1 + sg) * (Fbp / Fb**2 - 2 / Fb))
               + sz * (2 * (Fbp / Fb**2 - 2 / Fb) - (1 + sg) * (Fp / F**2 - 2 / F)))),
    "vertice2 display": (
        b_ - e_ + 2 * (d_ - a_),
        -2 * (1 + sg) * q * cs * (1 / F - 1 / Fb)
        + z * (cz * (2 * (2 / F - Fp / F**2) + (1 + sg) * (2 / Fb - Fbp / Fb**2))
               + sz * (-2 * (2 / Fb - Fbp / Fb**2) - (1 + sg) * (2 / F - Fp / F**2)))),
    "Xi+(1) = varsigma/F^2 + varsigma_bar/Fbar^2": (
        xi_pl.subs(k, 1), varsigma / F**2 + varsigma_bar / Fb**2),
    "Xi-(-1) = varsigma/F^2 - varsigma_bar/Fbar^2": (
        xi_mi.subs(k, -1), varsigma / F**2 - varsigma_bar / Fb**2),
    "varsigma closed form": (
        varsigma,
        Z / 2 * (-(1 - sg) ** 2 * z - 4 * (1 + sg) - 4 * (3 + sg) * (1 + sg) * q * Z**-2
                 + (3 + sg) ** 2 * z * Z**-4)),
    "varsigma + varsigma_bar display": (
        varsigma + varsigma_bar, -4 * (1 + sg) * (3 + sg) * q / Z),
    "varsigma - varsigma_bar = e^z varsigma_tilde": (
        varsigma - varsigma_bar, Z * varsigma_tilde),
    "alpha display": (2 * F - Fp, (3 + sg) * (sh(Z**2) - ch(Z**2)) + (1 - sg) * (1 - 2 * z)),
    "AF difference display": (
        af1 - af2,
        2 * (1 - sg) / (F * Fb) ** 2 * (
            (3 + sg) ** 2 / 16 * (Z**4 * (1 - 2 * z) + Z**-4 * (1 + 6 * z) - 4 * z - 2)
            + (1 - sg) ** 2 * (z**2 - 2 * z**3))),
}


def _collect(E):
    """Return (a, b, {(ex, ey, ez): coefficient}) for E over F^a Fbar^b."""
    E = sp.expand(E)
    a = b = 0
    for t in sp.Add.make_args(E):
        pw = t.as_powers_dict()
        a = max(a, -int(pw.get(Fs, 0)))
        b = max(b, -int(pw.get(Fbs, 0)))
    N = sp.expand(sp.expand(E * Fs**a * Fbs**b).subs({Fs: F_lp, Fbs: Fb_lp}))
    out = {}
    for t in sp.Add.make_args(N):
        pw = t.as_powers_dict()
        e = (int(pw.get(X, 0)), int(pw.get(Y, 0)), int(pw.get(Z, 0)))
        c = t / (X**e[0] * Y**e[1] * Z**e[2])
        out[e] = out.get(e, 0) + c
    return a, b, out


def is_zero(E):
    _, _, terms = _collect(E)
    for c in terms.values():
        if sp.expand(sp.numer(sp.together(sp.expand(c).subs(q, 1 / (1 - sg))))) != 0:
            return False
    return True


def expand(E, variables):
    """Shifted exponential-polynomial expansion of E."""
    a, b, raw = _collect(E)
    qdeg = 0
    polys = {}
    for e, c in raw.items():
        P = sp.Poly(sp.expand(c), q)
        polys[e] = P
        qdeg = max(qdeg, P.degree())
    terms = []
    for (ex, ey, ez), P in sorted(polys.items()):
        # multiply through by (1 - sigma)^qdeg so coefficients are polynomial
        c = sum(coef * (1 - sg) ** (qdeg - m[0]) for m, coef in P.terms())
        rep = {}
        if ex:
            rep[k] = ex * (1 - u)
        if ey:
            rep[s] = ey * (1 - v)
        c = sp.expand(c.subs(rep, simultaneous=True))
        gens = (u if ex else k, v if ey else s, z)
        poly = sp.Poly(c, *gens)
        mons = []
        for (i, j, l), coef in sorted(poly.terms()):
            cp = sp.Poly(coef, sg)
            cs_ = [str(Fraction(int(sp.numer(x)), int(sp.denom(x))))
                   for x in reversed(cp.all_coeffs())]
            if any(x != "0" for x in cs_):
                mons.append((i, j, l, tuple(cs_)))
        if mons:
            terms.append((ex, ey, ez, tuple(mons)))
    return {"a": a, "b": b, "qdeg": qdeg, "vars": variables, "terms": tuple(terms)}


def main():
    t0 = time.time()
    bad = []
    for name, (lhs, rhs) in DISPLAYS.items():
        ok = is_zero(lhs - rhs)
        print(f"# display check {name}: {'ok' if ok else 'MISMATCH'}", file=sys.stderr)
        if not ok:
            bad.append(name)
    out = {}
    for name, (E, variables) in EXPRESSIONS.items():
        t = time.time()
        out[name] = expand(E, variables)
        print(f"# {name}: a={out[name]['a']} b={out[name]['b']} "
              f"terms={len(out[name]['terms'])} ({time.time() - t:.1f}s)", file=sys.stderr)
    print('"""Generated by tools/gen_expansions.py; do not edit."""')
    print()
    print("# name -> {a, b, qdeg, vars, terms}; each term is")
    print("# (ek, es, ez, ((i, j, l, sigma-coefficients ascending), ...))")
    print("EXPANSIONS = {")
    for name, rec in out.items():
        print(f"    {name!r}: {rec!r},")
    print("}")
    print(f"# generated in {time.time() - t0:.0f}s; display mismatches: {bad}", file=sys.stderr)


if __name__ == "__main__":
    main()
