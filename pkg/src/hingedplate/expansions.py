"""Stable evaluation of exponential-polynomial expansions.

Every quantity of the mode function and of the inequality chain is a finite
sum

    sum_t P_t(u, v, z) exp(z (ek k + es s + ez)) / (F^a Fbar^b)

where ``P_t`` is a polynomial with coefficients rational in the Poisson
ratio.  The expansions are generated once with sympy (``tools/``) and stored
in :mod:`hingedplate._expansion_data`.  For a term with ``ek != 0`` the
polynomial is written in ``u = 1 - ek*k`` instead of ``k`` (likewise
``v = 1 - es*s``), so terms that cancel exactly at the edges ``|k| = 1``
vanish exactly in floating point instead of leaving rounding noise.

Evaluation is done relative to the largest exponential present, so the
result comes back as ``mantissa * exp(exponent)`` and never overflows.
For small z the exponentials nearly coincide and the expansion cancels
badly, so below :data:`Z_SWITCH` the literal hyperbolic forms of
:mod:`hingedplate.formulas` supply the value instead.
"""

from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._expansion_data import EXPANSIONS
from .core import F_pair_mantissa, Scaled, check_sigma
from .errors import DomainError
from .formulas import DIRECT

NAMES = tuple(EXPANSIONS)
#: At and below this z the literal forms are used (both paths agree to
#: ~1e-15 relative near the switch).
Z_SWITCH = 1.0


@lru_cache(maxsize=256)
def _exact(name, sigma):
    """Monomial coefficients at ``sigma`` as exact fractions."""
    rec = EXPANSIONS[name]
    sg = Fraction(sigma)
    den = (1 - sg) ** rec["qdeg"]
    out = {}
    for ek, es, ez, mons in rec["terms"]:
        rows = {}
        for i, j, l, coeffs in mons:
            c = sum((Fraction(x) * sg**n for n, x in enumerate(coeffs)), Fraction(0))
            if c:
                rows[i, j, l] = c / den
        out[ek, es, ez] = rows
    return out


def _rounded(exact):
    out = []
    for (ek, es, ez), rows in exact.items():
        rows = tuple((i, j, l, float(c)) for (i, j, l), c in rows.items() if c)
        if rows:
            out.append((ek, es, ez, rows))
    return tuple(out)


@lru_cache(maxsize=256)
def _coefficients(key, sigma):
    """Float monomial coefficients at ``sigma`` (exact rational arithmetic).

    ``key`` is an expansion name or a pair ``(a, b)`` standing for the
    difference ``a - b``, formed exactly before rounding.
    """
    if isinstance(key, str):
        return _rounded(_exact(key, sigma))
    a, b = (_exact(n, sigma) for n in key)
    diff = {}
    for term in set(a) | set(b):
        ra, rb = a.get(term, {}), b.get(term, {})
        diff[term] = {m: ra.get(m, 0) - rb.get(m, 0) for m in set(ra) | set(rb)}
    return _rounded(dict(sorted(diff.items())))


def _record(key):
    """``(a, b)`` powers of the F denominators for a key; checks the names."""
    names = (key,) if isinstance(key, str) else key
    for n in names:
        if n not in EXPANSIONS:
            raise KeyError(f"unknown expansion {n!r}")
    powers = {(EXPANSIONS[n]["a"], EXPANSIONS[n]["b"]) for n in names}
    if len(powers) != 1:
        raise ValueError("a difference needs equal denominators")
    return powers.pop()


def _direct(key, s, k, z, sigma):
    if isinstance(key, str):
        return DIRECT[key](s, k, z, sigma)
    return DIRECT[key[0]](s, k, z, sigma) - DIRECT[key[1]](s, k, z, sigma)


class ScaledResult:
    """Result of :func:`evaluate`.

    Attributes
    ----------
    mantissa, exponent : ndarray
        The value is ``mantissa * exp(exponent)``.
    scale : ndarray
        Sum of absolute monomial contributions, same exponent.  The ratio
        ``mantissa / scale`` measures how much cancellation took place.
    """

    __slots__ = ("mantissa", "exponent", "scale")

    def __init__(self, mantissa, exponent, scale):
        self.mantissa, self.exponent, self.scale = mantissa, exponent, scale

    def value(self):
        return Scaled(self.mantissa, self.exponent).value()

    def relative(self):
        with np.errstate(invalid="ignore", divide="ignore"):
            r = self.mantissa / self.scale
        return np.where(self.scale > 0, r, 0.0)


def evaluate(name, sigma, z, k=0.0, s=0.0, direct=True):
    """Evaluate the expansion ``name`` at broadcastable ``(s, k, z)``.

    Parameters
    ----------
    name : str or tuple
        Key of :data:`EXPANSIONS`, e.g. ``"phi_g"`` for ``exp(-z) g``, or a
        pair ``(a, b)`` for the difference ``a - b`` expanded exactly.
    sigma : float
        Poisson ratio.
    z, k, s : array_like
        Scaled coordinates; ``k`` and ``s`` are ignored by expressions that
        do not depend on them.
    direct : bool
        Use the literal forms for ``z <= Z_SWITCH`` (default).  With
        ``False`` the expansion is used everywhere.

    Returns
    -------
    ScaledResult
    """
    a, b = _record(name)
    check_sigma(sigma)
    z = np.asarray(z, dtype=float)
    if np.any(~(z > 0)):
        raise DomainError("z must be positive")
    k = np.asarray(k, dtype=float)
    s = np.asarray(s, dtype=float)
    z, k, s = (np.array(x) for x in np.broadcast_arrays(z, k, s))

    # running sums relative to the largest live exponential seen so far
    zp = {}
    ref = np.full(z.shape, -np.inf)
    mant = np.zeros(z.shape)
    scale = np.zeros(z.shape)
    for ek, es, ez, rows in _coefficients(name, float(sigma)):
        kk = 1 - ek * k if ek else k
        ss = 1 - es * s if es else s
        P = np.zeros(z.shape)
        A = np.zeros(z.shape)
        for i, j, l, c in rows:
            if l not in zp:
                zp[l] = z**l
            mono = c * zp[l]
            if i:
                mono = mono * kk**i
            if j:
                mono = mono * ss**j
            P += mono
            A += np.abs(mono)
        E = z * (ek * k + es * s + ez - 2 * (a + b))
        live = A > 0
        new = np.where(live, np.maximum(ref, E), ref)
        with np.errstate(invalid="ignore", over="ignore"):
            old = np.where(np.isfinite(ref), np.exp(ref - new), 0.0)
            w = np.where(live, np.exp(E - new), 0.0)
        mant = mant * old + P * w
        scale = scale * old + A * w
        ref = new
    ref = np.where(np.isfinite(ref), ref, 0.0)
    if a or b:
        Fm, Fbm = F_pair_mantissa(z, sigma)
        den = Fm**a * Fbm**b
        mant = mant / den
        scale = scale / den
    small = z <= Z_SWITCH
    if direct and np.any(small):
        lit = _direct(name, s[small], k[small], z[small], float(sigma))
        mant = np.array(mant, dtype=float)
        mant[small] = lit * np.exp(-ref[small])
    return ScaledResult(np.asarray(mant), np.asarray(ref), np.asarray(scale))


def value(name, sigma, z, k=0.0, s=0.0, direct=True):
    """Plain value of an expansion (may under- or overflow for huge z)."""
    return evaluate(name, sigma, z, k, s, direct).value()


@lru_cache(maxsize=256)
def _tensors(name, sigma):
    """Per term: exponent triple and dense coefficient tensors C[i, j, l]."""
    out = []
    for ek, es, ez, rows in _coefficients(name, sigma):
        ni = max(r[0] for r in rows) + 1
        nj = max(r[1] for r in rows) + 1
        nl = max(r[2] for r in rows) + 1
        C = np.zeros((ni, nj, nl))
        for i, j, l, c in rows:
            C[i, j, l] = c
        out.append((ek, es, ez, C))
    return tuple(out)


def evaluate_grid(name, sigma, z, k=(0.0,), s=(0.0,), direct=True):
    """Evaluate on the tensor grid ``s x k x z`` (result shape ``(ns, nk, nz)``).

    Same result as :func:`evaluate` on the broadcast grid, but the
    polynomial parts are contracted one axis at a time, which is much
    cheaper for the large verification grids.
    """
    a, b = _record(name)
    check_sigma(sigma)
    z = np.asarray(z, dtype=float).ravel()
    k = np.asarray(k, dtype=float).ravel()
    s = np.asarray(s, dtype=float).ravel()
    if np.any(~(z > 0)):
        raise DomainError("z must be positive")
    shape = (s.size, k.size, z.size)

    def powers(x, n):
        return x[None, :] ** np.arange(n)[:, None]

    ref = np.full(shape, -np.inf)
    mant = np.zeros(shape)
    scale = np.zeros(shape)
    for ek, es, ez, C in _tensors(name, float(sigma)):
        kk = 1 - ek * k if ek else k
        ss = 1 - es * s if es else s
        Vk, Vs, Vz = powers(kk, C.shape[0]), powers(ss, C.shape[1]), powers(z, C.shape[2])
        P = np.einsum("ijl,ia,jb,lc->bac", C, Vk, Vs, Vz, optimize=True)
        A = np.einsum("ijl,ia,jb,lc->bac", np.abs(C), np.abs(Vk), np.abs(Vs), Vz,
                      optimize=True)
        E = z[None, None, :] * (ek * k[None, :, None] + es * s[:, None, None]
                                + (ez - 2 * (a + b)))
        live = A > 0
        new = np.where(live, np.maximum(ref, E), ref)
        with np.errstate(invalid="ignore", over="ignore"):
            old = np.where(np.isfinite(ref), np.exp(ref - new), 0.0)
            w = np.where(live, np.exp(E - new), 0.0)
        mant = mant * old + P * w
        scale = scale * old + A * w
        ref = new
    ref = np.where(np.isfinite(ref), ref, 0.0)
    if a or b:
        Fm, Fbm = F_pair_mantissa(z, sigma)
        den = Fm**a * Fbm**b
        mant = mant / den
        scale = scale / den
    nsmall = int(np.sum(z <= Z_SWITCH))
    if direct and nsmall:
        zz = z[z <= Z_SWITCH]
        lit = _direct(name, s[:, None, None], k[None, :, None], zz[None, None, :], float(sigma))
        lit = np.broadcast_to(lit, (s.size, k.size, zz.size))
        sel = z <= Z_SWITCH
        mant[:, :, sel] = lit * np.exp(-ref[:, :, sel])
    return ScaledResult(mant, ref, scale)
