import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from hingedplate import (DomainError, F_derivs, F_pair, PlateConfig, Point, ScaledCoords,
                         aux_values)
from hingedplate.core import Z_SERIES, Scaled, hyperbolic_basis, sum_scaled
from hingedplate.formulas import aux
from hingedplate.verify import alpha

from oracles import F_mp

SIGMAS = [0.0, 0.2, 0.4, 0.49]


# --- configuration ------------------------------------------------------

def test_plate_config_accepts_default_range():
    cfg = PlateConfig(1, 0)
    assert cfg.ell == 1.0 and isinstance(cfg.ell, float)
    PlateConfig(0.5, 0.999)


@pytest.mark.parametrize("ell", [0.0, -1.0, np.inf, np.nan])
def test_plate_config_rejects_bad_ell(ell):
    with pytest.raises(DomainError):
        PlateConfig(ell, 0.2)


def test_sigma_one_names_the_division():
    with pytest.raises(DomainError, match="1 - sigma"):
        PlateConfig(1.0, 1.0)
    with pytest.raises(DomainError, match="1 - sigma"):
        PlateConfig(1.0, 1 - 1e-7, experimental_sigma=True)


def test_negative_sigma_needs_experimental_flag():
    with pytest.raises(DomainError):
        PlateConfig(1.0, -0.3)
    assert PlateConfig(1.0, -0.3, experimental_sigma=True).sigma == -0.3
    with pytest.raises(DomainError):
        PlateConfig(1.0, -1.0, experimental_sigma=True)


def test_point_check():
    cfg = PlateConfig(1.0, 0.2)
    Point(0.0, -1.0).check(cfg)
    Point(np.pi, 1.0).check(cfg)
    with pytest.raises(DomainError):
        Point(-0.1, 0).check(cfg)
    with pytest.raises(DomainError):
        Point(1.0, 1.1).check(cfg)


def test_scaled_coords_validation():
    ScaledCoords(1.0, -1.0, 1e-3)
    for bad in [(1.1, 0, 1), (0, -1.1, 1), (0, 0, 0.0), (0, 0, -1)]:
        with pytest.raises(DomainError):
            ScaledCoords(*bad)


# --- scaled arithmetic --------------------------------------------------

def test_sum_scaled_ignores_zero_mantissas():
    r = sum_scaled([(0.0, 1e6), (2.0, 1.0), (-1.0, 0.0)])
    assert r.exponent == 1.0
    assert r.value() == pytest.approx(2 * np.e - 1, rel=1e-15)


def test_scaled_log_of_huge_value():
    assert Scaled(0.5, 1e4).log() == pytest.approx(np.log(0.5) + 1e4, rel=1e-15)


# --- F and its derivative -----------------------------------------------

def test_F_pair_reference_value():
    # [DERIVED] closed form at 50 digits; the rounded figures 5.002976 / 6.602976
    F, Fb = F_pair(1.0, 0.2)
    Fo, Fbo, _, _ = F_mp(1, 0.2)
    assert float(F.value()) == pytest.approx(float(Fo), rel=1e-15)
    assert float(Fb.value()) == pytest.approx(float(Fbo), rel=1e-15)
    assert abs(float(F.value()) - 5.002976) < 1e-6
    assert abs(float(Fb.value()) - 6.602976) < 1e-6


@pytest.mark.parametrize("z", [1e-9, 5e-7, Z_SERIES, 2e-6, 1e-3, 0.7, 3.0, 40.0, 300.0])
@pytest.mark.parametrize("sg", SIGMAS)
def test_F_pair_against_mpmath(z, sg):
    with mp.workdps(60):
        Fo, Fbo, Fpo, Fbpo = F_mp(z, sg)
        scale = mp.exp(-2 * mp.mpf(z))
        want = [float(v * scale) for v in (Fo, Fbo, Fpo, Fbpo)]
    F, Fb = F_pair(z, sg)
    Fp, Fbp = F_derivs(z, sg)
    for got, ref in zip((F, Fb, Fp, Fbp), want):
        assert got.exponent == pytest.approx(2 * z)
        assert got.mantissa == pytest.approx(ref, rel=1e-14)


def test_F_small_z_limit():
    # [TRIVIAL] sinh(2z) ~ 2z
    for sg in SIGMAS:
        F, _ = F_pair(1e-9, sg)
        assert float(F.value()) / 1e-9 == pytest.approx(2 * (1 + sg), rel=1e-12)


@given(st.floats(1e-8, 1e4), st.sampled_from(SIGMAS))
def test_Fbar_minus_F_is_linear(z, sg):
    # [TRIVIAL] Fbar - F = 2z(1 - sigma); in the shared scale the difference
    # is resolved up to rounding of the mantissas
    F, Fb = F_pair(z, sg)
    want = 2 * z * (1 - sg) * np.exp(-2 * z)
    assert abs((Fb.mantissa - F.mantissa) - want) <= 4e-16 * Fb.mantissa
    assert Fb.mantissa >= F.mantissa > 0


def test_F_order_strict_where_resolvable():
    # 2z(1-sigma) exp(-2z) falls below one ulp of the mantissa near z = 19,
    # beyond which Fbar > F holds only as the exact difference above
    z = np.geomspace(1e-3, 15, 300)
    for sg in SIGMAS:
        F, Fb = F_pair(z, sg)
        assert np.all(Fb.mantissa > F.mantissa) and np.all(F.mantissa > 0)


def test_F_pair_finite_up_to_working_range():
    z = np.geomspace(1e-3, 1e5, 200)
    F, Fb = F_pair(z, 0.2)
    assert np.all(np.isfinite(F.mantissa)) and np.all(F.mantissa > 0)
    assert np.all(Fb.mantissa >= F.mantissa)


def test_F_rejects_nonpositive_z():
    with pytest.raises(DomainError):
        F_pair(0.0, 0.2)
    with pytest.raises(DomainError):
        F_derivs(-1.0, 0.2)


def test_F_derivs_reference_value():
    # [DERIVED] 3.2 cosh(2) - 0.8 = 11.2390262..., from the closed form at 50 digits
    Fp, _ = F_derivs(1.0, 0.2)
    with mp.workdps(50):
        want = float(3.2 * mp.cosh(2) - mp.mpf("0.8"))
    assert float(Fp.value()) == pytest.approx(want, rel=1e-15)
    assert float(Fp.value()) == pytest.approx(11.239026, abs=1e-6)


def test_F_derivs_at_zero():
    # [TRIVIAL] F'(0) = 2 + 2 sigma
    for sg in SIGMAS:
        Fp, Fbp = F_derivs(1e-12, sg)
        assert float(Fp.value()) == pytest.approx(2 + 2 * sg, rel=1e-10)
        assert float(Fbp.value()) == pytest.approx(4.0, rel=1e-10)


@pytest.mark.parametrize("sg", SIGMAS)
def test_alpha_at_zero(sg):
    # [PAPER] alpha(0) = -2(1 + sigma)
    assert alpha(0.0, sg) == pytest.approx(-2 * (1 + sg), rel=1e-15)


# --- auxiliary functions ------------------------------------------------

def test_hyperbolic_basis_matches_plain_products():
    k, z = 0.37, 2.5
    got = np.array(hyperbolic_basis(k, z)) * np.exp(z * (1 + abs(k)))
    want = [np.cosh(k * z) * np.cosh(z), np.cosh(k * z) * np.sinh(z),
            np.sinh(k * z) * np.cosh(z), np.sinh(k * z) * np.sinh(z)]
    assert got == pytest.approx(want, rel=1e-14)


def test_aux_odd_parts_vanish_at_k_zero():
    # [TRIVIAL] every term of eta and xi carries sinh(kz) or k
    z = np.geomspace(1e-3, 1e5, 50)
    a = aux_values((0.0, z), 0.2)
    for name in ("eta", "xi", "eta_z", "xi_z"):
        assert np.all(getattr(a, name) == 0)


def _psi_plus_xi(k, z, sg):
    # [PAPER] (2 + (1-sg)(1-k)z) cosh((1+k)z) + (-(1+sg) + z(1-sg)(1-k)) sinh((1+k)z)
    return ((2 + (1 - sg) * (1 - k) * z) * mp.cosh((1 + k) * z)
            + (-(1 + sg) + z * (1 - sg) * (1 - k)) * mp.sinh((1 + k) * z))


@given(st.floats(-1, 1), st.floats(1e-3, 200), st.sampled_from(SIGMAS))
def test_psi_plus_xi_display(k, z, sg):
    a = aux_values((k, z), sg)
    got = (a.psi + a.xi) * 1.0
    with mp.workdps(30):
        want = _psi_plus_xi(mp.mpf(k), mp.mpf(z), sg) * mp.exp(-z * (1 + abs(mp.mpf(k))))
    scale = abs(a.psi) + abs(a.xi)
    assert abs(float(got - want)) <= 1e-13 * max(scale, 1e-300)


@given(st.floats(0, 1), st.floats(1e-3, 1e5), st.sampled_from(SIGMAS + [-0.3]))
def test_aux_parity(k, z, sg):
    # [PAPER] zeta, psi even in k; eta, xi odd in k (derivatives too)
    a, b = aux_values((k, z), sg), aux_values((-k, z), sg)
    for name, sign in [("zeta", 1), ("psi", 1), ("eta", -1), ("xi", -1),
                       ("zeta_z", 1), ("psi_z", 1), ("eta_z", -1), ("xi_z", -1)]:
        u, v = getattr(a, name), sign * getattr(b, name)
        assert abs(u - v) <= 1e-12 * max(abs(u), 1e-300)


def test_aux_parity_on_grid():
    k = np.linspace(-1, 1, 201)
    z = np.geomspace(1e-3, 50, 60)
    K, Z = np.meshgrid(k, z)
    a, b = aux_values((K, Z), 0.2), aux_values((-K, Z), 0.2)
    for name, sign in [("zeta", 1), ("psi", 1), ("eta", -1), ("xi", -1)]:
        u, v = getattr(a, name), sign * getattr(b, name)
        assert np.all(np.abs(u - v) <= 1e-12 * np.abs(u) + 1e-300)


def test_aux_against_literal_mpmath():
    # literal hyperbolic transcription at 40 digits as the reference
    rng = np.random.default_rng(1)
    for _ in range(40):
        k, z, sg = rng.uniform(-1, 1), 10 ** rng.uniform(-3, 2), rng.choice(SIGMAS)
        a = aux_values((k, z), sg)
        with mp.workdps(40):
            ref = aux(mp.mpf(k), mp.mpf(z), mp.mpf(sg), xp=mp)
            scale = mp.exp(-mp.mpf(z) * (1 + abs(mp.mpf(k))))
            ref = [float(r * scale) for r in ref]
        got = [a.zeta, a.eta, a.psi, a.xi, a.zeta_z, a.eta_z, a.psi_z, a.xi_z]
        size = max(abs(v) for v in ref)
        for g, r in zip(got, ref):
            assert abs(float(g) - r) <= 1e-13 * size


def test_aux_derivatives_by_finite_differences():
    # z-derivatives against central differences of the unscaled values
    rng = np.random.default_rng(2)
    h = 1e-5
    for _ in range(100):
        k, z, sg = rng.uniform(-1, 1), rng.uniform(0.05, 6), rng.choice(SIGMAS)
        up, dn = aux_values((k, z + h), sg), aux_values((k, z - h), sg)
        mid = aux_values((k, z), sg)
        for name in ("zeta", "eta", "psi", "xi"):
            fd = (up.unscaled(name) - dn.unscaled(name)) / (2 * h)
            an = mid.unscaled(name + "_z")
            size = max(abs(mid.unscaled(n)) for n in ("zeta", "psi", "zeta_z", "psi_z"))
            assert abs(fd - an) <= 1e-7 * size


def test_aux_mantissas_stay_representable():
    k = np.linspace(-1, 1, 41)
    z = np.geomspace(1e-3, 1e5, 80)
    K, Z = np.meshgrid(k, z)
    a = aux_values((K, Z), 0.2)
    for name in ("zeta", "eta", "psi", "xi", "zeta_z", "eta_z", "psi_z", "xi_z"):
        v = np.abs(getattr(a, name))
        assert np.all(np.isfinite(v))
        nz = v[v != 0]
        assert nz.max() < 1e300 and nz.min() > 1e-300


@pytest.mark.parametrize("sg", SIGMAS)
def test_psi_positive(sg):
    k = np.linspace(-1, 1, 201)
    z = np.geomspace(1e-3, 50, 400)
    K, Z = np.meshgrid(k, z)
    assert np.all(aux_values((K, Z), sg).psi > 0)


def test_aux_rejects_sigma_one():
    with pytest.raises(DomainError, match="1 - sigma"):
        aux_values((0.5, 1.0), 1.0)
