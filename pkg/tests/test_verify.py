import json
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from hingedplate import (DomainError, InequalityId, PlateConfig, VerifyGrid, check, check_all,
                         check_sin_lemmas, constants)
from hingedplate import expansions, formulas
from hingedplate.verify import (C_N, Cbar_N, a_coeff, alpha, inv_square_tail, mubar1_at_one,
                                upsilon, upsilon_zero)

SMALL = VerifyGrid(nk=21, ns=11, nz=60, nomega=11, n_max=12, n_points=60)


def test_alpha_at_zero():
    # [PAPER] alpha(0) = -2(1 + sigma)
    for sg in (0.0, 0.2, 0.45):
        assert alpha(0.0, sg) == pytest.approx(-2 * (1 + sg), rel=1e-15)


def test_alpha_matches_definition():
    # [DERIVED] 2F - F' from the closed forms
    for z in (0.1, 1.0, 3.0):
        F = (3.2) / 2 * math.sinh(2 * z) - z * 0.8
        Fp = 3.2 * math.cosh(2 * z) - 0.8
        assert alpha(z, 0.2) == pytest.approx(2 * F - Fp, rel=1e-12)


def test_mubar1_at_one():
    # [PAPER] 2 e^-4 - 1
    assert mubar1_at_one() == pytest.approx(2 * math.exp(-4) - 1, rel=1e-12)
    assert mubar1_at_one() == pytest.approx(-0.96337, abs=1e-5)


@pytest.mark.parametrize("sg", [0.0, 0.2, 0.4])
def test_varsigma_sum_display(sg):
    # [PAPER] varsigma + varsigma_bar = -4(1+sigma)(3+sigma)/(1-sigma) e^-z
    with mp.workdps(60):
        for z in (0.05, 0.7, 4.0, 20.0):
            want = -4 * (1 + sg) * (3 + sg) / (1 - sg) * mp.exp(-z)
            got = expansions.evaluate("varsigma_sum", sg, z)
            assert float(got.mantissa) * math.exp(float(got.exponent) + z) == pytest.approx(
                float(want * mp.exp(z)), rel=1e-12)


@given(st.floats(-1, 1), st.floats(-1, 1), st.floats(0.01, 8.0), st.sampled_from([0.0, 0.2, 0.4]))
def test_gmono_is_z_derivative_of_g(s, k, z, sg):
    # [DERIVED] exp(z) d/dz [exp(-z) g] by high-precision numerical differentiation
    with mp.workdps(50):
        f = lambda t: formulas.g_part(mp.mpf(s), mp.mpf(k), t, mp.mpf(sg), xp=mp)
        want = mp.diff(f, mp.mpf(z)) * mp.exp(z)
        sc = abs(f(mp.mpf(z))) * mp.exp(z) + abs(want)
    got = expansions.value("gmono", sg, z, k, s)
    assert abs(got - float(want)) <= 1e-11 * float(sc)


def test_a_coeff_and_upsilon():
    # [DERIVED] a_3 = (3^-1.5 - 4^-1.5)^2
    assert a_coeff(3) == pytest.approx(4.5495e-3, rel=1e-4)
    for m in (3, 7, 20):
        assert upsilon(m, 0.0) == 0.0
        t = upsilon_zero(m)
        assert 2 * np.pi / (2 * m + 1) < t < 3 * np.pi / (2 * m)
        assert abs(upsilon(m, t)) < 1e-13


def test_sin2_example():
    # [TRIVIAL] sin(3t)/sin(t) = 3 - 4 sin^2(t) = 1 + sqrt(2) at t = pi/8
    t = np.pi / 8
    assert np.sin(3 * t) / np.sin(t) == pytest.approx(1 + np.sqrt(2), rel=1e-14)
    rep = check(InequalityId.SIN2, SMALL)
    assert rep.passed


def test_constants_printed_values():
    rows = constants(40)
    # [PAPER] x_1 = arcsin(pi^2/6 - 1) ~ 0.70 and x_3 ~ 0.25
    assert rows[0].x == pytest.approx(math.asin(math.pi**2 / 6 - 1), rel=1e-14)
    assert abs(rows[0].x - 0.70) < 5e-3
    assert abs(rows[2].x - 0.25) < 5e-3 and rows[2].x < math.pi / 5
    assert rows[2].C == pytest.approx(0.24425, abs=1e-5)
    for r in rows[1:]:
        assert r.C < 1 / r.N
        if r.Cbar is not None:
            assert r.Cbar < math.sin(math.pi / (r.N + 3))


def test_constant_sums_against_mpmath():
    # [DERIVED] zeta(2) tails and partial sums at high precision
    with mp.workdps(40):
        for N in (1, 5, 40):
            tail = mp.zeta(2) - mp.fsum(mp.mpf(1) / m**2 for m in range(1, N + 1))
            assert inv_square_tail(N) == pytest.approx(float(tail), rel=1e-13)
            den = mp.fsum(mp.mpf(1) / m**3 for m in range(1, N + 1))
            assert C_N(N) == pytest.approx(float(tail / den), rel=1e-13)
        N = 5
        a = lambda m: (mp.mpf(m) ** -1.5 - mp.mpf(m + 1) ** -1.5) ** 2
        den = mp.mpf(1) / 2 + a(3) + a(5)
        tail = mp.zeta(2) - mp.fsum(mp.mpf(1) / m**2 for m in range(1, N + 2))
        assert Cbar_N(N) == pytest.approx(float(tail / den), rel=1e-13)


def test_constants_table_shape():
    rows = constants(7)
    assert [r.N for r in rows] == list(range(1, 8))
    assert [r.N for r in rows if r.Cbar is not None] == [3, 5, 7]
    with pytest.raises(DomainError):
        constants(2)


def test_unknown_id():
    with pytest.raises(KeyError):
        check("NOT_AN_ID")


def test_verify_grid_validation():
    with pytest.raises(DomainError):
        VerifyGrid(nk=1)
    with pytest.raises(DomainError):
        VerifyGrid(z_min=2.0, z_max=1.0)
    with pytest.raises(DomainError):
        VerifyGrid(n_max=2)
    assert VerifyGrid().describe()["nz"] == 400


@pytest.mark.parametrize("id_", list(InequalityId))
def test_every_id_passes_on_reduced_grid(id_):
    rep = check(id_, SMALL)
    assert rep.passed, rep.to_json()
    assert rep.evaluations > 0
    assert rep.id is id_


def test_report_json_is_deterministic():
    a = check(InequalityId.MU_POSITIVE, SMALL).to_json()
    b = check("MU_POSITIVE", SMALL).to_json()
    assert a == b
    d = json.loads(a)
    assert list(d) == sorted(d) and d["id"] == "MU_POSITIVE"


def test_check_all_order_and_subset():
    reps = check_all(SMALL, ids=["DIS2", "PARITY"])
    assert [r.id.value for r in reps] == ["DIS2", "PARITY"]


def test_sigma_outside_default_set_still_reports():
    # every id runs for a negative Poisson ratio; the margins are reported either way
    reps = check_all(SMALL, PlateConfig(1.0, -0.3, experimental_sigma=True))
    assert len(reps) == len(InequalityId)
    assert all(np.isfinite(r.min_margin) for r in reps)


def test_sin_lemmas_entry_point():
    reps = check_sin_lemmas(10, n_points=40)
    assert [r.id for r in reps] == [InequalityId.SIN2, InequalityId.SIN3,
                                    InequalityId.UPSILON_ZEROS]
    assert all(r.passed for r in reps)
    with pytest.raises(DomainError):
        check_sin_lemmas(2)
