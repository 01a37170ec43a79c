import csv

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from hingedplate import (BoxLoad, DomainError, GridLoad, ModalProfile, PlateConfig, Point,
                         box_coeffs, green_eval, modal_load_coeff, phi_convolution,
                         solve_box, solve_grid_load)
from hingedplate.loads import box_profiles, mode_profile_table
from hingedplate.modes import cbar_coeffs

CFG = PlateConfig(1.0, 0.2)


def kernel(m, u, order):
    """Derivatives in u of (1 + m|u|) exp(-m|u|) / (4 m^3)."""
    s, d = np.sign(u), abs(u)
    e = np.exp(-m * d) / (4 * m**3)
    return [(1 + m * d) * e, -s * m**2 * d * e, -m**2 * (1 - m * d) * e,
            s * m**3 * (2 - m * d) * e][order]


def conv_quad(m, w, eta, y, order):
    f = lambda t: kernel(m, y - t, order) / (2 * eta)
    pts = [y] if w - eta < y < w + eta else None
    return quad(f, w - eta, w + eta, points=pts, epsabs=1e-16, epsrel=1e-13, limit=200)[0]


def test_modal_load_coeff_trivial():
    load = BoxLoad(np.pi / 2, 0.0, 0.2, 0.1)
    # [TRIVIAL] outside the strip and for even m at mid-span
    assert modal_load_coeff(1, load, 0.5) == 0.0
    assert abs(modal_load_coeff(2, load, 0.0)) < 1e-15
    # (2/pi) * 1/(2 eta) * int sin(mx) over the box / (2 alpha)
    want = 2 / np.pi / (2 * 0.1) * np.sinc(0.2 / np.pi)
    assert modal_load_coeff(1, load, 0.05) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("order", [0, 1, 2, 3])
@pytest.mark.parametrize("m,w,eta,y", [(1, 0.0, 0.1, 0.5), (1, 0.0, 0.1, 0.03),
                                       (4, 0.2, 0.3, -0.6), (7, -0.5, 0.05, -0.52),
                                       (20, 0.1, 0.2, 0.9)])
def test_phi_convolution_matches_quadrature(m, w, eta, y, order):
    # [DERIVED] adaptive quadrature of the kernel derivatives
    got = float(phi_convolution(m, w, eta, y, order))
    want = conv_quad(m, w, eta, y, order)
    assert got == pytest.approx(want, rel=1e-10, abs=1e-13 * abs(kernel(m, 0.0, order) or 1))


def test_phi_convolution_small_eta_limit():
    # [TRIVIAL] the average tends to the kernel value itself
    for y in (0.0, 0.4, -0.9):
        for order in range(4):
            want = kernel(3, y - 0.1, order)
            got = float(phi_convolution(3, 0.1, 1e-7, y, order))
            assert got == pytest.approx(want, rel=1e-6, abs=1e-12)


def test_phi_convolution_far_from_strip_is_finite():
    v = float(phi_convolution(500, -0.9, 0.05, 0.9, 0))
    assert 0 <= v < 1e-300 or v == 0.0
    assert np.isfinite(float(phi_convolution(500, 0.0, 0.05, 0.01, 3)))


def test_phi_convolution_rejects_bad_input():
    with pytest.raises(DomainError):
        phi_convolution(1, 0.0, 0.0, 0.1)
    with pytest.raises(DomainError):
        phi_convolution(1, 0.0, 0.1, 0.1, order=4)


def test_box_coeffs_centered_load_is_even():
    # [TRIVIAL] a load centred at w = 0 gives an even profile: no sinh or y cosh
    c = box_coeffs(np.arange(1, 6), BoxLoad(1.0, 0.0, 0.1, 0.3), CFG)
    assert np.all(np.abs(c[1]) < 1e-15) and np.all(np.abs(c[2]) < 1e-15)


def test_box_coeffs_tend_to_point_load_constants():
    # [DERIVED] c_i -> cbar_i as eta -> 0, at first order in eta
    cfg = CFG
    w = 0.35
    errs = []
    for eta in (1e-2, 1e-3, 1e-4):
        c = np.array([float(v) for v in box_coeffs(2, BoxLoad(1.0, w, 0.1, eta), cfg)])
        cb = np.array([float(v) for v in cbar_coeffs(2, w, cfg)])
        errs.append(np.max(np.abs(c - cb)) / np.max(np.abs(cb)))
    assert errs[2] < errs[1] < errs[0]
    assert errs[0] / errs[1] > 8 and errs[1] / errs[2] > 8


def test_bracket_is_strip_average_of_point_modes():
    # [DERIVED] Gauss-Legendre average of phi_m(y, t)/(4 m^3) over the strip
    load = BoxLoad(1.3, -0.2, 0.2, 0.15)
    for y in (-0.9, -0.25, 0.0, 0.6):
        a = box_profiles(12, load, y, CFG)
        b = mode_profile_table(12, load, y, CFG)
        # the quadrature is exact up to the kink at t = y inside the strip
        tol = 1e-12 if abs(y - load.w) > load.eta else 1e-5
        np.testing.assert_allclose(a, b, rtol=tol)


def test_profile_derivatives_consistent():
    # [DERIVED] central differences of the closed-form derivatives
    prof = ModalProfile(3, BoxLoad(1.2, 0.1, 0.3, 0.25), CFG)
    y = np.array([-0.8, -0.3, 0.0, 0.2, 0.7])
    h = 1e-5
    for order in (1, 2, 3):
        fd = (prof.bracket(y + h, order - 1) - prof.bracket(y - h, order - 1)) / (2 * h)
        scale = np.abs(prof.bracket(y, order)).max()
        np.testing.assert_allclose(fd, prof.bracket(y, order), atol=1e-7 * scale)


def test_profile_satisfies_free_edge_conditions():
    # [TRIVIAL] the constants are built to cancel both conditions
    for m in (1, 4, 9):
        prof = ModalProfile(m, BoxLoad(1.0, 0.3, 0.2, 0.2), CFG)
        for e in (1.0, -1.0):
            u, u1, u2, u3 = (float(prof.bracket(e, n)) for n in range(4))
            sc = max(abs(u2), m**2 * abs(u), 1e-300)
            assert abs(u2 - 0.2 * m**2 * u) <= 1e-11 * sc
            sc = max(abs(u3), m**2 * abs(u1), 1e-300)
            assert abs(u3 - 1.8 * m**2 * u1) <= 1e-11 * sc


def test_solve_box_edges_and_parity():
    load = BoxLoad(1.0, 0.0, 0.2, 0.2)
    assert solve_box(load, Point(0.0, 0.3), 1e-8, CFG).value == 0.0
    a = solve_box(load, Point(2.0, 0.6), 1e-10, CFG)
    b = solve_box(load, Point(2.0, -0.6), 1e-10, CFG)
    assert a.value == pytest.approx(b.value, rel=1e-12)


@given(st.floats(0.3, np.pi - 0.3), st.floats(-0.7, 0.7), st.floats(0.02, np.pi - 0.02),
       st.floats(-1, 1))
def test_solve_box_positive(rho, w, x, y):
    # a positive load on a positive Green function
    r = solve_box(BoxLoad(rho, w, 0.2, 0.2), Point(x, y), 1e-9, CFG)
    assert r.value > r.tail_bound


def test_solve_box_tail_certified():
    load = BoxLoad(1.4, 0.2, 0.1, 0.1)
    q = Point(0.9, -0.3)
    a = solve_box(load, q, 1e-6, CFG)
    b = solve_box(load, q, 1e-11, CFG)
    assert a.tail_bound <= 1e-6
    assert abs(a.value - b.value) <= a.tail_bound


def test_solve_box_approaches_green():
    p, q = Point(1.1, 0.3), Point(2.0, -0.4)
    g = green_eval(p, q, 1e-11, CFG).value
    r = solve_box(BoxLoad(p.x, p.y, 1e-4, 1e-4), q, 1e-11, CFG).value
    assert abs(r - g) < 1e-6


def test_solve_box_rejects_bad_boxes():
    with pytest.raises(DomainError):
        BoxLoad(1.0, 0.0, 0.0, 0.1)
    with pytest.raises(DomainError):
        solve_box(BoxLoad(0.05, 0.0, 0.1, 0.1), Point(1.0, 0.0), 1e-8, CFG)
    with pytest.raises(DomainError):
        solve_box(BoxLoad(1.0, 0.95, 0.1, 0.1), Point(1.0, 0.0), 1e-8, CFG)


def _box_grid(n):
    # box edges on even nodes, half weight on its edges as for a sampled indicator
    x, y = np.linspace(0, np.pi, n), np.linspace(-1, 1, n)
    ix0, ix1 = 60 * (n - 1) // 200, 100 * (n - 1) // 200
    iy0, iy1 = 80 * (n - 1) // 200, 130 * (n - 1) // 200
    fx, fy = np.zeros(n), np.zeros(n)
    fx[ix0:ix1 + 1], fy[iy0:iy1 + 1] = 1, 1
    fx[[ix0, ix1]], fy[[iy0, iy1]] = 0.5, 0.5
    rho, al = (x[ix0] + x[ix1]) / 2, (x[ix1] - x[ix0]) / 2
    w, et = (y[iy0] + y[iy1]) / 2, (y[iy1] - y[iy0]) / 2
    return GridLoad(x, y, np.outer(fy, fx) / (4 * al * et)), BoxLoad(rho, w, al, et)


def test_grid_load_matches_box_solution():
    # [DERIVED] the analytic box solution
    f, load = _box_grid(201)
    for q in (Point(1.0, 0.05), Point(2.5, -0.6)):
        b = solve_box(load, q, 1e-10, CFG)
        g = solve_grid_load(f, q, 1e-9, CFG)
        assert abs(g.value - b.value) <= g.error_estimate + g.tail_bound + b.tail_bound
        assert abs(g.value - b.value) < 1e-7


def test_grid_load_zero_and_positive():
    x, y = np.linspace(0, np.pi, 21), np.linspace(-1, 1, 11)
    zero = GridLoad(x, y, np.zeros((11, 21)))
    assert solve_grid_load(zero, Point(1.0, 0.0), 1e-8, CFG).value == 0.0
    bump = GridLoad(x, y, np.outer(np.ones(11), np.sin(x)))
    r = solve_grid_load(bump, Point(1.0, 0.0), 1e-8, CFG)
    assert r.value > 0 and r.error_estimate >= 0


def test_grid_load_csv_roundtrip(tmp_path):
    x, y = np.linspace(0, np.pi, 5), np.linspace(-1, 1, 3)
    vals = np.arange(15.0).reshape(3, 5)
    p = tmp_path / "load.csv"
    with open(p, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["x", "y", "value"])
        for j in reversed(range(3)):
            for i in range(5):
                wr.writerow([float(x[i]), float(y[j]), float(vals[j, i])])
    g = GridLoad.from_csv(p)
    np.testing.assert_array_equal(g.values, vals)
    np.testing.assert_array_equal(g.x, x)
    g.check(CFG)


def test_grid_load_csv_errors(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("a,b,c\n0,0,1\n")
    with pytest.raises(DomainError):
        GridLoad.from_csv(p)
    p.write_text("x,y,value\n0,-1,1\n1,-1,1\n0,1,1\n")
    with pytest.raises(DomainError):
        GridLoad.from_csv(p)
    p.write_text("x,y,value\n0,-1,one\n")
    with pytest.raises(DomainError):
        GridLoad.from_csv(p)


def test_grid_load_check():
    x, y = np.linspace(0, np.pi, 4), np.linspace(-1, 1, 3)
    with pytest.raises(DomainError):
        GridLoad(x, y, np.zeros((4, 3))).check(CFG)
    with pytest.raises(DomainError):
        GridLoad(x[:-1], y, np.zeros((3, 3))).check(CFG)
    bad = np.zeros((3, 4))
    bad[1, 1] = np.nan
    with pytest.raises(DomainError):
        GridLoad(x, y, bad).check(CFG)
