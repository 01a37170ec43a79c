import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from hingedplate import (DomainError, GridSpec, PlateConfig, Point, ToleranceUnreachable,
                         green_eval, green_grid, phi_m, positivity_scan)
from hingedplate.green import choose_modes, lower_bound_margin, tail_bounds

from oracles import green_partial_sum

CFG = PlateConfig(1.0, 0.2)
interior = st.floats(0.01, np.pi - 0.01)
ordinate = st.floats(-1, 1)


def test_edges_vanish():
    # [TRIVIAL] sin(0) = sin(m pi) = 0 termwise
    for p, q in [(Point(0.0, 0.3), Point(1.0, 0.0)), (Point(np.pi, 0.3), Point(1.0, 0.0)),
                 (Point(1.0, 0.3), Point(0.0, -1.0)), (Point(1.0, 0.3), Point(np.pi, 1.0))]:
        r = green_eval(p, q, 1e-8, CFG)
        assert r.value == 0.0 and r.tail_bound == 0.0


def test_partial_sum_matches_bvp_modes():
    # [DERIVED] same truncation with every mode from the mpmath boundary solve
    p, q = Point(1.3, 0.2), Point(2.0, -0.6)
    r = green_eval(p, q, 1e-4, CFG)
    want = green_partial_sum((p.x, p.y), (q.x, q.y), r.terms_used, 1.0, 0.2)
    assert r.value == pytest.approx(float(want), rel=1e-12)


def test_tail_bound_is_minimal_and_certified():
    p, q = Point(0.7, -0.4), Point(2.2, 0.9)
    tol = 1e-7
    r = green_eval(p, q, tol, CFG)
    M = r.terms_used
    nxt = float(phi_m(M + 1, q.y, p.y, CFG))
    assert r.tail_bound == pytest.approx(nxt / (4 * np.pi * M**2), rel=1e-14)
    assert r.tail_bound <= tol
    prev = float(phi_m(M, q.y, p.y, CFG)) / (4 * np.pi * (M - 1) ** 2)
    assert prev > tol


@given(interior, ordinate, interior, ordinate, st.floats(1e-9, 1e-5))
def test_refinement_stays_within_tail_bound(rho, w, x, y, tol):
    p, q = Point(rho, w), Point(x, y)
    a = green_eval(p, q, tol, CFG)
    b = green_eval(p, q, tol / 100, CFG)
    assert abs(a.value - b.value) <= a.tail_bound + 1e-15


@given(interior, ordinate, interior, ordinate, st.sampled_from([0.0, 0.2, 0.4]))
def test_green_symmetric(rho, w, x, y, sg):
    cfg = PlateConfig(1.0, sg)
    # both orders sum the same phi_m(y, w) = phi_m(w, y), so with equal
    # truncations the difference is rounding only
    a = green_eval(Point(rho, w), Point(x, y), 1e-8, cfg)
    b = green_eval(Point(x, y), Point(rho, w), 1e-8, cfg)
    slack = 0.0 if a.terms_used == b.terms_used else a.tail_bound + b.tail_bound
    assert abs(a.value - b.value) <= 1e-10 * abs(a.value) + slack


@given(interior, ordinate, interior, ordinate)
def test_reflection_about_mid_span(rho, w, x, y):
    # sin(m(pi - t)) = +-sin(mt) with the same sign for both factors
    a = green_eval(Point(rho, w), Point(x, y), 1e-10, CFG)
    b = green_eval(Point(np.pi - rho, w), Point(np.pi - x, y), 1e-10, CFG)
    assert abs(a.value - b.value) <= 1e-12 * abs(a.value) + 2e-10


@given(interior, ordinate, interior, ordinate)
def test_mirror_in_y(rho, w, x, y):
    # [DERIVED] phi(-s, -k) = phi(s, k)
    a = green_eval(Point(rho, w), Point(x, y), 1e-10, CFG)
    b = green_eval(Point(rho, -w), Point(x, -y), 1e-10, CFG)
    assert abs(a.value - b.value) <= 1e-12 * abs(a.value) + 2e-10


def test_grid_matches_pointwise():
    p = Point(1.1, 0.25)
    g = green_grid(p, GridSpec(9, 7), 1e-8, CFG)
    assert g.value.shape == (7, 9)
    assert np.all(g.value[:, [0, -1]] == 0)
    for j, y in enumerate(g.y):
        for i, x in enumerate(g.x):
            r = green_eval(p, Point(float(x), float(y)), 1e-8, CFG)
            assert g.value[j, i] == pytest.approx(r.value, rel=1e-13, abs=1e-16)
            assert g.tail_bound[j, i] == pytest.approx(r.tail_bound, rel=1e-13, abs=1e-16)


def test_grid_interior_flag():
    g = GridSpec(5, 3, interior=True)
    assert g.x().size == 5 and g.x()[0] > 0 and g.x()[-1] < np.pi
    with pytest.raises(DomainError):
        GridSpec(1, 4)


def test_lower_bound_inequality():
    # [PAPER] G >= phi_1 / (2 pi) sin(rho) [sin(x) - (pi^2/6 - 1)]
    y = np.linspace(-1, 1, 9)
    for rho in (0.9, np.pi / 2, 2.2):
        for w in y:
            g = green_grid(Point(rho, float(w)), GridSpec(31, 9), 1e-10, CFG)
            phi1 = np.array([float(phi_m(1, yy, w, CFG)) for yy in g.y])[:, None]
            rhs = lower_bound_margin(rho, g.x[None, :], phi1)
            assert np.all(g.value + g.tail_bound >= rhs)


def test_positivity_scan_small():
    s = positivity_scan(CFG, nx=21, ny=9)
    assert s.passed and s.min_value > 0
    assert s.min_margin_over_tail > 1


def test_choose_modes_shapes():
    phi, M, tail = choose_modes([0.0, 0.5], [0.1], 1e-6, CFG)
    assert M.shape == (2, 1) and np.all(tail <= 1e-6)
    assert phi.shape[0] >= M.max() + 1


def test_tail_bounds_formula():
    assert tail_bounds(np.array([2.0]), [10])[0] == pytest.approx(2 / (400 * np.pi))


def test_tolerance_unreachable():
    with pytest.raises(ToleranceUnreachable):
        green_eval(Point(1.0, 0.0), Point(1.0, 0.5), 1e-12, CFG, mode_cap=10)


@pytest.mark.parametrize("tol", [0.0, -1.0, np.nan, np.inf])
def test_bad_tolerance(tol):
    with pytest.raises(DomainError):
        green_eval(Point(1.0, 0.0), Point(1.0, 0.5), tol, CFG)


def test_points_outside_plate():
    with pytest.raises(DomainError):
        green_eval(Point(1.0, 1.5), Point(1.0, 0.5), 1e-8, CFG)
    with pytest.raises(DomainError):
        green_eval(Point(1.0, 0.0), Point(4.0, 0.5), 1e-8, CFG)


def test_near_edge_not_snapped():
    r = green_eval(Point(1.0, 0.0), Point(1e-7, 0.0), 1e-12, CFG)
    assert 0 < r.value < 1e-6
