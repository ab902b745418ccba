"""Two-point boundary value solves and the velocity/pressure recovery."""

import numpy as np
import pytest

import compatflow as cf
from compatflow.poisson import BVPSpec, solve_bvp, solve_dudt, solve_pressure

PARAMS = cf.FlowParams(1.0, 1.0, 80.0)
G = cf.cheb_grid(64)


def test_bvp_spec_rejects_negative_helmholtz_coefficient():
    with pytest.raises(cf.ConfigurationError):
        BVPSpec(helmholtz_k2=-1.0, rhs=cf.YProfile.zero(G),
                bc_kind="dirichlet", bc_values=(0.0, 0.0))


def test_bvp_spec_rejects_unknown_bc_kind():
    with pytest.raises(cf.ConfigurationError):
        BVPSpec(helmholtz_k2=1.0, rhs=cf.YProfile.zero(G),
                bc_kind="robin", bc_values=(0.0, 0.0))


def test_dirichlet_poisson_parabola():
    # u'' = 2 with u(+-1) = 0 has the exact solution y^2 - 1
    spec = BVPSpec(helmholtz_k2=0.0, rhs=cf.YProfile.from_poly(G, [2.0]),
                   bc_kind="dirichlet", bc_values=(0.0, 0.0))
    u = solve_bvp(spec, G)
    assert np.max(np.abs(u.values - (G.y**2 - 1))) < 1e-12


def test_dirichlet_boundary_value_ordering():
    # u'' - 3u = -3y with u(+1) = 1, u(-1) = -1 gives u = y; a swapped
    # wall assignment would flip the sign
    spec = BVPSpec(helmholtz_k2=3.0, rhs=cf.YProfile.from_poly(G, [0.0, -3.0]),
                   bc_kind="dirichlet", bc_values=(1.0, -1.0))
    u = solve_bvp(spec, G)
    assert np.max(np.abs(u.values - G.y)) < 1e-12


def test_dirichlet_manufactured_nonpolynomial():
    # u = (1 - y^2) e^y, u'' - 4u = e^y (3y^2 - 4y - 5)
    rhs = cf.YProfile.from_values(G, np.exp(G.y) * (3 * G.y**2 - 4 * G.y - 5))
    spec = BVPSpec(helmholtz_k2=4.0, rhs=rhs, bc_kind="dirichlet", bc_values=(0.0, 0.0))
    u = solve_bvp(spec, G)
    exact = (1 - G.y**2) * np.exp(G.y)
    assert np.max(np.abs(u.values - exact)) < 1e-10


def test_dirichlet_residual_property():
    rng = np.random.RandomState(21)
    for _ in range(10):
        k2 = float(rng.uniform(0, 9))
        rhs = cf.YProfile.from_poly(G, rng.uniform(-1, 1, 7))
        spec = BVPSpec(helmholtz_k2=k2, rhs=rhs, bc_kind="dirichlet", bc_values=(0.0, 0.0))
        u = solve_bvp(spec, G)
        res = G.D2 @ u.values - k2 * u.values - rhs.values
        scale = max(1.0, np.max(np.abs(rhs.values)))
        assert np.max(np.abs(res[1:-1])) < 1e-9 * scale
        assert abs(u.top) < 1e-12 and abs(u.bottom) < 1e-12


def test_neumann_cubic_with_mean_zero_gauge():
    # u'' = 2y, u'(+-1) = 0: u = y^3/3 - y up to a constant, fixed by the
    # zero-mean gauge (and this particular solution already integrates to 0)
    spec = BVPSpec(helmholtz_k2=0.0, rhs=cf.YProfile.from_poly(G, [0.0, 2.0]),
                   bc_kind="neumann", bc_values=(0.0, 0.0))
    u = solve_bvp(spec, G)
    assert np.max(np.abs(u.values - (G.y**3 / 3 - G.y))) < 1e-10
    assert abs(G.weights @ u.values) < 1e-12


def test_neumann_flux_ordering():
    # u'' = 1 with u'(+1) = 2, u'(-1) = 0 gives u = y^2/2 + y - 1/6 after
    # the gauge; swapping the walls would negate the linear part
    spec = BVPSpec(helmholtz_k2=0.0, rhs=cf.YProfile.from_poly(G, [1.0]),
                   bc_kind="neumann", bc_values=(2.0, 0.0))
    u = solve_bvp(spec, G)
    assert np.max(np.abs(u.values - (G.y**2 / 2 + G.y - 1 / 6))) < 1e-10


def test_neumann_helmholtz_hyperbolic():
    # u'' - 4u = 0 with u'(+-1) = +-1: u = cosh(2y) / (2 sinh 2)
    spec = BVPSpec(helmholtz_k2=4.0, rhs=cf.YProfile.zero(G),
                   bc_kind="neumann", bc_values=(1.0, -1.0))
    u = solve_bvp(spec, G)
    exact = np.cosh(2 * G.y) / (2 * np.sinh(2.0))
    assert np.max(np.abs(u.values - exact)) < 1e-11


def test_neumann_solvability_violation():
    spec = BVPSpec(helmholtz_k2=0.0, rhs=cf.YProfile.from_poly(G, [1.0]),
                   bc_kind="neumann", bc_values=(0.0, 0.0))
    with pytest.raises(cf.NumericalError, match="solvab"):
        solve_bvp(spec, G)


def test_dudt_matches_reference_profiles():
    f = cf.example_forcing(PARAMS, G)
    got = solve_dudt(f)
    want = cf.example_dudt(PARAMS, G)
    assert (got - want).max_abs() < 1e-11 * want.max_abs()


def test_dudt_no_slip():
    got = solve_dudt(cf.example_forcing(PARAMS, G))
    for comp in got.components:
        for _, (a, b) in comp.items():
            assert abs(a.top) < 1e-12 and abs(a.bottom) < 1e-12
            assert abs(b.top) < 1e-12 and abs(b.bottom) < 1e-12


def test_dudt_mesh_convergence():
    g48 = cf.cheb_grid(48)
    d64 = solve_dudt(cf.example_forcing(PARAMS, G))
    d48 = solve_dudt(cf.example_forcing(PARAMS, g48))
    a64 = d64.u1.get(1)[1]
    a48 = d48.u1.get(1)[1]
    assert np.max(np.abs(a48(G.y) - a64.values)) < 1e-10


def test_pressure_gauge_and_flux():
    field = cf.example_field(PARAMS, G)
    p = solve_pressure(field)
    lap2 = field.u2.laplacian()
    scale = max(1.0, p.max_abs())
    for j, (a, b) in p.items():
        if j == 0:
            assert abs(G.weights @ a.values) < 1e-10 * scale
        la, lb = lap2.get(j)
        for prof, flux in ((a, la), (b, lb)):
            dp = G.D @ prof.values
            assert abs(dp[0] - flux.top / PARAMS.reynolds) < 1e-8 * scale
            assert abs(dp[-1] - flux.bottom / PARAMS.reynolds) < 1e-8 * scale


def test_pressure_mean_mode_has_no_sine():
    field = cf.example_field(PARAMS, G)
    p = solve_pressure(field)
    if 0 in p.harmonics():
        assert p.get(0)[1].is_zero()
