"""Vector mode functions against finite-difference oracles of the scalar
potential, plus symmetry, axis, boundary and domain behavior."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylcavity import (
    TE,
    TM,
    CylPoint,
    CylVector,
    ModeIndex,
    curl_u_grid,
    mode_data,
    psi_grid,
    to_cartesian,
    u_grid,
    u_mode,
)
from oracles import fd_curl_cyl, fd_div_cyl, fd_grad_cyl

MODES = [
    (0, 1, 0, TM),
    (0, 1, 2, TM),
    (1, 1, 1, TM),
    (-1, 1, 1, TM),
    (2, 2, 1, TM),
    (0, 1, 1, TE),
    (1, 1, 1, TE),
    (-3, 1, 2, TE),
]


def _interior_points(geom, rng, count=24):
    return (rng.uniform(0.1 * geom.a, 0.9 * geom.a, size=count),
            rng.uniform(0.0, 2.0 * math.pi, size=count),
            rng.uniform(0.1 * geom.L, 0.9 * geom.L, size=count))


def _fd_u(md, r, phi, z, h, hphi):
    # u = k^2 e_z psi + grad(d_z psi), with d_z psi itself by differences
    def dz_psi(rr, pp, zz):
        return (psi_grid(md, rr, pp, zz + h) - psi_grid(md, rr, pp, zz - h)) / (2.0 * h)

    g_r, g_phi, g_z = fd_grad_cyl(dz_psi, r, phi, z, h, hphi)
    u_z = md.k**2 * psi_grid(md, r, phi, z) + g_z
    return g_r, g_phi, u_z


@pytest.mark.parametrize("m,mu,n,sigma", MODES)
def test_u_matches_fd_of_psi(unit_geom, rng, m, mu, n, sigma):
    md = mode_data(unit_geom, ModeIndex(m=m, mu=mu, n=n, sigma=sigma))
    r, phi, z = _interior_points(unit_geom, rng)
    # nested second differences amplify rounding, so h cannot be tiny
    h = 2e-4
    hphi = h / unit_geom.a
    if sigma == TM:
        expect = _fd_u(md, r, phi, z, h, hphi)
        got = u_grid(md, r, phi, z)
    else:
        # TE: u = i omega curl(e_z psi)
        #   = i omega ((1/r) d_phi psi, -d_r psi, 0)
        d_r, d_phi, _ = fd_grad_cyl(lambda *a: psi_grid(md, *a), r, phi, z, h, hphi)
        expect = (1j * md.omega * d_phi, -1j * md.omega * d_r, np.zeros_like(d_r))
        got = u_grid(md, r, phi, z)
    for e, g in zip(expect, got):
        assert np.max(np.abs(e - g)) < 5e-6


@pytest.mark.parametrize("m,mu,n,sigma", MODES)
def test_curl_u_matches_fd_curl(unit_geom, rng, m, mu, n, sigma):
    md = mode_data(unit_geom, ModeIndex(m=m, mu=mu, n=n, sigma=sigma))
    r, phi, z = _interior_points(unit_geom, rng)
    h = 1e-4
    fd = fd_curl_cyl(lambda *a: u_grid(md, *a), r, phi, z, h, h / unit_geom.a)
    got = curl_u_grid(md, r, phi, z)
    for e, g in zip(fd, got):
        assert np.max(np.abs(e - g)) < 5e-6


@pytest.mark.parametrize("m,mu,n,sigma", MODES)
def test_u_is_divergence_free(unit_geom, rng, m, mu, n, sigma):
    md = mode_data(unit_geom, ModeIndex(m=m, mu=mu, n=n, sigma=sigma))
    r, phi, z = _interior_points(unit_geom, rng)
    div = fd_div_cyl(lambda *a: u_grid(md, *a), r, phi, z, 1e-4, 1e-4 / unit_geom.a)
    assert np.max(np.abs(div)) < 5e-6


def test_fd_convergence_is_second_order(unit_geom, rng):
    md = mode_data(unit_geom, ModeIndex(m=2, mu=1, n=1, sigma=TM))
    r, phi, z = _interior_points(unit_geom, rng, count=12)
    errs = []
    for h in (2e-4, 1e-4):
        fd = _fd_u(md, r, phi, z, h, h / unit_geom.a)
        got = u_grid(md, r, phi, z)
        errs.append(max(float(np.max(np.abs(e - g))) for e, g in zip(fd, got)))
    order = math.log2(errs[0] / errs[1])
    assert order > 1.9


def test_helmholtz_identity(unit_geom, rng):
    # curl curl u = k^2 u for divergence-free eigenfields
    for m, mu, n, sigma in ((1, 1, 1, TM), (2, 1, 1, TE)):
        md = mode_data(unit_geom, ModeIndex(m=m, mu=mu, n=n, sigma=sigma))
        r, phi, z = _interior_points(unit_geom, rng, count=6)
        h = 5e-4
        hphi = h / unit_geom.a
        cc = fd_curl_cyl(
            lambda *a: fd_curl_cyl(lambda *b: u_grid(md, *b), *a, h, hphi),
            r, phi, z, h, hphi)
        u = u_grid(md, r, phi, z)
        scale = max(float(np.max(np.abs(c))) for c in u) * md.k**2
        err = max(float(np.max(np.abs(c - md.k**2 * uu))) for c, uu in zip(cc, u))
        assert err < 1e-4 * scale


@pytest.mark.parametrize("m,mu,n,sigma", MODES)
def test_conjugation_symmetry(unit_geom, rng, m, mu, n, sigma):
    # flipped azimuthal index: u_{-m} = +-(-1)^m conj(u_m), plus sign for
    # the axial-electric family, minus for the axial-magnetic one
    plus = mode_data(unit_geom, ModeIndex(m=m, mu=mu, n=n, sigma=sigma))
    minus = mode_data(unit_geom, ModeIndex(m=-m, mu=mu, n=n, sigma=sigma))
    r, phi, z = _interior_points(unit_geom, rng, count=16)
    sign = (-1.0) ** m * (1.0 if sigma == TM else -1.0)
    for up, um in zip(u_grid(plus, r, phi, z), u_grid(minus, r, phi, z)):
        assert np.max(np.abs(um - sign * np.conj(up))) < 1e-14


def test_axis_values_match_limit(unit_geom):
    phi = np.array([0.4])
    z = np.array([0.7])
    for m, sigma, n in ((1, TM, 1), (-1, TM, 1), (1, TE, 1), (0, TM, 0), (2, TE, 1)):
        md = mode_data(unit_geom, ModeIndex(m=m, mu=1, n=n, sigma=sigma))
        at0 = u_grid(md, np.array([0.0]), phi, z)
        near = u_grid(md, np.array([1e-7 * unit_geom.a]), phi, z)
        for c0, cn in zip(at0, near):
            assert np.all(np.isfinite(c0))
            assert np.max(np.abs(c0 - cn)) < 1e-6 * (1.0 + np.max(np.abs(c0)))


def test_axis_transverse_components_vanish_unless_unit_m(unit_geom):
    z = np.array([0.3])
    for m in (0, 2, 3):
        md = mode_data(unit_geom, ModeIndex(m=m, mu=1, n=1, sigma=TE))
        u_r, u_phi, _ = u_grid(md, np.array([0.0]), np.array([1.0]), z)
        if m == 0:
            assert complex(u_r[0]) == 0j
        else:
            assert complex(u_r[0]) == 0j and complex(u_phi[0]) == 0j
    md = mode_data(unit_geom, ModeIndex(m=1, mu=1, n=1, sigma=TE))
    u_r, u_phi, _ = u_grid(md, np.array([0.0]), np.array([1.0]), z)
    assert abs(complex(u_r[0])) > 0.0


def test_potential_boundary_values(unit_geom):
    phi = np.linspace(0.0, 2.0 * math.pi, 7)
    z = np.linspace(0.0, unit_geom.L, 5)
    tm = mode_data(unit_geom, ModeIndex(m=1, mu=2, n=1, sigma=TM))
    wall = psi_grid(tm, np.array([unit_geom.a]), phi[:, None], z[None, :])
    assert np.max(np.abs(wall)) < 1e-13
    te = mode_data(unit_geom, ModeIndex(m=1, mu=2, n=1, sigma=TE))
    h = 1e-6
    # one-sided second-order difference; r = a + h is outside the domain
    a = unit_geom.a
    p0 = psi_grid(te, np.array([a]), phi, np.array([0.5]))
    p1 = psi_grid(te, np.array([a - h]), phi, np.array([0.5]))
    p2 = psi_grid(te, np.array([a - 2.0 * h]), phi, np.array([0.5]))
    dpsi = (3.0 * p0 - 4.0 * p1 + p2) / (2.0 * h)
    assert np.max(np.abs(dpsi)) < 1e-9


def test_n0_mode_has_no_axial_dependence(unit_geom):
    md = mode_data(unit_geom, ModeIndex(m=1, mu=1, n=0, sigma=TM))
    z = np.linspace(0.0, unit_geom.L, 9)
    vals = psi_grid(md, np.array([0.4]), np.array([0.2]), z)
    assert np.max(np.abs(vals - vals[0])) < 1e-15


def test_domain_rejection(unit_geom):
    md = mode_data(unit_geom, ModeIndex(m=0, mu=1, n=0, sigma=TM))
    for r, z in ((unit_geom.a * 1.001, 0.5), (0.5, -0.01), (0.5, unit_geom.L + 0.01)):
        with pytest.raises(ValueError):
            u_grid(md, np.array([r]), np.array([0.0]), np.array([z]))
        with pytest.raises(ValueError):
            u_mode(md, CylPoint(r=r, phi=0.0, z=z))


def test_cyl_point_validation():
    with pytest.raises(ValueError):
        CylPoint(r=-0.1, phi=0.0, z=0.0)
    p = CylPoint(r=0.2, phi=2.0 * math.pi + 0.3, z=0.1)
    assert p.phi == pytest.approx(0.3, abs=1e-12)


def test_point_api_matches_grid(unit_geom):
    md = mode_data(unit_geom, ModeIndex(m=2, mu=1, n=1, sigma=TE))
    p = CylPoint(r=0.31, phi=1.2, z=0.9)
    vec = u_mode(md, p)
    grid = u_grid(md, np.array([p.r]), np.array([p.phi]), np.array([p.z]))
    assert vec.v_r == complex(grid[0][0])
    assert vec.v_phi == complex(grid[1][0])
    assert vec.v_z == complex(grid[2][0])


@settings(max_examples=80, deadline=None)
@given(phi=st.floats(min_value=0.0, max_value=2.0 * math.pi),
       vr=st.floats(-5, 5), vp=st.floats(-5, 5), vz=st.floats(-5, 5))
def test_to_cartesian_preserves_norm(phi, vr, vp, vz):
    p = CylPoint(r=0.5, phi=phi, z=0.1)
    v = CylVector(v_r=vr + 0.0j, v_phi=vp + 0.0j, v_z=vz + 0.0j)
    cart = to_cartesian(p, v)
    assert np.linalg.norm(cart) == pytest.approx(math.sqrt(vr**2 + vp**2 + vz**2),
                                                 abs=1e-12)


def test_to_cartesian_axes():
    p = CylPoint(r=1.0, phi=0.0, z=0.0)
    ex = to_cartesian(p, CylVector(v_r=1.0 + 0j, v_phi=0j, v_z=0j))
    assert np.allclose(ex, [1.0, 0.0, 0.0])
    ey = to_cartesian(p, CylVector(v_r=0j, v_phi=1.0 + 0j, v_z=0j))
    assert np.allclose(ey, [0.0, 1.0, 0.0])
    q = CylPoint(r=1.0, phi=math.pi / 2.0, z=0.0)
    assert np.allclose(to_cartesian(q, CylVector(v_r=1.0 + 0j, v_phi=0j, v_z=0j)),
                       [0.0, 1.0, 0.0], atol=1e-15)
