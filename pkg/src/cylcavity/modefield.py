"""Scalar potentials and vector mode functions on the cavity interior.

The scalar potential of mode s = (m, mu, n, sigma) is

    psi_TM = c_norm J_m(g r) e^{i m phi} cos(h z)   (cos -> 1/sqrt(2) for n = 0)
    psi_TE = c_norm J_m(g r) e^{i m phi} sin(h z)

and the vector mode functions are built from it:

    u_TM = k^2 e_z psi + grad(d_z psi)          curl u_TM = k^2 curl(e_z psi)
    u_TE = i omega curl(e_z psi)                curl u_TE = i omega (k^2 e_z psi + grad(d_z psi))

All mode functions are time independent; the harmonic time dependence
lives entirely in the expansion amplitudes (see synthesis).

Components are evaluated from closed forms.  The only removable
singularity is (m/r) J_m(g r) on the axis, which tends to g/2 for
|m| = 1 (both signs, since J_{-1} = -J_1) and to 0 otherwise; radii
below 1e-8 a are evaluated with that limit.

Grid evaluation: the *_grid functions accept numpy arrays for r, phi, z
and broadcast them, so a tensor grid can be passed as r[:,None,None],
phi[None,:,None], z[None,None,:] and the Bessel factors are evaluated
once per distinct radius.  Points are validated against the closed
domain 0 <= r <= a, 0 <= z <= L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j, bessel_j_prime
from .spectrum import TE, TM, ModeData

_AXIS_FRACTION = 1e-8       # r/a below which the on-axis limits are used
_DOMAIN_SLACK = 1e-12       # relative tolerance for boundary membership
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class CylPoint:
    """Cylindrical point (r, phi, z); phi is stored reduced to [0, 2 pi)."""

    r: float
    phi: float
    z: float

    def __post_init__(self) -> None:
        for name in ("r", "phi", "z"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise ValueError(f"CylPoint.{name} must be finite, got {v!r}")
        if self.r < 0.0:
            raise ValueError(f"CylPoint.r must be >= 0, got {self.r}")
        object.__setattr__(self, "phi", self.phi % (2.0 * math.pi))


@dataclass(frozen=True)
class CylVector:
    """Complex vector in the local cylindrical basis (e_r, e_phi, e_z)."""

    v_r: complex
    v_phi: complex
    v_z: complex

    def __post_init__(self) -> None:
        for name in ("v_r", "v_phi", "v_z"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"CylVector.{name} must be finite, got {v!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.v_r, self.v_phi, self.v_z], dtype=complex)


def _check_domain(mode: ModeData, r, z) -> None:
    geom = mode.geom
    ra = np.asarray(r, dtype=float)
    za = np.asarray(z, dtype=float)
    if not (np.all(np.isfinite(ra)) and np.all(np.isfinite(za))):
        raise ValueError("coordinates must be finite")
    if np.any(ra < -_DOMAIN_SLACK * geom.a) or np.any(ra > geom.a * (1.0 + _DOMAIN_SLACK)):
        raise ValueError(f"radius outside closed cavity domain [0, {geom.a}]")
    if np.any(za < -_DOMAIN_SLACK * geom.L) or np.any(za > geom.L * (1.0 + _DOMAIN_SLACK)):
        raise ValueError(f"z outside closed cavity domain [0, {geom.L}]")


def _axial_factor(mode: ModeData, z):
    """cos(h z) for TM (1/sqrt(2) when n = 0), sin(h z) for TE."""
    idx = mode.index
    if idx.sigma == TM:
        if idx.n == 0:
            return np.full_like(np.asarray(z, dtype=float), _INV_SQRT2)
        return np.cos(mode.h * np.asarray(z, dtype=float))
    return np.sin(mode.h * np.asarray(z, dtype=float))


def _radial_parts(mode: ModeData, r):
    """J_m(g r), J_m'(g r), and (m/r) J_m(g r) with its axis limit."""
    m = mode.index.m
    g = mode.g
    ra = np.asarray(r, dtype=float)
    jm = bessel_j(m, g * ra)
    jp = bessel_j_prime(m, g * ra)
    near_axis = ra < _AXIS_FRACTION * mode.geom.a
    if np.any(near_axis):
        limit = 0.5 * g if abs(m) == 1 else 0.0
        safe_r = np.where(near_axis, 1.0, ra)
        m_over_r_jm = np.where(near_axis, limit, m * jm / safe_r)
    else:
        m_over_r_jm = m * jm / ra if m != 0 else np.zeros_like(jm)
    return jm, jp, m_over_r_jm


def psi_grid(mode: ModeData, r, phi, z) -> np.ndarray:
    """Scalar potential on broadcastable coordinate arrays."""
    _check_domain(mode, r, z)
    jm, _, _ = _radial_parts(mode, r)
    expi = np.exp(1j * mode.index.m * np.asarray(phi, dtype=float))
    return mode.c_norm * jm * expi * _axial_factor(mode, z)


def u_grid(mode: ModeData, r, phi, z):
    """Vector mode function components (u_r, u_phi, u_z), broadcast."""
    _check_domain(mode, r, z)
    idx = mode.index
    c = mode.c_norm
    g, h, k = mode.g, mode.h, mode.k
    jm, jp, mjr = _radial_parts(mode, r)
    expi = np.exp(1j * idx.m * np.asarray(phi, dtype=float))
    za = np.asarray(z, dtype=float)
    if idx.sigma == TM:
        ax = _axial_factor(mode, z)                 # cos(hz) or 1/sqrt2
        sz = np.sin(h * za) if idx.n > 0 else np.zeros_like(za)
        u_r = -h * g * c * jp * expi * sz
        u_phi = -1j * h * c * mjr * expi * sz
        u_z = g * g * c * jm * expi * ax
    else:
        omega = mode.omega
        sz = np.sin(h * za)
        u_r = -omega * c * mjr * expi * sz
        u_phi = -1j * omega * g * c * jp * expi * sz
        u_z = np.zeros(np.broadcast_shapes(np.shape(jm), np.shape(expi), np.shape(sz)),
                       dtype=complex)
    return u_r, u_phi, u_z


def curl_u_grid(mode: ModeData, r, phi, z):
    """Curl of the vector mode function, components broadcast."""
    _check_domain(mode, r, z)
    idx = mode.index
    c = mode.c_norm
    g, h, k = mode.g, mode.h, mode.k
    jm, jp, mjr = _radial_parts(mode, r)
    expi = np.exp(1j * idx.m * np.asarray(phi, dtype=float))
    za = np.asarray(z, dtype=float)
    if idx.sigma == TM:
        ax = _axial_factor(mode, z)
        v_r = 1j * k * k * c * mjr * expi * ax
        v_phi = -(k * k) * g * c * jp * expi * ax
        v_z = np.zeros(np.broadcast_shapes(np.shape(jm), np.shape(expi), np.shape(ax)),
                       dtype=complex)
    else:
        omega = mode.omega
        cz = np.cos(h * za)
        sz = np.sin(h * za)
        v_r = 1j * omega * h * g * c * jp * expi * cz
        v_phi = -omega * h * c * mjr * expi * cz
        v_z = 1j * omega * g * g * c * jm * expi * sz
    return v_r, v_phi, v_z


def psi(mode: ModeData, p: CylPoint) -> complex:
    """Scalar potential at one point."""
    return complex(psi_grid(mode, p.r, p.phi, p.z))


def u_mode(mode: ModeData, p: CylPoint) -> CylVector:
    """Vector mode function at one point."""
    u_r, u_phi, u_z = u_grid(mode, p.r, p.phi, p.z)
    return CylVector(complex(u_r), complex(u_phi), complex(u_z))


def curl_u(mode: ModeData, p: CylPoint) -> CylVector:
    """Curl of the vector mode function at one point."""
    v_r, v_phi, v_z = curl_u_grid(mode, p.r, p.phi, p.z)
    return CylVector(complex(v_r), complex(v_phi), complex(v_z))


def to_cartesian(p: CylPoint, v: CylVector) -> np.ndarray:
    """Rotate a local cylindrical vector at p into Cartesian components."""
    cph = math.cos(p.phi)
    sph = math.sin(p.phi)
    return np.array(
        [
            v.v_r * cph - v.v_phi * sph,
            v.v_r * sph + v.v_phi * cph,
            v.v_z,
        ],
        dtype=complex,
    )
