"""Classical fields of the quantized expansion, energy, and projection.

A field state is a finite set of modes with complex amplitudes a_s at a
common time t.  The physical fields are

    E = i sum_s sqrt(hbar omega_s / 2 eps0) [a_s u_s - a_s* u_s*]
    B =   sum_s sqrt(hbar / 2 eps0 omega_s) [a_s curl u_s + a_s* curl u_s*]

which are exactly real by construction.  Time evolution multiplies each
amplitude by e^{-i omega_s dt}; with that rule the pair (E, B) satisfies
the free-space Maxwell equations, and the classical field energy

    int [ eps0/2 |E|^2 + 1/(2 mu0) |B|^2 ] dV  =  sum_s hbar omega_s |a_s|^2

is time independent.  The zero-point contribution sum_s hbar omega_s / 2
of a truncated mode set is reported separately by zero_point_energy and
is never folded into the classical total (it diverges with the cutoff).

Amplitudes can be recovered from sampled fields: with the inner product
<f, g> = int f* . g dV,

    a_s = 1/2 [ -i sqrt(2 eps0 / hbar omega_s) <u_s, E>
                + sqrt(2 eps0 omega_s / hbar) / k_s^2 <curl u_s, B> ]

The two halves each equal a_s plus opposite-sign leakage from the
conjugate (-m) partner mode, so their mean is exact; the averaging is
what makes the projection safe for states containing +-m pairs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .modefield import CylPoint, curl_u_grid, u_grid
from .spectrum import CavityGeometry, ModeData
from .verify import QuadratureRule, integrate_cavity

_REALITY_TOL = 1e-12


@dataclass(frozen=True)
class FieldState:
    """Mode amplitudes a_s at time t inside one cavity."""

    geom: CavityGeometry
    entries: tuple
    t: float = 0.0

    def __post_init__(self) -> None:
        entries = tuple((md, complex(a)) for md, a in self.entries)
        object.__setattr__(self, "entries", entries)
        if not math.isfinite(self.t):
            raise ValueError(f"time must be finite, got {self.t!r}")
        seen = set()
        for md, a in entries:
            if not isinstance(md, ModeData):
                raise ValueError(f"entries must pair ModeData with amplitudes, got {md!r}")
            if md.geom != self.geom:
                raise ValueError(f"mode {md.index} belongs to a different geometry")
            if not (math.isfinite(a.real) and math.isfinite(a.imag)):
                raise ValueError(f"amplitude for {md.index} must be finite, got {a!r}")
            if md.index in seen:
                raise ValueError(f"duplicate mode {md.index} in state")
            seen.add(md.index)

    @property
    def modes(self) -> tuple:
        return tuple(md for md, _ in self.entries)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([a for _, a in self.entries], dtype=complex)


def evolve(state: FieldState, dt: float) -> FieldState:
    """Advance by dt: a_s -> a_s e^{-i omega_s dt}."""
    if not math.isfinite(dt):
        raise ValueError(f"dt must be finite, got {dt!r}")
    entries = tuple(
        (md, a * cmath.exp(-1j * md.omega * dt)) for md, a in state.entries
    )
    return FieldState(geom=state.geom, entries=entries, t=state.t + dt)


def _derivative_state(state: FieldState) -> FieldState:
    """State whose field values equal the time derivative: a_s -> -i omega_s a_s."""
    entries = tuple((md, -1j * md.omega * a) for md, a in state.entries)
    return FieldState(geom=state.geom, entries=entries, t=state.t)


def _assert_real(parts, scale: float):
    out = []
    for p in parts:
        imag_max = float(np.max(np.abs(p.imag))) if p.size else 0.0
        if imag_max > _REALITY_TOL * max(scale, 1e-300):
            raise AssertionError(f"synthesized field has imaginary residue {imag_max:.3e}")
        out.append(p.real + 0.0)        # plain float64 array, shape preserved
    return out


def electric_field_grid(state: FieldState, r, phi, z):
    """Real (E_r, E_phi, E_z) on broadcastable coordinate arrays."""
    geom = state.geom
    shape = np.broadcast_shapes(np.shape(r), np.shape(phi), np.shape(z))
    acc = [np.zeros(shape, dtype=complex) for _ in range(3)]
    for md, a in state.entries:
        pref = math.sqrt(geom.hbar * md.omega / (2.0 * geom.eps0)) * a
        for comp, u in zip(acc, u_grid(md, r, phi, z)):
            comp += pref * u
    parts = [1j * (c - np.conj(c)) for c in acc]
    scale = max((float(np.max(np.abs(p))) for p in parts), default=0.0)
    return tuple(_assert_real(parts, scale))


def magnetic_field_grid(state: FieldState, r, phi, z):
    """Real (B_r, B_phi, B_z) on broadcastable coordinate arrays."""
    geom = state.geom
    shape = np.broadcast_shapes(np.shape(r), np.shape(phi), np.shape(z))
    acc = [np.zeros(shape, dtype=complex) for _ in range(3)]
    for md, a in state.entries:
        pref = math.sqrt(geom.hbar / (2.0 * geom.eps0 * md.omega)) * a
        for comp, v in zip(acc, curl_u_grid(md, r, phi, z)):
            comp += pref * v
    parts = [c + np.conj(c) for c in acc]
    scale = max((float(np.max(np.abs(p))) for p in parts), default=0.0)
    return tuple(_assert_real(parts, scale))


def electric_field(state: FieldState, p: CylPoint) -> np.ndarray:
    """Real cylindrical E components at one point."""
    comps = electric_field_grid(state, p.r, p.phi, p.z)
    return np.array([np.asarray(c).item() for c in comps])


def magnetic_field(state: FieldState, p: CylPoint) -> np.ndarray:
    """Real cylindrical B components at one point."""
    comps = magnetic_field_grid(state, p.r, p.phi, p.z)
    return np.array([np.asarray(c).item() for c in comps])


def field_samplers(state: FieldState):
    """State-agnostic (E, B) samplers for use with project()."""
    def e_sampler(r, phi, z):
        return electric_field_grid(state, r, phi, z)

    def b_sampler(r, phi, z):
        return magnetic_field_grid(state, r, phi, z)

    return e_sampler, b_sampler


def total_energy(state: FieldState, rule: QuadratureRule) -> float:
    """Classical field energy by quadrature; equals sum hbar omega |a|^2."""
    geom = state.geom
    r, phi, z = rule.grid()
    e = electric_field_grid(state, r, phi, z)
    b = magnetic_field_grid(state, r, phi, z)
    dens = 0.5 * geom.eps0 * sum(c * c for c in e) + 0.5 / geom.mu0 * sum(c * c for c in b)
    return float(integrate_cavity(lambda *_: dens, rule).real)


def mode_sum_energy(state: FieldState) -> float:
    """Closed-form classical energy sum hbar omega_s |a_s|^2."""
    return float(sum(md.geom.hbar * md.omega * abs(a) ** 2 for md, a in state.entries))


def zero_point_energy(state: FieldState) -> float:
    """sum hbar omega / 2 over the truncated mode set (reported separately;
    grows without bound as the cutoff rises)."""
    return float(sum(0.5 * md.geom.hbar * md.omega for md, _ in state.entries))


def project(e_sampler, b_sampler, modes, rule: QuadratureRule) -> np.ndarray:
    """Recover amplitudes of `modes` from sampled E and B fields."""
    modes = tuple(modes)
    r, phi, z = rule.grid()
    shape = (rule.nr, rule.nphi, rule.nz)
    w3 = rule.wr[:, None, None] * rule.wphi[None, :, None] * rule.wz[None, None, :]
    e = [np.broadcast_to(np.asarray(c), shape) * w3 for c in e_sampler(r, phi, z)]
    b = [np.broadcast_to(np.asarray(c), shape) * w3 for c in b_sampler(r, phi, z)]
    out = np.zeros(len(modes), dtype=complex)
    for i, md in enumerate(modes):
        geom = md.geom
        u = u_grid(md, r, phi, z)
        v = curl_u_grid(md, r, phi, z)
        ue = sum(
            complex(np.einsum("ijk,ijk->", np.conj(np.broadcast_to(uc, shape)), ec))
            for uc, ec in zip(u, e)
        )
        vb = sum(
            complex(np.einsum("ijk,ijk->", np.conj(np.broadcast_to(vc, shape)), bc))
            for vc, bc in zip(v, b)
        )
        term_e = -1j * math.sqrt(2.0 * geom.eps0 / (geom.hbar * md.omega)) * ue
        term_b = math.sqrt(2.0 * geom.eps0 * md.omega / geom.hbar) / md.k**2 * vb
        out[i] = 0.5 * (term_e + term_b)
    return out


# ------------------------------------------------- Maxwell residuals (FD)

@dataclass(frozen=True)
class MaxwellResidualReport:
    """Max-norm residuals of the four Maxwell equations at sample points.

    Spatial derivatives are second-order central differences with the
    given step; time derivatives are analytic (a_s -> -i omega_s a_s).
    """

    step: float
    div_e: float
    div_b: float
    faraday: float      # |curl E + dB/dt|
    ampere: float       # |curl B - dE/dt / c^2|
    e_scale: float
    b_scale: float


def _fd_div(field, r, phi, z, hr, hphi, hz):
    rp = field(r + hr, phi, z)[0] * (r + hr)
    rm = field(r - hr, phi, z)[0] * (r - hr)
    pp = field(r, phi + hphi, z)[1]
    pm = field(r, phi - hphi, z)[1]
    zp = field(r, phi, z + hz)[2]
    zm = field(r, phi, z - hz)[2]
    return (rp - rm) / (2.0 * hr * r) + (pp - pm) / (2.0 * hphi * r) + (zp - zm) / (2.0 * hz)


def _fd_curl(field, r, phi, z, hr, hphi, hz):
    frp, fpp_, fzp = field(r + hr, phi, z)
    frm, fpm_, fzm = field(r - hr, phi, z)
    frP, fpP, fzP = field(r, phi + hphi, z)
    frM, fpM, fzM = field(r, phi - hphi, z)
    frZ, fpZ, fzZ = field(r, phi, z + hz)
    frz, fpz, fzz = field(r, phi, z - hz)
    f_r, f_phi, f_z = field(r, phi, z)
    c_r = (fzP - fzM) / (2.0 * hphi * r) - (fpZ - fpz) / (2.0 * hz)
    c_phi = (frZ - frz) / (2.0 * hz) - (fzp - fzm) / (2.0 * hr)
    c_z = ((r + hr) * fpp_ - (r - hr) * fpm_) / (2.0 * hr * r) - (frP - frM) / (2.0 * hphi * r)
    return c_r, c_phi, c_z


def maxwell_residual(state: FieldState, points, step: float) -> MaxwellResidualReport:
    """Check the four Maxwell equations at interior points.

    points is a triple of arrays (r, phi, z); every point must be farther
    than `step` from the walls and from the axis so the stencil stays in
    the domain.
    """
    geom = state.geom
    r, phi, z = (np.asarray(v, dtype=float) for v in points)
    if not (math.isfinite(step) and step > 0.0):
        raise ValueError(f"step must be positive and finite, got {step!r}")
    if np.any(r - step <= 0.0) or np.any(r + step >= geom.a):
        raise ValueError("points must keep r within (step, a - step)")
    if np.any(z - step <= 0.0) or np.any(z + step >= geom.L):
        raise ValueError("points must keep z within (step, L - step)")

    hphi = step / geom.a
    e_field = lambda rr, pp, zz: electric_field_grid(state, rr, pp, zz)
    b_field = lambda rr, pp, zz: magnetic_field_grid(state, rr, pp, zz)
    dstate = _derivative_state(state)
    de_dt = electric_field_grid(dstate, r, phi, z)
    db_dt = magnetic_field_grid(dstate, r, phi, z)

    div_e = _fd_div(e_field, r, phi, z, step, hphi, step)
    div_b = _fd_div(b_field, r, phi, z, step, hphi, step)
    curl_e = _fd_curl(e_field, r, phi, z, step, hphi, step)
    curl_b = _fd_curl(b_field, r, phi, z, step, hphi, step)
    inv_c2 = 1.0 / (geom.c * geom.c)
    faraday = [ce + db for ce, db in zip(curl_e, db_dt)]
    ampere = [cb - inv_c2 * de for cb, de in zip(curl_b, de_dt)]

    vec_max = lambda comps: float(np.max(np.sqrt(sum(c * c for c in comps)))) if r.size else 0.0
    e_here = e_field(r, phi, z)
    b_here = b_field(r, phi, z)
    return MaxwellResidualReport(
        step=step,
        div_e=float(np.max(np.abs(div_e))) if r.size else 0.0,
        div_b=float(np.max(np.abs(div_b))) if r.size else 0.0,
        faraday=vec_max(faraday),
        ampere=vec_max(ampere),
        e_scale=vec_max([e_here[0], e_here[1], e_here[2]]),
        b_scale=vec_max([b_here[0], b_here[1], b_here[2]]),
    )
