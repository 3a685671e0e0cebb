"""Numerical certification of mode-function identities by quadrature.

The cavity integral int_0^a r dr int_0^{2pi} dphi int_0^L dz is done with
a tensor-product rule: Gauss-Legendre in r (the Jacobian r is folded into
the radial weights) and in z, and the uniform rectangle rule in phi,
which is exact for azimuthal Fourier modes e^{i q phi} with |q| < nphi.
Weights are positive and sum to the cavity volume pi a^2 L.

Checks provided:

* scalar products of the potentials against the closed form
  (1/2) |c_norm|^2 V alpha delta_{ss'}  (one polarization at a time),
* the full vector Gram matrix <u_s, u_s'> against the identity,
* the curl identity <curl u_s, curl u_s'> = k'^2 <u_s, u_s'>,
* conductor boundary conditions on the walls (vanishing tangential u,
  vanishing normal component of curl u).

All reports are deterministic: fixed node sets and a fixed summation
order, so identical inputs give identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .modefield import curl_u_grid, psi_grid, u_grid
from .spectrum import CavityGeometry, ModeData

DEFAULT_NR = 64
DEFAULT_NZ = 64


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Tensor-product cavity quadrature bound to one geometry.

    r/z nodes and weights are Gauss-Legendre (radial weights include the
    cylindrical Jacobian r); phi nodes are uniform with equal weights.
    """

    geom: CavityGeometry
    nr: int
    nphi: int
    nz: int
    r: np.ndarray = field(repr=False)
    wr: np.ndarray = field(repr=False)
    phi: np.ndarray = field(repr=False)
    wphi: np.ndarray = field(repr=False)
    z: np.ndarray = field(repr=False)
    wz: np.ndarray = field(repr=False)

    @property
    def weight_sum(self) -> float:
        return float(np.sum(self.wr) * np.sum(self.wphi) * np.sum(self.wz))

    def grid(self):
        """Coordinate arrays shaped for broadcasting to (nr, nphi, nz)."""
        return (
            self.r[:, None, None],
            self.phi[None, :, None],
            self.z[None, None, :],
        )


def quadrature_rule(
    geom: CavityGeometry,
    nr: int = DEFAULT_NR,
    nphi: int = 8,
    nz: int = DEFAULT_NZ,
) -> QuadratureRule:
    """Build the tensor rule; nphi must exceed every azimuthal difference used."""
    for name, v in (("nr", nr), ("nphi", nphi), ("nz", nz)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    tr, twr = np.polynomial.legendre.leggauss(nr)
    r = 0.5 * geom.a * (tr + 1.0)
    wr = 0.5 * geom.a * twr * r          # Jacobian folded in
    tz, twz = np.polynomial.legendre.leggauss(nz)
    z = 0.5 * geom.L * (tz + 1.0)
    wz = 0.5 * geom.L * twz
    phi = 2.0 * math.pi * np.arange(nphi) / nphi
    wphi = np.full(nphi, 2.0 * math.pi / nphi)
    return QuadratureRule(
        geom=geom, nr=nr, nphi=nphi, nz=nz,
        r=r, wr=wr, phi=phi, wphi=wphi, z=z, wz=wz,
    )


def default_nphi(modes) -> int:
    """4 max|m| + 8: resolves every Fourier difference in pair products."""
    mmax = max((abs(md.index.m) for md in modes), default=0)
    return 4 * mmax + 8


def default_rule(geom: CavityGeometry, modes, nr: int = DEFAULT_NR, nz: int = DEFAULT_NZ) -> QuadratureRule:
    return quadrature_rule(geom, nr=nr, nphi=default_nphi(modes), nz=nz)


def integrate_cavity(f, rule: QuadratureRule) -> complex:
    """Integrate f(r, phi, z) over the cavity.

    f receives broadcastable coordinate arrays (see QuadratureRule.grid)
    and must return values broadcastable to (nr, nphi, nz).
    """
    r, phi, z = rule.grid()
    vals = np.asarray(f(r, phi, z))
    shape = (rule.nr, rule.nphi, rule.nz)
    vals = np.broadcast_to(vals, shape)
    if not np.all(np.isfinite(vals)):
        i, j, k = (int(v[0]) for v in np.nonzero(~np.isfinite(vals)))
        raise ValueError(
            "integrand not finite at node "
            f"r={rule.r[i]!r}, phi={rule.phi[j]!r}, z={rule.z[k]!r}"
        )
    return complex(np.einsum("i,j,k,ijk->", rule.wr, rule.wphi, rule.wz, vals))


def _weighted(rule: QuadratureRule, comps) -> list[np.ndarray]:
    """Broadcast field components to the full grid and fold the weights in."""
    shape = (rule.nr, rule.nphi, rule.nz)
    w3 = rule.wr[:, None, None] * rule.wphi[None, :, None] * rule.wz[None, None, :]
    return [np.broadcast_to(c, shape) * w3 for c in comps]


def _pair_sum(weighted_i, plain_j) -> complex:
    total = 0.0 + 0.0j
    for wc, pc in zip(weighted_i, plain_j):
        total += complex(np.einsum("ijk,ijk->", np.conj(pc), wc))
    return total


@dataclass(frozen=True, eq=False)
class GramReport:
    """Inner-product matrix against its expected identity form.

    For the scalar check the matrix is normalized by the closed-form
    diagonal (1/2)|c_norm|^2 V alpha, so the target is the identity in
    both cases.
    """

    modes: tuple
    matrix: np.ndarray

    @property
    def max_offdiag(self) -> float:
        if len(self.modes) < 2:
            return 0.0
        off = self.matrix - np.diag(np.diag(self.matrix))
        return float(np.max(np.abs(off)))

    @property
    def max_diag_deviation(self) -> float:
        if not self.modes:
            return 0.0
        return float(np.max(np.abs(np.diag(self.matrix) - 1.0)))

    @property
    def hermiticity_error(self) -> float:
        if not self.modes:
            return 0.0
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    @property
    def max_deviation(self) -> float:
        return max(self.max_offdiag, self.max_diag_deviation)


def check_scalar_orthonormality(modes, rule: QuadratureRule) -> GramReport:
    """Gram matrix of the scalar potentials, one polarization family."""
    modes = tuple(modes)
    sigmas = {md.index.sigma for md in modes}
    if len(sigmas) > 1:
        raise ValueError("scalar orthogonality holds within one polarization; "
                         "pass modes of a single sigma")
    r, phi, z = rule.grid()
    fields = [psi_grid(md, r, phi, z) for md in modes]
    shape = (rule.nr, rule.nphi, rule.nz)
    w3 = rule.wr[:, None, None] * rule.wphi[None, :, None] * rule.wz[None, None, :]
    weighted = [np.broadcast_to(f, shape) * w3 for f in fields]
    n = len(modes)
    gram = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            gram[i, j] = complex(np.einsum("ijk,ijk->", np.conj(np.broadcast_to(fields[i], shape)), weighted[j]))
    expected = np.array(
        [0.5 * md.c_norm**2 * md.geom.volume * md.alpha for md in modes]
    )
    if n:
        gram = gram / np.sqrt(np.outer(expected, expected))
    return GramReport(modes=modes, matrix=gram)


def _vector_gram(modes, rule: QuadratureRule, evaluator) -> np.ndarray:
    r, phi, z = rule.grid()
    fields = [evaluator(md, r, phi, z) for md in modes]
    weighted = [_weighted(rule, comps) for comps in fields]
    shape = (rule.nr, rule.nphi, rule.nz)
    plain = [[np.broadcast_to(c, shape) for c in comps] for comps in fields]
    n = len(modes)
    gram = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            gram[i, j] = _pair_sum(weighted[j], plain[i])
    return gram


def check_vector_orthonormality(modes, rule: QuadratureRule) -> GramReport:
    """Full Gram matrix <u_i, u_j>, all polarizations and signs of m."""
    modes = tuple(modes)
    return GramReport(modes=modes, matrix=_vector_gram(modes, rule, u_grid))


@dataclass(frozen=True, eq=False)
class CurlIdentityReport:
    """<curl u_i, curl u_j> compared with k_j^2 <u_i, u_j>, entrywise."""

    modes: tuple
    lhs: np.ndarray
    rhs: np.ndarray
    rel_tol: float
    abs_tol: float

    @property
    def mismatch(self) -> np.ndarray:
        return np.abs(self.lhs - self.rhs)

    @property
    def scale(self) -> np.ndarray:
        return np.maximum(np.abs(self.lhs), np.abs(self.rhs))

    @property
    def max_relative_mismatch(self) -> float:
        """Worst mismatch/scale over entries with scale above abs_tol."""
        if not self.modes:
            return 0.0
        sig = self.scale > self.abs_tol
        if not np.any(sig):
            return 0.0
        return float(np.max(self.mismatch[sig] / self.scale[sig]))

    @property
    def max_absolute_mismatch(self) -> float:
        """Worst mismatch over entries where both sides are negligible."""
        if not self.modes:
            return 0.0
        sig = self.scale > self.abs_tol
        if np.all(sig):
            return 0.0
        return float(np.max(self.mismatch[~sig]))

    @property
    def passed(self) -> bool:
        ok = self.mismatch <= np.maximum(self.rel_tol * self.scale, self.abs_tol)
        return bool(np.all(ok))


def check_curl_identity(
    modes,
    rule: QuadratureRule,
    rel_tol: float = 1e-8,
    abs_tol: float = 1e-12,
) -> CurlIdentityReport:
    modes = tuple(modes)
    lhs = _vector_gram(modes, rule, curl_u_grid)
    gram = _vector_gram(modes, rule, u_grid)
    ksq = np.array([md.k**2 for md in modes])
    rhs = gram * ksq[None, :]
    return CurlIdentityReport(modes=modes, lhs=lhs, rhs=rhs, rel_tol=rel_tol, abs_tol=abs_tol)


# ------------------------------------------------------------- boundary

@dataclass(frozen=True)
class BoundaryReport:
    """Wall behaviour of one mode against its interior magnitude."""

    mode: ModeData
    max_tangential_u: float
    max_normal_curl: float
    interior_max_u: float
    interior_max_curl: float

    @property
    def tangential_ratio(self) -> float:
        return self.max_tangential_u / self.interior_max_u

    @property
    def normal_curl_ratio(self) -> float:
        return self.max_normal_curl / self.interior_max_curl


def wall_samples(geom: CavityGeometry, n_r: int = 9, n_phi: int = 12, n_z: int = 9):
    """Deterministic sample points covering the three conducting walls."""
    rs = np.linspace(0.0, geom.a, n_r)
    phis = 2.0 * math.pi * np.arange(n_phi) / n_phi
    zs = np.linspace(0.0, geom.L, n_z)
    side_phi, side_z = np.meshgrid(phis, zs, indexing="ij")
    cap_r, cap_phi = np.meshgrid(rs, phis, indexing="ij")
    r = np.concatenate([
        np.full(side_phi.size, geom.a),
        cap_r.ravel(), cap_r.ravel(),
    ])
    phi = np.concatenate([
        side_phi.ravel(),
        cap_phi.ravel(), cap_phi.ravel(),
    ])
    z = np.concatenate([
        side_z.ravel(),
        np.zeros(cap_r.size), np.full(cap_r.size, geom.L),
    ])
    return r, phi, z


def check_boundary(mode: ModeData, samples=None) -> BoundaryReport:
    """Tangential u and normal curl u on the walls, vs interior maxima."""
    geom = mode.geom
    if samples is None:
        samples = wall_samples(geom)
    r, phi, z = (np.asarray(v, dtype=float) for v in samples)
    on_side = np.abs(r - geom.a) <= 1e-12 * geom.a
    on_cap = np.minimum(np.abs(z), np.abs(geom.L - z)) <= 1e-12 * geom.L
    off_wall = ~(on_side | on_cap)
    if np.any(off_wall):
        i = int(np.nonzero(off_wall)[0][0])
        raise ValueError(f"sample {i} (r={r[i]}, phi={phi[i]}, z={z[i]}) is not on a wall")

    u_r, u_phi, u_z = u_grid(mode, r, phi, z)
    v_r, v_phi, v_z = curl_u_grid(mode, r, phi, z)
    tangential = np.where(
        on_side,
        np.hypot(np.abs(u_phi), np.abs(u_z)),
        np.hypot(np.abs(u_r), np.abs(u_phi)),
    )
    normal_curl = np.where(on_side, np.abs(v_r), np.abs(v_z))

    # interior reference grid, strictly inside the walls
    ri = geom.a * (np.arange(24) + 0.5) / 24.0
    pi_ = 2.0 * math.pi * np.arange(4 * abs(mode.index.m) + 8) / (4 * abs(mode.index.m) + 8)
    zi = geom.L * (np.arange(24) + 0.5) / 24.0
    ui = u_grid(mode, ri[:, None, None], pi_[None, :, None], zi[None, None, :])
    ci = curl_u_grid(mode, ri[:, None, None], pi_[None, :, None], zi[None, None, :])
    interior_u = float(max(np.max(np.abs(c)) for c in ui))
    interior_c = float(max(np.max(np.abs(c)) for c in ci))
    return BoundaryReport(
        mode=mode,
        max_tangential_u=float(np.max(tangential)),
        max_normal_curl=float(np.max(normal_curl)),
        interior_max_u=interior_u,
        interior_max_curl=interior_c,
    )
