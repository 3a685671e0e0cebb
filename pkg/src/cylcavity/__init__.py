"""Electromagnetic mode structure of an ideal circular cylindrical cavity.

Evaluates Bessel functions and their zeros from scratch, enumerates the
TM/TE resonance spectrum, builds the orthonormal vector mode functions
of the quantized field, synthesizes classical E and B fields from mode
amplitudes, and certifies the whole construction numerically
(orthonormality, boundary conditions, curl identities, Maxwell
residuals, energy bookkeeping).
"""

from .bessel import (
    BesselZeroTable,
    bessel_j,
    bessel_j_prime,
    bessel_prime_zero,
    bessel_zero,
    zero_table,
)
from .spectrum import (
    HBAR,
    SPEED_OF_LIGHT,
    TE,
    TM,
    VACUUM_PERMITTIVITY,
    CavityGeometry,
    ModeData,
    ModeIndex,
    enumerate_modes,
    mode_data,
)
from .modefield import (
    CylPoint,
    CylVector,
    curl_u,
    curl_u_grid,
    psi,
    psi_grid,
    to_cartesian,
    u_grid,
    u_mode,
)
from .verify import (
    BoundaryReport,
    CurlIdentityReport,
    GramReport,
    QuadratureRule,
    check_boundary,
    check_curl_identity,
    check_scalar_orthonormality,
    check_vector_orthonormality,
    default_rule,
    integrate_cavity,
    quadrature_rule,
    wall_samples,
)
from .synthesis import (
    FieldState,
    MaxwellResidualReport,
    electric_field,
    electric_field_grid,
    evolve,
    field_samplers,
    magnetic_field,
    magnetic_field_grid,
    maxwell_residual,
    mode_sum_energy,
    project,
    total_energy,
    zero_point_energy,
)
from .stateio import FORMAT_VERSION, load_state, loads_state, dumps_state, save_state

__version__ = "0.1.0"

__all__ = [
    "BesselZeroTable",
    "BoundaryReport",
    "CavityGeometry",
    "CurlIdentityReport",
    "CylPoint",
    "CylVector",
    "FORMAT_VERSION",
    "FieldState",
    "GramReport",
    "HBAR",
    "MaxwellResidualReport",
    "ModeData",
    "ModeIndex",
    "QuadratureRule",
    "SPEED_OF_LIGHT",
    "TE",
    "TM",
    "VACUUM_PERMITTIVITY",
    "bessel_j",
    "bessel_j_prime",
    "bessel_prime_zero",
    "bessel_zero",
    "check_boundary",
    "check_curl_identity",
    "check_scalar_orthonormality",
    "check_vector_orthonormality",
    "curl_u",
    "curl_u_grid",
    "default_rule",
    "dumps_state",
    "electric_field",
    "electric_field_grid",
    "enumerate_modes",
    "evolve",
    "field_samplers",
    "integrate_cavity",
    "load_state",
    "loads_state",
    "magnetic_field",
    "magnetic_field_grid",
    "maxwell_residual",
    "mode_data",
    "mode_sum_energy",
    "project",
    "psi",
    "psi_grid",
    "quadrature_rule",
    "save_state",
    "to_cartesian",
    "total_energy",
    "u_grid",
    "u_mode",
    "wall_samples",
    "zero_point_energy",
    "zero_table",
]
