"""Conditional-measurement pipeline for two coupled bosonic waveguide modes.

A two-mode squeezed vacuum evolves under a hopping Hamiltonian; detecting n
photons in one mode leaves the other in a Hermite-polynomial excited state.
The package evaluates that state's Wigner distribution and negativity, photon
statistics and Mandel parameter, quadrature squeezing, and Hilbert-Schmidt
distances -- once through closed forms and once through an independent
truncated-Fock brute-force oracle, so every number can be cross-checked.
"""

from .dynamics import (BoundaryStateError, DegenerateStateError,
                       InvalidParamsError, ModelParams, StateCoeffs,
                       ValidityReport, derive_coeffs, validate)
from .moments import (PhotonStats, PostState, SqueezeReport, moment_i1,
                      moment_i2, norm_i0, photon_stats, post_state,
                      projection_probability, quad_integral,
                      quadrature_variance, squeeze_report,
                      unitarity_closed_form, unitarity_residual)
from .special import (DEGREE_CAP, DegreeCapError, ProductPolyArgs, hermite,
                      laguerre_half, pochhammer, product_poly)
from .wigner import (NegativityResult, WignerGrid, gaussian_prefactor,
                     hs_distance, hs_distance_phase_space, negativity,
                     normalization_integral, read_grid_csv, wigner_eval,
                     wigner_grid, write_grid_csv)
from . import fock_oracle, quad2d

__all__ = [
    "BoundaryStateError", "DEGREE_CAP", "DegreeCapError",
    "DegenerateStateError", "InvalidParamsError", "ModelParams",
    "NegativityResult", "PhotonStats", "PostState", "ProductPolyArgs",
    "SqueezeReport", "StateCoeffs", "ValidityReport", "WignerGrid",
    "derive_coeffs", "fock_oracle", "gaussian_prefactor", "hermite",
    "hs_distance", "hs_distance_phase_space", "laguerre_half", "moment_i1",
    "moment_i2", "negativity", "norm_i0", "normalization_integral",
    "photon_stats", "pochhammer", "post_state", "product_poly",
    "projection_probability", "quad2d", "quad_integral",
    "quadrature_variance", "read_grid_csv", "squeeze_report",
    "unitarity_closed_form", "unitarity_residual", "validate", "wigner_eval",
    "wigner_grid", "write_grid_csv",
]

__version__ = "0.1.0"
