"""Stokes / anti-Stokes photon correlations from Raman scattering on (squeezed) thermal phonons."""

from .dynamics import (
    Propagator,
    build_matrix,
    eigendecompose,
    propagator_at,
    stokes_intensity,
    antistokes_intensity,
    stokes_antistokes_correlation,
    correlation_coefficients,
    cross_correlation_coefficient,
    invert_for_variance,
)
from .gaussian import DiagonalPhononStatistics, GaussianState, make_squeezed_thermal, make_vacuum
from .modes import RamanSystemSpec, SqueezedThermalSpec, VibrationMode, bose_einstein_mean, effective_couplings, validate_spec
from .results import SweepResult

__version__ = "0.1.0"
