"""Sparse Hamiltonians of the trilinear and effective Raman models."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ..errors import ConfigurationError
from ..modes import RamanSystemSpec
from .space import TruncatedSpace

__all__ = ["build_trilinear_hamiltonian", "build_effective_hamiltonian", "free_hamiltonian"]

TRILINEAR_LABELS = ("R", "S", "A", "V")
EFFECTIVE_LABELS = ("S", "A", "V")


def free_hamiltonian(space: TruncatedSpace, omegas: dict[str, float]) -> sp.csr_matrix:
    diag = np.zeros(space.dimension)
    for label, w in omegas.items():
        diag += w * space.number(label)
    return sp.diags(diag.astype(complex), format="csr")


def _hermitian(H0: sp.spmatrix, K: sp.spmatrix) -> sp.csr_matrix:
    H = H0 + K + K.conj().T
    return H.tocsr()


def build_trilinear_hamiltonian(space: TruncatedSpace, spec: RamanSystemSpec) -> sp.csr_matrix:
    """``sum w n + (M_S a_S^+ a_R a_V^+ + M_A a_A^+ a_R a_V + h.c.)`` on one mode per label."""
    if set(space.labels) != set(TRILINEAR_LABELS):
        raise ConfigurationError(f"trilinear model needs modes {TRILINEAR_LABELS}, got {space.labels}")
    if spec.omega_R is None:
        raise ConfigurationError("trilinear model needs omega_R")
    MS = complex(spec.bare_M_S or 0)
    MA = complex(spec.bare_M_A or 0)
    wV = spec.vibrations[0].omega_V
    H0 = free_hamiltonian(space, {"R": spec.omega_R, "S": spec.omega_S, "A": spec.omega_A, "V": wV})
    aR, aV = space.annihilation("R"), space.annihilation("V")
    K = MS * (space.creation("S") @ aR @ space.creation("V")) + MA * (space.creation("A") @ aR @ aV)
    return _hermitian(H0, K)


def build_effective_hamiltonian(space: TruncatedSpace, spec: RamanSystemSpec) -> sp.csr_matrix:
    """``sum w n + (g_S a_S^+ a_V^+ + g_A a_A^+ a_V + h.c.)`` for the first vibration mode."""
    if set(space.labels) != set(EFFECTIVE_LABELS):
        raise ConfigurationError(f"effective model needs modes {EFFECTIVE_LABELS}, got {space.labels}")
    v = spec.vibrations[0]
    H0 = free_hamiltonian(space, {"S": spec.omega_S, "A": spec.omega_A, "V": v.omega_V})
    aV = space.annihilation("V")
    K = complex(v.g_S) * (space.creation("S") @ space.creation("V")) + complex(v.g_A) * (space.creation("A") @ aV)
    return _hermitian(H0, K)
