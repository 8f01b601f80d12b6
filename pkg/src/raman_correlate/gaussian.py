"""Zero-mean bosonic Gaussian states described by their second moments.

A state on ``n`` modes is stored as the normal moments ``N[i, j] = <a_i^+ a_j>``
and anomalous moments ``A[i, j] = <a_i a_j>``. Number statistics follow from
Wick pairing. Phase-randomized (number-diagonal) phonons, which are not
Gaussian, are described by :class:`DiagonalPhononStatistics` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .modes import SqueezedThermalSpec

__all__ = [
    "GaussianState",
    "DiagonalPhononStatistics",
    "make_vacuum",
    "make_thermal",
    "make_squeezed_thermal",
    "squeezed_thermal_statistics",
    "direct_sum",
    "mean_number",
    "number_variance",
    "number_cross_correlation",
    "degree_of_coherence_g2",
    "apply_linear_transform",
]


@dataclass(frozen=True, eq=False)
class GaussianState:
    N: np.ndarray
    A: np.ndarray

    def __post_init__(self):
        N = np.array(self.N, dtype=complex)
        A = np.array(self.A, dtype=complex)
        if N.ndim != 2 or N.shape[0] != N.shape[1] or A.shape != N.shape:
            raise DomainError(f"moment matrices must be square and equal-shaped, got {N.shape}, {A.shape}")
        N.setflags(write=False)
        A.setflags(write=False)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "A", A)

    @property
    def n_modes(self) -> int:
        return self.N.shape[0]

    def moment_matrix(self) -> np.ndarray:
        """``<xi xi^+>`` for ``xi = (a_1..a_n, a_1^+..a_n^+)``; PSD for physical states."""
        n = self.n_modes
        return np.block([[np.eye(n) + self.N.T, self.A], [self.A.conj(), self.N]])

    def min_moment_eigenvalue(self) -> float:
        G = self.moment_matrix()
        return float(np.linalg.eigvalsh(0.5 * (G + G.conj().T)).min())

    def is_physical(self, tol: float = 1e-10) -> bool:
        herm = np.allclose(self.N, self.N.conj().T, atol=tol)
        sym = np.allclose(self.A, self.A.T, atol=tol)
        return herm and sym and self.min_moment_eigenvalue() >= -tol

    def _check(self, m):
        if not 0 <= m < self.n_modes:
            raise IndexError(f"mode {m} out of range for {self.n_modes}-mode state")


@dataclass(frozen=True)
class DiagonalPhononStatistics:
    """Mean and number variance of phase-randomized phonon modes.

    Scalars describe a single phonon mode; arrays give one entry per mode.
    """

    n_V: np.ndarray | float
    V_nV: np.ndarray | float

    def __post_init__(self):
        n = np.atleast_1d(np.asarray(self.n_V, dtype=float))
        v = np.atleast_1d(np.asarray(self.V_nV, dtype=float))
        if n.shape != v.shape:
            raise DomainError("n_V and V_nV must have the same shape")
        if np.any(n < 0) or np.any(v < 0):
            raise DomainError("phonon mean and variance must be nonnegative")
        object.__setattr__(self, "n_V", n)
        object.__setattr__(self, "V_nV", v)

    @property
    def n_modes(self) -> int:
        return self.n_V.size

    @classmethod
    def thermal(cls, n_bar):
        n = np.atleast_1d(np.asarray(n_bar, dtype=float))
        return cls(n, n * n + n)

    @classmethod
    def from_squeezed_thermal(cls, spec: SqueezedThermalSpec):
        return cls(*squeezed_thermal_statistics(spec.n_bar, spec.r))

    def excess_over_thermal(self) -> np.ndarray:
        """``V - (n^2 + n)``: the part of the variance a thermal state with the
        same mean would not produce."""
        return self.V_nV - self.n_V * (self.n_V + 1)


def squeezed_thermal_statistics(n_bar, r):
    """Closed-form ``(<n>, V(n))`` of a squeezed thermal state."""
    mean = n_bar * np.cosh(2 * r) + np.sinh(r) ** 2
    var = (n_bar**2 + n_bar) * np.cosh(4 * r) + 0.5 * np.sinh(2 * r) ** 2
    return mean, var


def make_vacuum(n_modes: int) -> GaussianState:
    if n_modes < 1:
        raise DomainError("a state needs at least one mode")
    z = np.zeros((n_modes, n_modes), dtype=complex)
    return GaussianState(z, z)


def make_thermal(n_bars) -> GaussianState:
    n = np.atleast_1d(np.asarray(n_bars, dtype=float))
    if np.any(n < 0):
        raise DomainError("thermal occupations must be nonnegative")
    return GaussianState(np.diag(n).astype(complex), np.zeros((n.size, n.size), complex))


def make_squeezed_thermal(spec: SqueezedThermalSpec) -> GaussianState:
    """Single-mode state ``S(xi) rho_th S(xi)^+`` with ``xi = r exp(i theta)``.

    The squeeze operator is ``S(xi) = exp((xi^* a^2 - xi a^+2) / 2)``, hence
    ``<a a> = -(n_bar + 1/2) sinh(2r) exp(i theta)``.
    """
    nb, r = spec.n_bar, spec.r
    N = nb * math.cosh(2 * r) + math.sinh(r) ** 2
    A = -(nb + 0.5) * math.sinh(2 * r) * np.exp(1j * spec.theta)
    return GaussianState([[N]], [[A]])


def direct_sum(*states: GaussianState) -> GaussianState:
    """Product state of independent subsystems, modes concatenated in order."""
    n = sum(s.n_modes for s in states)
    N = np.zeros((n, n), complex)
    A = np.zeros((n, n), complex)
    k = 0
    for s in states:
        sl = slice(k, k + s.n_modes)
        N[sl, sl] = s.N
        A[sl, sl] = s.A
        k += s.n_modes
    return GaussianState(N, A)


def mean_number(state: GaussianState, mode: int) -> float:
    state._check(mode)
    return float(state.N[mode, mode].real)


def number_variance(state: GaussianState, mode: int) -> float:
    state._check(mode)
    n = state.N[mode, mode].real
    return float(n * (1 + n) + abs(state.A[mode, mode]) ** 2)


def number_cross_correlation(state: GaussianState, i: int, j: int) -> float:
    """``<n_i n_j> - <n_i><n_j>`` for distinct modes."""
    state._check(i)
    state._check(j)
    if i == j:
        raise DomainError("use number_variance for i == j")
    return float(abs(state.N[i, j]) ** 2 + abs(state.A[i, j]) ** 2)


def degree_of_coherence_g2(state: GaussianState, mode: int) -> float:
    """Normalized second-order coherence ``<b^+2 b^2> / <b^+ b>^2``."""
    state._check(mode)
    n = state.N[mode, mode].real
    if n <= 0:
        raise DomainError("degree of coherence is undefined for an empty mode")
    return float(2.0 + (abs(state.A[mode, mode]) / n) ** 2)


def apply_linear_transform(state: GaussianState, T) -> GaussianState:
    """Moments of the transformed operators ``xi' = T xi``.

    ``T`` is either a ``2n x 2n`` matrix acting on ``(a_1..a_n, a_1^+..a_n^+)``
    or an object exposing ``bogoliubov()`` (such as a propagator).
    """
    if hasattr(T, "bogoliubov"):
        T = T.bogoliubov()
    T = np.asarray(T, dtype=complex)
    n = state.n_modes
    if T.shape != (2 * n, 2 * n):
        raise DomainError(f"transform of shape {T.shape} does not act on {n} modes")
    # Gamma = <xi xi^T>
    G = np.block([[state.A, np.eye(n) + state.N.T], [state.N, state.A.conj()]])
    G = T @ G @ T.T
    A = G[:n, :n]
    N = G[n:, :n]
    return GaussianState(0.5 * (N + N.conj().T), 0.5 * (A + A.T))
