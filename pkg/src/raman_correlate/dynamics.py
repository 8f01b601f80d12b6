"""Heisenberg dynamics of the parametric (pump-eliminated) Raman model.

The operator vector ``Y = (a_S^+, a_A, a_1V, ..., a_nV)`` obeys
``i dY/dt = M Y``, so ``Y(t) = S(t) Y(0)`` with ``S(t) = D exp(-i E t) D^-1``.
``J = diag(-1, 1, ..., 1)`` is the commutator metric: ``J M`` is Hermitian and
``S^+ J S = J`` for every ``t``.

Row 0 of ``S`` holds ``(u_S, v_S, w_S)`` and row 1 holds ``(u_A, v_A, w_A)``:

    a_S^+(t) = u_S a_S^+ + v_S a_A + sum_q w_qS a_qV
    a_A(t)   = u_A a_S^+ + v_A a_A + sum_q w_qA a_qV
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigurationError,
    DomainError,
    ExceptionalPointError,
    GrowthOverflowError,
)
from .gaussian import DiagonalPhononStatistics, GaussianState, apply_linear_transform, direct_sum, make_vacuum
from .modes import RamanSystemSpec, validate_spec

__all__ = [
    "DynamicalMatrix",
    "SpectralDecomposition",
    "Propagator",
    "RPACoefficients",
    "build_matrix",
    "eigendecompose",
    "propagator_at",
    "stokes_intensity",
    "antistokes_intensity",
    "stokes_antistokes_correlation",
    "correlation_coefficients",
    "intensity_variances",
    "cross_correlation_coefficient",
    "invert_for_variance",
    "evolve_gaussian",
]

EXCEPTIONAL_POINT_CONDITION = 1e12
MAX_EXPONENT = 700.0


@dataclass(frozen=True, eq=False)
class DynamicalMatrix:
    M: np.ndarray
    J: np.ndarray

    @property
    def dimension(self) -> int:
        return self.M.shape[0]

    @property
    def n_phonons(self) -> int:
        return self.dimension - 2

    def hermiticity_residual(self) -> float:
        H = self.J @ self.M
        return float(np.abs(H - H.conj().T).max())


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    eigenvalues: np.ndarray
    D: np.ndarray
    D_inv: np.ndarray
    condition: float
    J: np.ndarray

    def reconstruction_residual(self, M) -> float:
        M = M.M if isinstance(M, DynamicalMatrix) else M
        R = self.D @ np.diag(self.eigenvalues) @ self.D_inv
        return float(np.linalg.norm(M - R, 2))

    @property
    def growth_rate(self) -> float:
        return float(np.abs(self.eigenvalues.imag).max())


@dataclass(frozen=True, eq=False)
class Propagator:
    t: float
    S: np.ndarray
    J: np.ndarray
    growth_rate: float = 0.0
    unstable: bool = False

    @property
    def n_phonons(self) -> int:
        return self.S.shape[0] - 2

    @property
    def u_S(self) -> complex:
        return complex(self.S[0, 0])

    @property
    def v_S(self) -> complex:
        return complex(self.S[0, 1])

    @property
    def w_S(self) -> np.ndarray:
        return self.S[0, 2:]

    @property
    def u_A(self) -> complex:
        return complex(self.S[1, 0])

    @property
    def v_A(self) -> complex:
        return complex(self.S[1, 1])

    @property
    def w_A(self) -> np.ndarray:
        return self.S[1, 2:]

    def pseudo_unitarity_residual(self) -> float:
        return float(np.linalg.norm(self.S.conj().T @ self.J @ self.S - self.J, 2))

    def bogoliubov(self) -> np.ndarray:
        """The same map written on ``(a_S, a_A, a_V.., a_S^+, a_A^+, a_V^+..)``."""
        S = self.S
        n = S.shape[0]
        # Y = xi[y_idx], Y^+ = xi[yd_idx]; only the Stokes slot is a creation operator.
        y_idx = np.arange(n)
        y_idx[0] = n
        yd_idx = np.arange(n, 2 * n)
        yd_idx[0] = 0
        T = np.zeros((2 * n, 2 * n), dtype=complex)
        T[1:n, y_idx] = S[1:]
        T[n + 1 :, yd_idx] = S[1:].conj()
        T[0, yd_idx] = S[0].conj()
        T[n, y_idx] = S[0]
        return T


@dataclass(frozen=True)
class RPACoefficients:
    """``<n_S; n_A> = A + B * n_V + C * V(n_V)`` for the designated phonon mode."""

    A: float
    B: float
    C: float

    def __call__(self, n_V, V_nV):
        return self.A + self.B * n_V + self.C * V_nV


def build_matrix(spec: RamanSystemSpec, *, rotating_frame: bool = False, max_modes: int = 512) -> DynamicalMatrix:
    problems = validate_spec(spec)
    if problems:
        raise ConfigurationError("; ".join(problems))
    n = spec.n_phonons
    if n + 2 > max_modes:
        raise ConfigurationError(f"{n + 2} modes exceed the configured maximum of {max_modes}")
    wS, wA = spec.omega_S, spec.omega_A
    if rotating_frame:
        if spec.omega_R is None:
            raise ConfigurationError("rotating frame requires omega_R")
        wS, wA = wS - spec.omega_R, wA - spec.omega_R
    gS, gA = spec.g_S, spec.g_A
    M = np.zeros((n + 2, n + 2), dtype=complex)
    M[0, 0] = -wS
    M[1, 1] = wA
    M[0, 2:] = -gS.conj()
    M[1, 2:] = gA
    M[2:, 0] = gS
    M[2:, 1] = gA.conj()
    M[2:, 2:] = np.diag(spec.omega_V)
    J = np.diag([-1.0] + [1.0] * (n + 1))
    return DynamicalMatrix(M, J)


def eigendecompose(dm: DynamicalMatrix) -> SpectralDecomposition:
    M = dm.M
    E, D = np.linalg.eig(M)
    order = np.lexsort((E.imag, E.real))
    E, D = E[order], D[:, order]
    cond = float(np.linalg.cond(D))
    if not np.isfinite(cond) or cond > EXCEPTIONAL_POINT_CONDITION:
        raise ExceptionalPointError(
            f"dynamical matrix is close to an exceptional point (eigenvector condition {cond:.3g}); "
            "perturb the frequencies or couplings slightly"
        )
    return SpectralDecomposition(E, D, np.linalg.inv(D), cond, dm.J)


def propagator_at(dec: SpectralDecomposition, t: float) -> Propagator:
    if not np.isfinite(t):
        raise DomainError("propagation time must be finite")
    E = dec.eigenvalues
    scale = max(1.0, float(np.abs(E).max()))
    rate = float(np.abs(E.imag).max())
    if abs(t) * rate > MAX_EXPONENT:
        raise GrowthOverflowError(f"exp({abs(t) * rate:.1f}) growth at t = {t} overflows")
    S = (dec.D * np.exp(-1j * E * t)) @ dec.D_inv
    unstable = rate > 1e-9 * scale
    return Propagator(float(t), S, dec.J, rate if unstable else 0.0, unstable)


def _phonon_arrays(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int):
    n = prop.n_phonons
    if not 0 <= mode < n:
        raise IndexError(f"phonon mode {mode} out of range for {n} modes")
    if phonons.n_modes == n:
        return phonons.n_V, phonons.V_nV
    if phonons.n_modes == 1:
        nv = np.zeros(n)
        vv = np.zeros(n)
        nv[mode] = phonons.n_V[0]
        vv[mode] = phonons.V_nV[0]
        return nv, vv
    raise DomainError(f"phonon statistics for {phonons.n_modes} modes do not fit {n} modes")


def stokes_intensity(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> float:
    nv, _ = _phonon_arrays(prop, phonons, mode)
    return float(abs(prop.v_S) ** 2 + np.sum(np.abs(prop.w_S) ** 2 * (1 + nv)))


def antistokes_intensity(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> float:
    nv, _ = _phonon_arrays(prop, phonons, mode)
    return float(abs(prop.u_A) ** 2 + np.sum(np.abs(prop.w_A) ** 2 * nv))


def correlation_coefficients(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> RPACoefficients:
    """Affine coefficients of ``<n_S; n_A>`` in the designated mode's ``(n_V, V(n_V))``.

    Other phonon modes contribute through their own statistics to ``A``.
    """
    nv, vv = _phonon_arrays(prop, phonons, mode)
    excess = vv - nv * (nv + 1)
    pair = prop.w_S.conj() * prop.w_A
    others = np.arange(prop.n_phonons) != mode
    x = np.conj(prop.u_S) * prop.u_A + np.sum(nv[others] * pair[others])
    y = pair[mode]
    A = abs(x) ** 2 + np.sum(np.abs(pair[others]) ** 2 * excess[others])
    B = 2 * (x * np.conj(y)).real - abs(y) ** 2
    return RPACoefficients(float(A), float(B), float(abs(y) ** 2))


def stokes_antistokes_correlation(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> float:
    """``<n_S(t); n_A(t)>`` for vacuum initial radiation and number-diagonal phonons."""
    nv, vv = _phonon_arrays(prop, phonons, mode)
    c = correlation_coefficients(prop, phonons, mode)
    return float(c(nv[mode], vv[mode]))


def intensity_variances(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> tuple[float, float]:
    """``(V(n_S(t)), V(n_A(t)))`` under the same assumptions."""
    nv, vv = _phonon_arrays(prop, phonons, mode)
    excess = vv - nv * (nv + 1)
    nS = stokes_intensity(prop, phonons, mode)
    nA = antistokes_intensity(prop, phonons, mode)
    VS = nS * (nS + 1) + np.sum(np.abs(prop.w_S) ** 4 * excess)
    VA = nA * (nA + 1) + np.sum(np.abs(prop.w_A) ** 4 * excess)
    return float(VS), float(VA)


def cross_correlation_coefficient(prop: Propagator, phonons: DiagonalPhononStatistics, mode: int = 0) -> float:
    VS, VA = intensity_variances(prop, phonons, mode)
    if VS <= 0 or VA <= 0:
        raise DomainError("cross-correlation coefficient undefined: a scattered mode has zero variance")
    return stokes_antistokes_correlation(prop, phonons, mode) / np.sqrt(VS * VA)


def invert_for_variance(
    measured_correlation: float,
    measured_nS: float,
    measured_nA: float,
    prop: Propagator,
    mode: int = 0,
    background: DiagonalPhononStatistics | None = None,
) -> tuple[float, float]:
    """Recover ``(n_V, V(n_V))`` of the designated mode from measured data.

    ``n_V`` is the least-squares solution of the two intensity relations,
    ``V(n_V)`` then follows from the correlation. ``background`` supplies the
    statistics of the other phonon modes (vacuum if omitted).
    """
    n = prop.n_phonons
    if background is None:
        background = DiagonalPhononStatistics(np.zeros(n), np.zeros(n))
    nv, vv = _phonon_arrays(prop, background, mode)
    nv, vv = nv.copy(), vv.copy()
    nv[mode] = vv[mode] = 0.0
    base = DiagonalPhononStatistics(nv, vv)
    wS2 = abs(prop.w_S[mode]) ** 2
    wA2 = abs(prop.w_A[mode]) ** 2
    lhs = np.array([wS2, wA2])
    rhs = np.array(
        [measured_nS - stokes_intensity(prop, base, mode), measured_nA - antistokes_intensity(prop, base, mode)]
    )
    denom = lhs @ lhs
    if denom < 1e-300:
        raise DomainError("phonon mode is decoupled from both scattered modes at this time")
    n_est = float(lhs @ rhs / denom)
    coef = correlation_coefficients(prop, base, mode)
    if abs(coef.C) < 1e-12:
        raise DomainError(f"correlation is insensitive to V(n_V) at t = {prop.t} (|C'| = {abs(coef.C):.3g})")
    V_est = (measured_correlation - coef.A - coef.B * n_est) / coef.C
    return n_est, float(V_est)


def evolve_gaussian(prop: Propagator, phonon_state: GaussianState) -> GaussianState:
    """Exact Gaussian state on ``(S, A, V_1..V_n)`` at time ``prop.t`` for vacuum
    initial radiation and the given (possibly squeezed) phonon state."""
    if phonon_state.n_modes != prop.n_phonons:
        raise DomainError("phonon state does not match the number of phonon modes")
    return apply_linear_transform(direct_sum(make_vacuum(2), phonon_state), prop)
