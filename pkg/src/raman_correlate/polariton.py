"""Photon / optical-phonon polariton equilibrium and the phonon G2(T) curve.

Single-wavevector model (the ``-k`` partner operators identified with ``+k``):

    H = w_k a^+ a + w_b b^+ b + 2 i g (a^+ - a)(b^+ + b)

It is diagonalized by a Bogoliubov transformation; the equilibrium state is
thermal in the polariton branches, which leaves the bare phonon ``b`` in a
squeezed thermal state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import ConfigurationError, InstabilityError
from .gaussian import GaussianState, apply_linear_transform, degree_of_coherence_g2, make_thermal
from .modes import bose_einstein_mean
from .results import SweepResult

__all__ = [
    "PolaritonSpec",
    "NormalModes",
    "quadratic_form",
    "diagonalize_polariton",
    "thermal_phonon_moments",
    "equilibrium_state",
    "g2_vs_temperature",
    "zero_temperature_g2",
    "detuning_for_plateau",
]

SIGMA_Z = np.diag([1.0, 1.0, -1.0, -1.0])


@dataclass(frozen=True)
class PolaritonSpec:
    """``omega_k`` photon, ``omega_b`` transverse optical phonon, ``g_k`` coupling."""

    omega_k: float
    omega_b: float
    g_k: float

    def __post_init__(self):
        if not (self.omega_k > 0 and self.omega_b > 0):
            raise ConfigurationError("polariton frequencies must be positive")

    @classmethod
    def resonant(cls, Omega: float, g: float) -> "PolaritonSpec":
        return cls(Omega, Omega, g)


@dataclass(frozen=True, eq=False)
class NormalModes:
    """Branch frequencies and ``T`` with ``(c, c^+) = T (a, b, a^+, b^+)``."""

    frequencies: np.ndarray
    T: np.ndarray

    def symplectic_residual(self) -> float:
        return float(np.abs(self.T @ SIGMA_Z @ self.T.conj().T - SIGMA_Z).max())

    @property
    def inverse(self) -> np.ndarray:
        return SIGMA_Z @ self.T.conj().T @ SIGMA_Z


def quadratic_form(spec: PolaritonSpec) -> np.ndarray:
    """Hermitian ``h`` with ``H = 1/2 xi^+ h xi + const`` for ``xi = (a, b, a^+, b^+)``."""
    wk, wb, g = spec.omega_k, spec.omega_b, spec.g_k
    # 2ig (a^+ b^+ + a^+ b - a b^+ - a b)
    c = 2j * g
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = h[2, 2] = wk
    h[1, 1] = h[3, 3] = wb
    # a^+ b: xi_0^+ xi_1 coefficient c, and its h.c. a b^+ -> -c
    h[0, 1] = c
    h[1, 0] = np.conj(c)
    h[2, 3] = np.conj(h[0, 1])
    h[3, 2] = h[0, 1]
    # a^+ b^+ (xi_0^+ xi_3) with coefficient c; a b (xi_2^+ xi_1) with -c
    h[0, 3] = c
    h[3, 0] = np.conj(c)
    h[2, 1] = -c
    h[1, 2] = np.conj(-c)
    return h


def diagonalize_polariton(spec: PolaritonSpec) -> NormalModes:
    h = quadratic_form(spec)
    if np.linalg.eigvalsh(h).min() <= 0:
        raise InstabilityError(
            f"coupling g = {spec.g_k} is too strong: the polariton Hamiltonian is not positive definite"
        )
    K = SIGMA_Z @ h  # i d(xi)/dt = K xi
    vals, vecs = np.linalg.eig(K.T)
    rows = []
    for lam, phi in zip(vals, vecs.T):
        norm = (phi.conj() @ SIGMA_Z @ phi).real
        if norm > 0:
            rows.append((lam.real, phi / np.sqrt(norm)))
    if len(rows) != 2 or np.abs(vals.imag).max() > 1e-9 * np.abs(vals).max():
        raise InstabilityError("polariton branches are not real and positive")
    rows.sort(key=lambda r: r[0])
    freqs = np.array([r[0] for r in rows])
    X = np.array([r[1] for r in rows])  # c_i = X[i] . xi
    # (c, c^+) rows; c^+ = conj(X) . (a^+, b^+, a, b)
    Xd = np.conj(X)[:, [2, 3, 0, 1]]
    T = np.vstack([X, Xd])
    # fix each branch's arbitrary phase so g = 0 gives exactly the identity
    for i in range(2):
        k = int(np.argmax(np.abs(T[i, :2])))
        ph = np.exp(-1j * np.angle(T[i, k]))
        T[i] *= ph
        T[i + 2] *= np.conj(ph)
    if np.any(freqs <= 0):
        raise InstabilityError(f"non-positive polariton branch frequencies {freqs}")
    return NormalModes(freqs, T)


def equilibrium_state(modes: NormalModes, T: float) -> GaussianState:
    """Thermal polariton state expressed on the bare ``(a, b)`` modes."""
    occ = bose_einstein_mean(modes.frequencies, T) if T > 0 else np.zeros(2)
    return apply_linear_transform(make_thermal(occ), modes.inverse)


def thermal_phonon_moments(modes: NormalModes, beta: float) -> tuple[float, complex]:
    """``(<b^+ b>, <b b>)`` at inverse temperature ``beta`` (``inf`` for T = 0)."""
    T = 0.0 if np.isinf(beta) else 1.0 / beta
    st = equilibrium_state(modes, T)
    return float(st.N[1, 1].real), complex(st.A[1, 1])


def g2_vs_temperature(spec: PolaritonSpec, T_grid) -> SweepResult:
    T_grid = np.asarray(T_grid, dtype=float)
    if np.any(T_grid <= 0) or np.any(np.diff(T_grid) <= 0):
        raise ConfigurationError("temperature grid must be positive and strictly ascending")
    modes = diagonalize_polariton(spec)
    out = SweepResult(
        ("T", "G2", "n_b"),
        metadata={
            "model": "single-k polariton, H = w_k a+a + w_b b+b + 2ig(a+ - a)(b+ + b)",
            "parameters": f"omega_k={spec.omega_k!r}, omega_b={spec.omega_b!r}, g={spec.g_k!r}",
            "G2": "<b+^2 b^2> / <b+ b>^2 (squared denominator)",
        },
    )
    for T in T_grid:
        st = equilibrium_state(modes, T)
        out.append(T, degree_of_coherence_g2(st, 1), st.N[1, 1].real)
    return out


def zero_temperature_g2(spec: PolaritonSpec) -> float:
    return degree_of_coherence_g2(equilibrium_state(diagonalize_polariton(spec), 0.0), 1)


def detuning_for_plateau(Omega: float, g: float, target: float, bracket=(1.0, 20.0)) -> float:
    """Photon frequency ``omega_k`` (in units of ``Omega``) at which the T = 0
    phonon G2 equals ``target``, searched within ``bracket``."""
    f = lambda x: zero_temperature_g2(PolaritonSpec(x * Omega, Omega, g)) - target
    lo, hi = bracket
    if f(lo) * f(hi) > 0:
        raise ConfigurationError(f"target G2 = {target} is not reached for omega_k/Omega in {bracket}")
    return float(brentq(f, lo, hi, xtol=1e-12)) * Omega
