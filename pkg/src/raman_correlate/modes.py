"""System declarations: mode frequencies, couplings, initial phonon parameters.

Conventions: hbar = k_B = 1, so frequencies, couplings and temperatures share
one energy unit (Kelvin by default).
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DomainError

__all__ = [
    "UnitConvention",
    "VibrationMode",
    "RamanSystemSpec",
    "SqueezedThermalSpec",
    "validate_spec",
    "effective_couplings",
    "bose_einstein_mean",
]

ENERGY_UNITS = ("K", "rad/s")


@dataclass(frozen=True)
class UnitConvention:
    energy_unit: str = "K"

    def __post_init__(self):
        if self.energy_unit not in ENERGY_UNITS:
            raise ConfigurationError(
                f"unknown energy unit {self.energy_unit!r}; expected one of {ENERGY_UNITS}"
            )

    def describe(self) -> str:
        return f"hbar = k_B = 1; energies, frequencies and temperatures in {self.energy_unit}"


@dataclass(frozen=True)
class VibrationMode:
    """One phonon mode with its effective Stokes / anti-Stokes couplings."""

    omega_V: float
    g_S: complex = 0j
    g_A: complex = 0j


@dataclass(frozen=True)
class RamanSystemSpec:
    """Frequencies and couplings of the Stokes, anti-Stokes, pump and phonon modes.

    If ``omega_R`` is given and ``omega_S`` / ``omega_A`` are omitted they are
    placed on the Raman resonances ``omega_R -/+ omega_V`` of the first
    vibration mode. ``bare_M_S``, ``bare_M_A`` and ``pump_alpha`` are only used
    by the trilinear oracle and the pump short-time expansion.
    """

    vibrations: tuple[VibrationMode, ...]
    omega_S: float | None = None
    omega_A: float | None = None
    omega_R: float | None = None
    bare_M_S: complex | None = None
    bare_M_A: complex | None = None
    pump_alpha: complex | None = None
    units: UnitConvention = field(default_factory=UnitConvention)

    def __post_init__(self):
        vibs = tuple(self.vibrations)
        object.__setattr__(self, "vibrations", vibs)
        if self.omega_R is not None and vibs:
            wv = vibs[0].omega_V
            if self.omega_S is None:
                object.__setattr__(self, "omega_S", self.omega_R - wv)
            if self.omega_A is None:
                object.__setattr__(self, "omega_A", self.omega_R + wv)

    @property
    def n_phonons(self) -> int:
        return len(self.vibrations)

    @property
    def omega_V(self) -> np.ndarray:
        return np.array([v.omega_V for v in self.vibrations], dtype=float)

    @property
    def g_S(self) -> np.ndarray:
        return np.array([v.g_S for v in self.vibrations], dtype=complex)

    @property
    def g_A(self) -> np.ndarray:
        return np.array([v.g_A for v in self.vibrations], dtype=complex)

    @classmethod
    def single_mode(cls, omega_V, g_S, g_A, *, omega_S=None, omega_A=None, omega_R=None, **kw):
        return cls(
            vibrations=(VibrationMode(omega_V, complex(g_S), complex(g_A)),),
            omega_S=omega_S,
            omega_A=omega_A,
            omega_R=omega_R,
            **kw,
        )


@dataclass(frozen=True)
class SqueezedThermalSpec:
    """Squeezed thermal phonon state: Bose-Einstein occupation ``n_bar``,
    squeezing ``r`` and squeezing phase ``theta``."""

    n_bar: float
    r: float = 0.0
    theta: float = 0.0

    def __post_init__(self):
        if not (self.n_bar >= 0 and math.isfinite(self.n_bar)):
            raise DomainError(f"n_bar must be finite and nonnegative, got {self.n_bar}")
        if not math.isfinite(self.r):
            raise DomainError(f"squeezing parameter must be finite, got {self.r}")
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    @classmethod
    def from_temperature(cls, T: float, omega: float, r: float = 0.0, theta: float = 0.0):
        return cls(bose_einstein_mean(omega, T), r, theta)


def _bad_number(x) -> bool:
    return not np.all(np.isfinite(np.asarray(x, dtype=complex)))


def validate_spec(spec: RamanSystemSpec) -> list[str]:
    """Return the list of constraint violations of ``spec`` (empty if valid)."""
    report = []
    for name in ("omega_S", "omega_A"):
        w = getattr(spec, name)
        if w is None:
            report.append(f"missing frequency: {name}")
        elif _bad_number(w):
            report.append(f"non-finite frequency: {name} = {w}")
        elif w <= 0:
            report.append(f"nonpositive frequency: {name} = {w}")
    if not spec.vibrations:
        report.append("no vibration modes")
    for i, v in enumerate(spec.vibrations):
        if _bad_number(v.omega_V):
            report.append(f"non-finite frequency: vibration {i} omega_V = {v.omega_V}")
        elif v.omega_V <= 0:
            report.append(f"nonpositive frequency: vibration {i} omega_V = {v.omega_V}")
        if _bad_number(v.g_S) or _bad_number(v.g_A):
            report.append(f"non-finite coupling: vibration {i}")
    if spec.omega_R is not None:
        if _bad_number(spec.omega_R) or spec.omega_R <= 0:
            report.append(f"nonpositive frequency: omega_R = {spec.omega_R}")
        elif spec.vibrations and spec.omega_R <= max(v.omega_V for v in spec.vibrations):
            report.append(
                f"pump below vibration band: omega_R = {spec.omega_R} must exceed every omega_V"
            )
    for name in ("bare_M_S", "bare_M_A", "pump_alpha"):
        x = getattr(spec, name)
        if x is not None and _bad_number(x):
            report.append(f"non-finite value: {name} = {x}")
    return report


def effective_couplings(
    bare: Mapping[tuple[Hashable, str, Hashable], complex],
    alphas: Mapping[Hashable, complex],
) -> dict[Hashable, tuple[complex, complex]]:
    """Mean-field couplings ``g_q = sum_k M[k, channel, q] * alpha_k``.

    ``bare`` is keyed by ``(pump_mode, channel, phonon_mode)`` with channel
    ``"S"`` or ``"A"``. Returns ``{phonon_mode: (g_S, g_A)}``.
    """
    out: dict[Hashable, list[complex]] = {}
    for (k, channel, q), m in bare.items():
        if channel not in ("S", "A"):
            raise ConfigurationError(f"scattered mode must be 'S' or 'A', got {channel!r}")
        if k not in alphas:
            raise ConfigurationError(f"no coherent amplitude given for pump mode {k!r}")
        acc = out.setdefault(q, [0j, 0j])
        acc[0 if channel == "S" else 1] += complex(m) * complex(alphas[k])
    return {q: (g[0], g[1]) for q, g in out.items()}


def bose_einstein_mean(omega, T):
    """Bose-Einstein occupation ``1 / (exp(omega/T) - 1)``; zero at ``T = 0``."""
    omega = np.asarray(omega, dtype=float)
    T = np.asarray(T, dtype=float)
    if np.any(omega <= 0):
        raise DomainError("Bose-Einstein occupation needs omega > 0")
    if np.any(T < 0):
        raise DomainError("temperature must be nonnegative")
    with np.errstate(divide="ignore", over="ignore"):
        x = np.where(T > 0, omega / np.where(T > 0, T, 1.0), np.inf)
        n = 1.0 / np.expm1(x)
    n = np.where(np.isinf(x), 0.0, n)
    return float(n) if n.ndim == 0 else n
