"""Oracle verdicts: Manley-Rowe drift, the Stokes / anti-Stokes correlation
identity, and cross-checks of the Gaussian and pump-expansion routes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from ..dynamics import build_matrix, eigendecompose, evolve_gaussian, propagator_at
from ..dynamics import intensity_variances, stokes_antistokes_correlation, stokes_intensity, antistokes_intensity
from ..errors import ConfigurationError, TruncationWarning
from ..gaussian import (
    DiagonalPhononStatistics,
    make_squeezed_thermal,
    mean_number,
    number_cross_correlation,
    number_variance,
)
from ..modes import RamanSystemSpec, SqueezedThermalSpec
from .evolution import ExactEvolver
from .hamiltonians import build_effective_hamiltonian, build_trilinear_hamiltonian
from .space import TruncatedSpace
from .states import Ensemble, coherent_amplitudes, squeezed_fock_amplitudes, thermal_weights

__all__ = [
    "EDGE_TOLERANCE",
    "trilinear_initial_ensemble",
    "effective_initial_ensemble",
    "ManleyRoweReport",
    "manley_rowe_check",
    "IdentityReport",
    "correlation_identity_check",
    "CrosscheckReport",
    "gaussian_crosscheck",
    "oracle_scattered_moments",
    "pump_moments_exact",
]

EDGE_TOLERANCE = 1e-6
PHASES = (0.0, 0.5 * np.pi, np.pi, 1.5 * np.pi)


def _warn_edge(edge: float, limit: float = EDGE_TOLERANCE) -> bool:
    if edge > limit:
        warnings.warn(
            f"edge population {edge:.3g} exceeds {limit:g}; result may be truncation-limited",
            TruncationWarning,
            stacklevel=3,
        )
        return True
    return False


def trilinear_initial_ensemble(space: TruncatedSpace, alpha: complex, n_bar_V: float) -> Ensemble:
    """Coherent pump, vacuum Stokes / anti-Stokes, thermal phonon (Fock mixture)."""
    pump = coherent_amplitudes(alpha, space.cutoffs[space.position("R")])
    weights = thermal_weights(n_bar_V)
    cV = space.cutoffs[space.position("V")]
    if weights.size - 1 > cV:
        weights = weights[: cV + 1]
    vecs = []
    for m in range(weights.size):
        v = space.product_vector({"R": pump, "V": np.eye(cV + 1)[m]})
        vecs.append(v / np.linalg.norm(v))
    return Ensemble(space, weights, vecs)


def effective_initial_ensemble(space: TruncatedSpace, phonon: SqueezedThermalSpec, phases=None) -> Ensemble:
    """Vacuum radiation times a squeezed thermal phonon.

    The phonon is the thermal Fock mixture with each member squeezed; when
    ``phases`` is given the ensemble is averaged uniformly over those squeezing
    phases instead of using ``phonon.theta``.
    """
    cV = space.cutoffs[space.position("V")]
    weights = thermal_weights(phonon.n_bar)
    thetas = (phonon.theta,) if phases is None else tuple(phases)
    ws, vecs = [], []
    for theta in thetas:
        for m, p in enumerate(weights):
            if phonon.r == 0:
                if m > cV:
                    continue
                amp = np.eye(cV + 1)[m]
            else:
                amp = squeezed_fock_amplitudes(m, phonon.r, theta, cV)
            v = space.product_vector({"V": amp})
            ws.append(p / len(thetas))
            vecs.append(v / np.linalg.norm(v))
    return Ensemble(space, np.array(ws), vecs)


@dataclass
class ManleyRoweReport:
    times: np.ndarray
    drift_C1: float
    drift_C2: float
    drift_V_C1: float
    drift_V_C2: float
    edge_population: float
    inconclusive: bool

    @property
    def max_drift(self) -> float:
        return max(self.drift_C1, self.drift_C2, self.drift_V_C1, self.drift_V_C2)

    def format(self) -> str:
        return "\n".join(
            [
                "Manley-Rowe drift (max over time grid)",
                f"  <C1> {self.drift_C1:.3e}   V(C1) {self.drift_V_C1:.3e}",
                f"  <C2> {self.drift_C2:.3e}   V(C2) {self.drift_V_C2:.3e}",
                f"  edge population {self.edge_population:.3e}" + ("  [INCONCLUSIVE TRUNCATION]" if self.inconclusive else ""),
            ]
        )


def manley_rowe_check(spec: RamanSystemSpec, initial: Ensemble, t_grid, evolver: ExactEvolver | None = None) -> ManleyRoweReport:
    space = initial.space
    ev = evolver or ExactEvolver(build_trilinear_hamiltonian(space, spec))
    nR, nS, nA, nV = (space.number(l) for l in ("R", "S", "A", "V"))
    C1 = nS + nA + nR
    C2 = nS - nA - nV

    def moments(ens):
        m1 = ens.diagonal_expectation(C1)
        m2 = ens.diagonal_expectation(C2)
        return m1, m2, ens.diagonal_expectation(C1**2) - m1**2, ens.diagonal_expectation(C2**2) - m2**2

    ref = moments(initial)
    drift = np.zeros(4)
    edge = initial.max_edge_population()
    t_grid = np.asarray(t_grid, dtype=float)
    for t in t_grid:
        ens = ev.evolve_ensemble(initial, t)
        drift = np.maximum(drift, np.abs(np.subtract(moments(ens), ref)))
        edge = max(edge, ens.max_edge_population())
    inconclusive = _warn_edge(edge)
    return ManleyRoweReport(t_grid, *map(float, drift), edge, inconclusive)


@dataclass
class IdentityReport:
    t: float
    lhs: float
    rhs_printed: float
    rhs_alternate: float
    lhs_unsymmetrized: float
    rhs_printed_unsymmetrized: float
    rhs_alternate_unsymmetrized: float
    edge_population: float
    tolerance: float = 1e-6
    terms: dict = field(default_factory=dict)

    @property
    def residual_printed(self) -> float:
        return abs(self.lhs - self.rhs_printed)

    @property
    def residual_alternate(self) -> float:
        return abs(self.lhs - self.rhs_alternate)

    @property
    def verdict(self) -> str:
        """``"-"`` (as printed), ``"+"`` (opposite sign), ``"both"`` or ``"neither"``."""
        p = self.residual_printed < self.tolerance
        a = self.residual_alternate < self.tolerance
        return {(True, False): "-", (False, True): "+", (True, True): "both", (False, False): "neither"}[(p, a)]

    def format(self) -> str:
        return "\n".join(
            [
                f"correlation identity at t = {self.t:.6g}",
                f"  <N_A(t); N_S(t)>                 {self.lhs:.12g}",
                f"  RHS with -2<N_V(0);N_V(t)>      {self.rhs_printed:.12g}  residual {self.residual_printed:.3e}",
                f"  RHS with +2<N_V(0);N_V(t)>      {self.rhs_alternate:.12g}  residual {self.residual_alternate:.3e}",
                f"  unsymmetrized residuals          -: {abs(self.lhs_unsymmetrized - self.rhs_printed_unsymmetrized):.3e}"
                f"  +: {abs(self.lhs_unsymmetrized - self.rhs_alternate_unsymmetrized):.3e}",
                f"  edge population {self.edge_population:.3e}",
                f"  verdict: phonon memory term sign {self.verdict}",
            ]
        )


def _cross_time(ens: Ensemble, ens_t: Ensemble, ev: ExactEvolver, t: float, d0: np.ndarray, dt: np.ndarray):
    """``(<X(0) Y(t)>, <Y(t) X(0)>)`` for diagonal observables X, Y."""
    xy = yx = 0j
    for w, v, vt in zip(ens.weights, ens.vectors, ens_t.vectors):
        # <v| X U^+ Y U |v> = <U X v | Y U v>
        uxv = ev.apply(d0 * v, t)
        xy += w * np.vdot(uxv, dt * vt)
        yx += w * np.conj(np.vdot(uxv, dt * vt))
    return xy, yx


def correlation_identity_check(
    spec: RamanSystemSpec, initial: Ensemble, t: float, evolver: ExactEvolver | None = None, tolerance: float = 1e-6
) -> IdentityReport:
    space = initial.space
    ev = evolver or ExactEvolver(build_trilinear_hamiltonian(space, spec))
    nR, nS, nA, nV = (space.number(l) for l in ("R", "S", "A", "V"))
    ens_t = ev.evolve_ensemble(initial, t)

    def mean(e, d):
        return e.diagonal_expectation(d)

    def var(e, d):
        return e.diagonal_expectation(d * d) - e.diagonal_expectation(d) ** 2

    lhs = ens_t.diagonal_expectation(nA * nS) - mean(ens_t, nA) * mean(ens_t, nS)
    R_xy, R_yx = _cross_time(initial, ens_t, ev, t, nR, nR)
    V_xy, V_yx = _cross_time(initial, ens_t, ev, t, nV, nV)
    mR = mean(initial, nR) * mean(ens_t, nR)
    mV = mean(initial, nV) * mean(ens_t, nV)
    corr_R = (0.5 * (R_xy + R_yx)).real - mR
    corr_V = (0.5 * (V_xy + V_yx)).real - mV
    corr_R_u = R_xy.real - mR
    corr_V_u = V_xy.real - mV
    base = var(initial, nR) - var(initial, nV) + var(ens_t, nR) - var(ens_t, nV)
    terms = {
        "V(N_R(0))": var(initial, nR),
        "V(N_V(0))": var(initial, nV),
        "V(N_R(t))": var(ens_t, nR),
        "V(N_V(t))": var(ens_t, nV),
        "<N_R(0);N_R(t)>": corr_R,
        "<N_V(0);N_V(t)>": corr_V,
    }
    edge = max(initial.max_edge_population(), ens_t.max_edge_population())
    _warn_edge(edge)
    return IdentityReport(
        float(t),
        float(lhs),
        0.25 * (base - 2 * corr_R - 2 * corr_V),
        0.25 * (base - 2 * corr_R + 2 * corr_V),
        float(lhs),
        0.25 * (base - 2 * corr_R_u - 2 * corr_V_u),
        0.25 * (base - 2 * corr_R_u + 2 * corr_V_u),
        edge,
        tolerance,
        terms,
    )


QUANTITIES = ("n_S", "n_A", "corr_SA", "V_S", "V_A")


def oracle_scattered_moments(ens_t: Ensemble) -> dict[str, float]:
    space = ens_t.space
    nS, nA = space.number("S"), space.number("A")
    mS, mA = ens_t.diagonal_expectation(nS), ens_t.diagonal_expectation(nA)
    return {
        "n_S": mS,
        "n_A": mA,
        "corr_SA": ens_t.diagonal_expectation(nS * nA) - mS * mA,
        "V_S": ens_t.diagonal_expectation(nS * nS) - mS**2,
        "V_A": ens_t.diagonal_expectation(nA * nA) - mA**2,
    }


@dataclass
class CrosscheckReport:
    t: float
    route: str
    oracle: dict
    model: dict
    edge_population: float
    floor: float = 1e-12

    def residual(self, key: str) -> float:
        o, m = self.oracle[key], self.model[key]
        return abs(o - m) / max(abs(o), self.floor)

    @property
    def max_relative_residual(self) -> float:
        return max(self.residual(k) for k in QUANTITIES)

    def format(self) -> str:
        lines = [f"Gaussian cross-check ({self.route}) at t = {self.t:.6g}"]
        for k in QUANTITIES:
            lines.append(f"  {k:8s} oracle {self.oracle[k]:.12g}  model {self.model[k]:.12g}  rel {self.residual(k):.3e}")
        lines.append(f"  edge population {self.edge_population:.3e}")
        return "\n".join(lines)


def gaussian_crosscheck(
    spec: RamanSystemSpec,
    phonon: SqueezedThermalSpec,
    t: float,
    cutoffs=(8, 8, 12),
    phase_average: bool = True,
    rpa: bool | None = None,
) -> CrosscheckReport:
    """Compare scattered-mode moments of the linear route with exact evolution.

    With ``phase_average`` the oracle averages over four squeezing phases and is
    compared with the number-diagonal (RPA) formulas; otherwise a fixed-phase
    squeezed thermal phonon is compared with the full Gaussian propagation.
    """
    if spec.n_phonons != 1:
        raise ConfigurationError("oracle cross-check supports a single phonon mode")
    space = TruncatedSpace(("S", "A", "V"), cutoffs)
    ens = effective_initial_ensemble(space, phonon, PHASES if phase_average else None)
    ev = ExactEvolver(build_effective_hamiltonian(space, spec))
    ens_t = ev.evolve_ensemble(ens, t)
    oracle = oracle_scattered_moments(ens_t)
    edge = max(ens.max_edge_population(), ens_t.max_edge_population())
    _warn_edge(edge)

    prop = propagator_at(eigendecompose(build_matrix(spec)), t)
    if rpa is None:
        rpa = phase_average
    if rpa:
        stats = DiagonalPhononStatistics.from_squeezed_thermal(phonon)
        VS, VA = intensity_variances(prop, stats)
        model = {
            "n_S": stokes_intensity(prop, stats),
            "n_A": antistokes_intensity(prop, stats),
            "corr_SA": stokes_antistokes_correlation(prop, stats),
            "V_S": VS,
            "V_A": VA,
        }
        route = "number-diagonal phonon, phase averaged"
    else:
        st = evolve_gaussian(prop, make_squeezed_thermal(phonon))
        model = {
            "n_S": mean_number(st, 0),
            "n_A": mean_number(st, 1),
            "corr_SA": number_cross_correlation(st, 0, 1),
            "V_S": number_variance(st, 0),
            "V_A": number_variance(st, 1),
        }
        route = f"Gaussian, squeezing phase {phonon.theta:.6g}"
    return CrosscheckReport(float(t), route, oracle, model, edge)


def pump_moments_exact(spec: RamanSystemSpec, n_bar_V: float, times, cutoffs, evolver=None):
    """Exact pump mean and variance on the trilinear model for each time."""
    space = TruncatedSpace(("R", "S", "A", "V"), cutoffs)
    ens = trilinear_initial_ensemble(space, complex(spec.pump_alpha or 0), n_bar_V)
    ev = evolver or ExactEvolver(build_trilinear_hamiltonian(space, spec))
    nR = space.number("R")
    out = []
    for t in times:
        e = ev.evolve_ensemble(ens, t)
        m = e.diagonal_expectation(nR)
        out.append((m, e.diagonal_expectation(nR * nR) - m * m))
    m0 = ens.diagonal_expectation(nR)
    return (m0, ens.diagonal_expectation(nR * nR) - m0 * m0), np.array(out)
