"""Scenario execution for the command-line front end."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from . import dynamics as dyn
from .config import ConfigError, ScenarioConfig
from .errors import DomainError
from .gaussian import DiagonalPhononStatistics, squeezed_thermal_statistics
from .modes import RamanSystemSpec, SqueezedThermalSpec, UnitConvention, VibrationMode, bose_einstein_mean, effective_couplings, validate_spec
from .oracle.checks import (
    correlation_identity_check,
    gaussian_crosscheck,
    manley_rowe_check,
    trilinear_initial_ensemble,
)
from .oracle.space import TruncatedSpace
from .polariton import PolaritonSpec, g2_vs_temperature
from .pump import TIME_CONVENTION, validity_ranges
from .results import SweepResult
from .three_mode import closed_form_propagator, compare_cubics, mode_weights

__all__ = [
    "system_from_config",
    "phonons_from_config",
    "run_dynamics",
    "run_polariton",
    "run_validity",
    "run_verify",
    "VerifyOutcome",
]

VARIANCE_FLOOR = 1e-20  # below this a variance is round-off of an exact zero
_INDEXED = re.compile(r"^(omega_V|g_S|g_A)(?:_(\d+))?$")
SYSTEM_KEYS = {"omega_S", "omega_A", "omega_R", "M_S", "M_A", "alpha", "energy_unit", "rotating_frame",
               "omega_k", "omega_b", "g_k"}
PHONON_KEYS = {"n_bar", "T", "r", "theta", "mode", "n_V"}
SWEEP_KEYS = {"t_start", "t_stop", "t_steps", "T_start", "T_stop", "T_steps", "T_spacing",
              "n_V_start", "n_V_stop", "n_V_steps"}
ORACLE_KEYS = {"cutoff_R", "cutoff_S", "cutoff_A", "cutoff_V", "eff_cutoff_S", "eff_cutoff_A", "eff_cutoff_V",
               "t", "t_stop", "t_steps", "t_eff", "n_bar", "tolerance", "crosscheck_tolerance"}


def _allowed(cfg: ScenarioConfig) -> dict[str, set[str]]:
    system = set(SYSTEM_KEYS) | {k for k in cfg.section("system") if _INDEXED.match(k)}
    return {"system": system, "phonons": PHONON_KEYS, "sweep": SWEEP_KEYS, "oracle": ORACLE_KEYS}


def _flag(cfg, section, key) -> bool:
    v = cfg.get(section, key, default="no", kind=str).lower()
    if v not in ("yes", "no", "true", "false"):
        raise ConfigError(f"{cfg.where(section, key)} must be \"yes\" or \"no\"")
    return v in ("yes", "true")


def system_from_config(cfg: ScenarioConfig) -> RamanSystemSpec:
    cfg.check_keys(_allowed(cfg))
    sec = cfg.section("system")
    modes: dict[int, dict[str, complex]] = {}
    for key in sec:
        m = _INDEXED.match(key)
        if m:
            idx = int(m.group(2) or 1)
            kind = float if m.group(1) == "omega_V" else complex
            modes.setdefault(idx, {})[m.group(1)] = cfg.get("system", key, kind=kind)
    if sorted(modes) != list(range(1, len(modes) + 1)):
        raise ConfigError("vibration modes must be numbered consecutively from 1")
    vibs = []
    for idx in sorted(modes):
        d = modes[idx]
        if "omega_V" not in d:
            raise ConfigError(f"vibration mode {idx} has no omega_V")
        vibs.append(VibrationMode(d["omega_V"], d.get("g_S", 0j), d.get("g_A", 0j)))
    opt = lambda k, kind=float: cfg.get("system", k, kind=kind) if cfg.has("system", k) else None
    MS, MA, alpha = opt("M_S", complex), opt("M_A", complex), opt("alpha", complex)
    if vibs and alpha is not None and len(vibs) == 1 and "g_S" not in modes[1] and "g_A" not in modes[1]:
        # effective couplings from the single-mode pump amplitude
        g = effective_couplings({(0, "S", 0): MS or 0, (0, "A", 0): MA or 0}, {0: alpha})[0]
        vibs[0] = VibrationMode(vibs[0].omega_V, *g)
    try:
        units = UnitConvention(cfg.get("system", "energy_unit", default="K", kind=str))
    except Exception as exc:
        raise ConfigError(str(exc)) from None
    spec = RamanSystemSpec(
        tuple(vibs), opt("omega_S"), opt("omega_A"), opt("omega_R"), MS, MA, alpha, units
    )
    problems = validate_spec(spec)
    if problems:
        raise ConfigError("invalid system: " + "; ".join(problems))
    return spec


def phonons_from_config(cfg: ScenarioConfig, spec: RamanSystemSpec) -> tuple[DiagonalPhononStatistics, SqueezedThermalSpec, int]:
    """Per-mode number statistics, the squeezed-thermal spec of the designated
    mode, and the designated mode index."""
    r = cfg.get("phonons", "r", default=0.0)
    theta = cfg.get("phonons", "theta", default=0.0)
    mode = cfg.get("phonons", "mode", default=0, kind=int)
    if not 0 <= mode < spec.n_phonons:
        raise ConfigError(f"{cfg.where('phonons', 'mode')} out of range")
    if cfg.has("phonons", "n_bar") == cfg.has("phonons", "T"):
        raise ConfigError("[phonons] needs exactly one of n_bar or T")
    if cfg.has("phonons", "T"):
        nb = np.atleast_1d(bose_einstein_mean(spec.omega_V, cfg.get("phonons", "T")))
    else:
        nb = np.full(spec.n_phonons, cfg.get("phonons", "n_bar"))
    try:
        specs = [SqueezedThermalSpec(float(n), r, theta) for n in nb]
    except DomainError as exc:
        raise ConfigError(str(exc)) from None
    mean, var = squeezed_thermal_statistics(nb, r)
    return DiagonalPhononStatistics(mean, var), specs[mode], mode


def _grid(cfg, prefix, default_steps=None, spacing="linear"):
    start = cfg.get("sweep", f"{prefix}_start")
    stop = cfg.get("sweep", f"{prefix}_stop")
    steps = cfg.get("sweep", f"{prefix}_steps", default=default_steps, kind=int)
    if steps < 1:
        raise ConfigError(f"{cfg.where('sweep', prefix + '_steps')} must be positive")
    if spacing == "log":
        if start <= 0 or stop <= 0:
            raise ConfigError("log spacing needs positive bounds")
        return np.geomspace(start, stop, steps)
    return np.linspace(start, stop, steps)


def _base_metadata(spec: RamanSystemSpec) -> dict[str, str]:
    return {"units": spec.units.describe()}


def run_dynamics(cfg: ScenarioConfig) -> SweepResult:
    spec = system_from_config(cfg)
    stats, _, mode = phonons_from_config(cfg, spec)
    rotating = _flag(cfg, "system", "rotating_frame")
    times = _grid(cfg, "t", default_steps=101)
    dec = dyn.eigendecompose(dyn.build_matrix(spec, rotating_frame=rotating))
    out = SweepResult(
        ("t", "n_S", "n_A", "corr_SA", "C_cross", "Aprime", "Bprime", "Cprime"),
        metadata=_base_metadata(spec)
        | {
            "model": "effective parametric Hamiltonian, static couplings"
            + (", rotating frame (omega_S,A shifted by -omega_R)" if rotating else ""),
            "phonons": f"number-diagonal (random phase), designated mode index {mode}",
            "C_cross": f"written as 0 where a scattered-mode variance is below {VARIANCE_FLOOR:g}",
            "eigenvector_condition": f"{dec.condition:.6g}",
        },
    )
    if dyn.propagator_at(dec, 0.0).unstable:
        out.metadata["instability"] = f"complex normal-mode frequencies, growth rate {dec.growth_rate:.6g}"
    for t in times:
        prop = dyn.propagator_at(dec, t)
        c = dyn.correlation_coefficients(prop, stats, mode)
        corr = dyn.stokes_antistokes_correlation(prop, stats, mode)
        VS, VA = dyn.intensity_variances(prop, stats, mode)
        cross = corr / np.sqrt(VS * VA) if min(VS, VA) > VARIANCE_FLOOR else 0.0
        out.append(
            t,
            dyn.stokes_intensity(prop, stats, mode),
            dyn.antistokes_intensity(prop, stats, mode),
            corr,
            cross,
            c.A,
            c.B,
            c.C,
        )
    return out


def run_polariton(cfg: ScenarioConfig) -> SweepResult:
    cfg.check_keys(_allowed(cfg))
    Omega = cfg.get("system", "omega_b")
    g = cfg.get("system", "g_k")
    wk = cfg.get("system", "omega_k", default=Omega)
    spacing = cfg.get("sweep", "T_spacing", default="linear", kind=str)
    if spacing not in ("linear", "log"):
        raise ConfigError(f"{cfg.where('sweep', 'T_spacing')} must be \"linear\" or \"log\"")
    grid = _grid(cfg, "T", default_steps=100, spacing=spacing)
    res = g2_vs_temperature(PolaritonSpec(wk, Omega, g), grid)
    res.metadata["parameter_mapping"] = (
        "resonant (omega_k = omega_b)" if wk == Omega else f"detuned, omega_k = {wk!r}"
    )
    res.metadata["units"] = UnitConvention(cfg.get("system", "energy_unit", default="K", kind=str)).describe()
    return res


def run_validity(cfg: ScenarioConfig) -> SweepResult:
    cfg.check_keys(_allowed(cfg))
    MS = cfg.get("system", "M_S", kind=complex)
    MA = cfg.get("system", "M_A", default=0j, kind=complex)
    grid = _grid(cfg, "n_V", default_steps=11)
    if np.any(grid < 0):
        raise ConfigError("phonon occupations must be nonnegative")
    out = SweepResult(("n_V", "tau1", "tau2"), metadata={"time_convention": TIME_CONVENTION})
    for n in grid:
        out.append(n, *validity_ranges(MS, MA, n))
    return out


@dataclass
class VerifyOutcome:
    passed: bool
    report: str
    checks: dict[str, bool] = field(default_factory=dict)


def _oracle_cutoffs(cfg, prefix, labels, defaults):
    return tuple(cfg.get("oracle", f"{prefix}{l}", default=d, kind=int) for l, d in zip(labels, defaults))


def run_verify(cfg: ScenarioConfig) -> VerifyOutcome:
    spec = system_from_config(cfg)
    if not cfg.section("oracle"):
        raise ConfigError("verify needs an [oracle] section")
    if spec.omega_R is None:
        raise ConfigError("verify needs omega_R for the trilinear oracle")
    tol = cfg.get("oracle", "tolerance", default=1e-8)
    xtol = cfg.get("oracle", "crosscheck_tolerance", default=1e-5)
    nbar = cfg.get("oracle", "n_bar", default=0.0) if cfg.has("oracle", "n_bar") else 0.0
    lines, checks = [], {}

    # trilinear model: Manley-Rowe and the correlation identity
    cut = _oracle_cutoffs(cfg, "cutoff_", "RSAV", (10, 10, 10, 20))
    space = TruncatedSpace(("R", "S", "A", "V"), cut)
    alpha = complex(spec.pump_alpha or 0)
    ens = trilinear_initial_ensemble(space, alpha, nbar)
    t_id = cfg.get("oracle", "t")
    t_grid = np.linspace(0.0, cfg.get("oracle", "t_stop", default=t_id), cfg.get("oracle", "t_steps", default=6, kind=int))
    from .oracle.evolution import ExactEvolver
    from .oracle.hamiltonians import build_trilinear_hamiltonian

    ev = ExactEvolver(build_trilinear_hamiltonian(space, spec))
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        mr = manley_rowe_check(spec, ens, t_grid, ev)
        ident = correlation_identity_check(spec, ens, t_id, ev)
    checks["manley_rowe"] = mr.max_drift < tol and not mr.inconclusive
    lines += [f"trilinear oracle: {space!r}, pump alpha = {alpha}, phonon n_bar = {nbar}", mr.format(), ""]
    id_edge_ok = ident.edge_population <= 1e-6
    checks["correlation_identity"] = ident.verdict != "neither" and id_edge_ok
    lines += [ident.format() + ("" if id_edge_ok else "  [INCONCLUSIVE TRUNCATION]"), ""]

    # effective model: Gaussian / number-diagonal routes against exact evolution
    _, phon, _ = phonons_from_config(cfg, spec) if cfg.section("phonons") else (None, SqueezedThermalSpec(0.0), 0)
    t_eff = cfg.get("oracle", "t_eff", default=t_id)
    ecut = _oracle_cutoffs(cfg, "eff_cutoff_", "SAV", (8, 8, 30))
    single = RamanSystemSpec(spec.vibrations[:1], spec.omega_S, spec.omega_A, spec.omega_R, units=spec.units)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        runs = [("phase-averaged", True), ("fixed phase", False)]
        for name, avg in runs:
            rep = gaussian_crosscheck(single, phon, t_eff, ecut, phase_average=avg)
            rep2 = gaussian_crosscheck(single, phon, t_eff, tuple(2 * c for c in ecut), phase_average=avg)
            gate = max(abs(rep.oracle[k] - rep2.oracle[k]) / max(abs(rep2.oracle[k]), 1e-12) for k in rep.oracle)
            ok = rep.max_relative_residual < xtol and gate < xtol and rep.edge_population <= 1e-6
            checks[f"gaussian_{name.replace(' ', '_').replace('-', '_')}"] = ok
            lines += [rep.format(), f"  cutoff doubling change {gate:.3e}" + ("" if ok else "  [FAIL]"), ""]

    # analytic single-phonon route
    v = spec.vibrations[0]
    try:
        cmp = compare_cubics(single)
        lines += [cmp.format()]
        if v.g_S != 0 and v.g_A != 0:
            w = mode_weights(cmp.published.roots, spec.omega_R, v.omega_V, v.g_S, v.g_A)
            num = dyn.propagator_at(dyn.eigendecompose(dyn.build_matrix(single)), t_eff)
            ana = closed_form_propagator(w, cmp.published.roots, t_eff)
            diff = float(np.abs(num.S - ana.S).max())
            checks["closed_form_propagator"] = diff < 1e-6
            lines.append(f"  closed-form vs numerical propagator max deviation {diff:.3e}")
        else:
            lines.append("  closed-form propagator skipped: it divides by g_S and g_A")
        eig = np.sort_complex(-np.linalg.eigvals(dyn.build_matrix(single).M))
        rd = max(min(abs(r - e) for e in eig) for r in cmp.published.roots)
        checks["cubic_roots"] = rd < 1e-8 * max(1.0, np.abs(eig).max())
        lines.append(f"  published roots vs dynamical-matrix eigenvalues (lambda = -E) max distance {rd:.3e}")
    except DomainError as exc:
        lines.append(f"analytic single-phonon route skipped: {exc}")
    lines.append("")
    passed = all(checks.values())
    lines.append("checks: " + ", ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in checks.items()))
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    return VerifyOutcome(passed, "\n".join(lines) + "\n", checks)
