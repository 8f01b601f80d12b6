"""Closed-form solution of the single-phonon parametric model.

Eigenvalues ``E_l`` solve a cubic, the field operators are

    a_S^+(t) = sum_l P_l A_l exp(i E_l t),   a_A(t) = sum_l Q_l A_l exp(i E_l t),
    a_V(t)   = sum_l A_l exp(i E_l t),

and the operator amplitudes ``A_l`` follow from Cramer's rule. The same cubic
is also obtained from the dynamical matrix (eigenvalue ``lambda = -E``);
``compare_cubics`` reports any mismatch between the two routes.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .dynamics import Propagator, build_matrix
from .errors import AnalyticFormulaInapplicable, DegenerateParametersError, DomainError
from .modes import RamanSystemSpec

__all__ = [
    "CubicSolution",
    "ModeWeights",
    "CubicComparison",
    "solve_cubic",
    "paper_cubic",
    "matrix_cubic",
    "compare_cubics",
    "mode_weights",
    "closed_form_propagator",
]


@dataclass(frozen=True)
class CubicSolution:
    """Monic cubic ``E^3 + c2 E^2 + c1 E + c0`` and its roots."""

    c2: float
    c1: float
    c0: float
    roots: tuple[complex, complex, complex]

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return self.c2, self.c1, self.c0

    def vieta_residual(self) -> float:
        r1, r2, r3 = self.roots
        scale = max(1.0, *(abs(c) for c in self.coefficients))
        res = (
            abs(r1 + r2 + r3 + self.c2),
            abs(r1 * r2 + r1 * r3 + r2 * r3 - self.c1),
            abs(r1 * r2 * r3 + self.c0),
        )
        return max(res) / scale


def _cbrt(z: complex) -> complex:
    if z == 0:
        return 0j
    if isinstance(z, float) or z.imag == 0:
        x = z.real
        return complex(np.sign(x) * abs(x) ** (1 / 3))
    return cmath.exp(cmath.log(z) / 3)


def _polish(c2, c1, c0, x):
    p = ((x + c2) * x + c1) * x + c0
    dp = (3 * x + 2 * c2) * x + c1
    return x - p / dp if dp != 0 else x


def solve_cubic(c2, c1, c0) -> tuple[complex, complex, complex]:
    """Roots of ``E^3 + c2 E^2 + c1 E + c0`` (Cardano / trigonometric form,
    one Newton step per root), sorted by real then imaginary part."""
    shift = -c2 / 3
    p = c1 - c2 * c2 / 3
    q = 2 * c2**3 / 27 - c2 * c1 / 3 + c0
    real = all(isinstance(c, (int, float)) or np.isrealobj(c) for c in (c2, c1, c0))
    disc = (q / 2) ** 2 + (p / 3) ** 3
    if real and p < 0 and disc <= 0:
        m = 2 * np.sqrt(-p / 3)
        arg = np.clip(3 * q / (p * m), -1.0, 1.0)
        phi = np.arccos(arg) / 3
        ys = [m * np.cos(phi - 2 * np.pi * k / 3) for k in range(3)]
        roots = [complex(y + shift) for y in ys]
    else:
        s = cmath.sqrt(disc)
        u = _cbrt(-q / 2 + s) if abs(-q / 2 + s) >= abs(-q / 2 - s) else _cbrt(-q / 2 - s)
        omega = complex(-0.5, np.sqrt(3) / 2)
        roots = []
        for k in range(3):
            uk = u * omega**k
            vk = -p / (3 * uk) if uk != 0 else 0j
            roots.append(uk + vk + shift)
    roots = [_polish(c2, c1, c0, complex(r)) for r in roots]
    roots.sort(key=lambda z: (z.real, z.imag))
    return tuple(roots)


def paper_cubic(omega_R, omega_V, gS, gA) -> CubicSolution:
    """Cubic with the published coefficients."""
    if not omega_R > omega_V > 0:
        raise DomainError("need omega_R > omega_V > 0")
    s, a = abs(gS) ** 2, abs(gA) ** 2
    c2 = 3 * omega_V
    c1 = -(omega_R**2 - 3 * omega_V**2 + (a - s))
    c0 = s * (omega_R + omega_V) + a * (omega_R - omega_V) + omega_V * (omega_V**2 - omega_R**2)
    return CubicSolution(c2, c1, c0, solve_cubic(c2, c1, c0))


def _resonant_spec(spec: RamanSystemSpec) -> tuple[float, float, complex, complex]:
    if spec.n_phonons != 1 or spec.omega_R is None:
        raise DomainError("closed-form route needs one phonon mode and omega_R")
    v = spec.vibrations[0]
    tol = 1e-12 * spec.omega_R
    if abs(spec.omega_S - (spec.omega_R - v.omega_V)) > tol or abs(spec.omega_A - (spec.omega_R + v.omega_V)) > tol:
        raise DomainError("closed-form route assumes omega_S = omega_R - omega_V and omega_A = omega_R + omega_V")
    return spec.omega_R, v.omega_V, v.g_S, v.g_A


def matrix_cubic(spec: RamanSystemSpec) -> CubicSolution:
    """Cubic obtained by expanding ``det(M - lambda I)`` and substituting ``lambda = -E``."""
    _resonant_spec(spec)
    M = build_matrix(spec).M
    # det(lambda I - M) = lambda^3 - tr lambda^2 + m2 lambda - det
    tr = np.trace(M)
    m2 = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] + M[0, 0] * M[2, 2] - M[0, 2] * M[2, 0] + M[1, 1] * M[2, 2] - M[1, 2] * M[2, 1]
    det = np.linalg.det(M)
    # lambda = -E:  -E^3 - tr E^2 - m2 E - det = 0
    c2, c1, c0 = (float(x.real) for x in (tr, m2, det))
    return CubicSolution(c2, c1, c0, solve_cubic(c2, c1, c0))


@dataclass(frozen=True)
class CubicComparison:
    published: CubicSolution
    matrix: CubicSolution
    coefficient_difference: tuple[float, float, float]
    max_root_distance: float
    tolerance: float

    @property
    def discrepancy(self) -> bool:
        scale = max(1.0, *(abs(c) for c in self.matrix.coefficients))
        return max(abs(d) for d in self.coefficient_difference) > self.tolerance * scale

    def format(self) -> str:
        lines = ["cubic comparison (E^3 + c2 E^2 + c1 E + c0)"]
        for name, sol in (("published", self.published), ("matrix", self.matrix)):
            lines.append(f"  {name:9s} c2={sol.c2:.15g} c1={sol.c1:.15g} c0={sol.c0:.15g}")
        d = self.coefficient_difference
        lines.append(f"  difference c2={d[0]:.3g} c1={d[1]:.3g} c0={d[2]:.3g}")
        lines.append(f"  max root distance {self.max_root_distance:.3g}")
        lines.append(f"  verdict: {'DISCREPANCY' if self.discrepancy else 'agree'}")
        return "\n".join(lines)


def compare_cubics(spec: RamanSystemSpec, tolerance: float = 1e-12) -> CubicComparison:
    wR, wV, gS, gA = _resonant_spec(spec)
    pub = paper_cubic(wR, wV, gS, gA)
    mat = matrix_cubic(spec)
    diff = tuple(a - b for a, b in zip(pub.coefficients, mat.coefficients))
    dist = max(min(abs(r - s) for s in mat.roots) for r in pub.roots)
    return CubicComparison(pub, mat, diff, dist, tolerance)


@dataclass(frozen=True, eq=False)
class ModeWeights:
    P: np.ndarray
    Q: np.ndarray
    D: np.ndarray

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.D))


def mode_weights(E, omega_R, omega_V, gS, gA) -> ModeWeights:
    if gS == 0 or gA == 0:
        raise AnalyticFormulaInapplicable("closed-form weights divide by g_S and g_A; use the numerical route")
    E = np.asarray(E, dtype=complex)
    s, a = abs(gS) ** 2, abs(gA) ** 2
    P = -((E + omega_V) * (E + omega_R + omega_V) + s - a) / (2 * gS * omega_R)
    Q = -(gS * P + E + omega_V) / np.conj(gA)
    D = np.vstack([np.ones(3, complex), P, Q])
    return ModeWeights(P, Q, D)


def closed_form_propagator(weights: ModeWeights, E, t: float) -> Propagator:
    """Propagator in the standard ``(a_S^+, a_A, a_V)`` basis, built by Cramer's rule."""
    D = weights.D
    det = np.linalg.det(D)
    if abs(det) < 1e-12:
        raise DegenerateParametersError(f"|det D| = {abs(det):.3g}: closed form is singular")
    E = np.asarray(E, dtype=complex)
    # A_l = det(D_l)/det(D) as a linear map on (a_V, a_S^+, a_A)
    cramer = np.empty((3, 3), dtype=complex)
    for l in range(3):
        for k in range(3):
            Dl = D.copy()
            Dl[:, l] = np.eye(3)[k]
            cramer[l, k] = np.linalg.det(Dl) / det
    X = (D * np.exp(1j * E * t)) @ cramer  # rows/cols ordered (a_V, a_S^+, a_A)
    perm = [1, 2, 0]
    S = X[np.ix_(perm, perm)]
    rate = float(np.abs(E.imag).max())
    return Propagator(float(t), S, np.diag([-1.0, 1.0, 1.0]), rate, rate > 1e-9 * max(1.0, np.abs(E).max()))
