"""Pure-state ensembles on a truncated space and single-mode amplitude builders."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg as sla
from scipy.special import gammaln

from ..errors import DomainError
from .space import TruncatedSpace

__all__ = [
    "OracleState",
    "Ensemble",
    "thermal_weights",
    "coherent_amplitudes",
    "squeezed_fock_amplitudes",
    "WEIGHT_CUT",
]

WEIGHT_CUT = 1e-12


@dataclass(frozen=True, eq=False)
class OracleState:
    space: TruncatedSpace
    vector: np.ndarray

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def normalized(self) -> "OracleState":
        return OracleState(self.space, self.vector / self.norm)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.vector) ** 2

    def edge_population(self) -> dict[str, float]:
        """Probability on each mode's maximal-occupation slice."""
        p = self.probabilities()
        occ = self.space.occupation_table
        return {l: float(p[occ[:, i] == c].sum()) for i, (l, c) in enumerate(zip(self.space.labels, self.space.cutoffs))}


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Mixed state as a convex combination of normalized pure states."""

    space: TruncatedSpace
    weights: np.ndarray
    vectors: list = field(default_factory=list)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.size != len(self.vectors):
            raise DomainError("one weight per ensemble member")
        object.__setattr__(self, "weights", w / w.sum())

    @classmethod
    def pure(cls, space, vector):
        return cls(space, np.ones(1), [np.asarray(vector, complex) / np.linalg.norm(vector)])

    def __len__(self):
        return len(self.vectors)

    def members(self):
        return zip(self.weights, self.vectors)

    def expectation(self, op) -> complex:
        return complex(sum(w * np.vdot(v, op @ v) for w, v in self.members()))

    def diagonal_expectation(self, diag: np.ndarray) -> float:
        return float(sum(w * np.dot(np.abs(v) ** 2, diag) for w, v in self.members()))

    def edge_population(self) -> dict[str, float]:
        out = dict.fromkeys(self.space.labels, 0.0)
        for w, v in self.members():
            for k, p in OracleState(self.space, v).edge_population().items():
                out[k] += w * p
        return out

    def max_edge_population(self) -> float:
        return max(self.edge_population().values())


def thermal_weights(n_bar: float, tol: float = WEIGHT_CUT) -> np.ndarray:
    """Bose-Einstein occupation probabilities, truncated where they drop below ``tol``."""
    if n_bar < 0:
        raise DomainError("n_bar must be nonnegative")
    if n_bar == 0:
        return np.ones(1)
    q = n_bar / (1 + n_bar)
    m_max = max(0, int(math.ceil(math.log(tol * (1 + n_bar)) / math.log(q))))
    m = np.arange(m_max + 1)
    return q**m / (1 + n_bar)


def coherent_amplitudes(alpha: complex, cutoff: int) -> np.ndarray:
    """Fock amplitudes ``exp(-|alpha|^2/2) alpha^n / sqrt(n!)`` for ``n <= cutoff`` (not renormalized)."""
    n = np.arange(cutoff + 1)
    if alpha == 0:
        out = np.zeros(cutoff + 1, complex)
        out[0] = 1
        return out
    logmag = -0.5 * abs(alpha) ** 2 + n * math.log(abs(alpha)) - 0.5 * gammaln(n + 1)
    return np.exp(logmag) * np.exp(1j * n * np.angle(alpha))


@lru_cache(maxsize=64)
def _squeeze_matrix(r: float, theta: float, dim: int) -> np.ndarray:
    a = np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)
    xi = r * np.exp(1j * theta)
    return sla.expm(0.5 * (np.conj(xi) * a @ a - xi * a.conj().T @ a.conj().T))


def squeezed_fock_amplitudes(m: int, r: float, theta: float, cutoff: int, work_cutoff: int | None = None) -> np.ndarray:
    """Amplitudes of ``S(r e^{i theta}) |m>`` truncated to ``cutoff``.

    The squeeze operator is evaluated on a larger working space, so the only
    truncation left is the final projection.
    """
    if work_cutoff is None:
        work_cutoff = max(cutoff, m) + 80 + int(60 * abs(r))
    S = _squeeze_matrix(float(r), float(theta), work_cutoff + 1)
    return S[: cutoff + 1, m].copy()
