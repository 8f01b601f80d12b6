"""Short-time behaviour of the quantized pump and validity of the classical-pump picture.

``pump_moments_short_time`` reproduces the published t^2 expansion verbatim.
``pump_moments_second_order`` is the exact second-order Taylor expansion for
vacuum Stokes / anti-Stokes modes and a number-diagonal phonon, derived from
``d^2/dt^2 <O> = -<[H, [H, O]]>``; the two differ (see their docstrings).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PumpExpansion",
    "pump_moments_short_time",
    "pump_moments_second_order",
    "validity_ranges",
    "TIME_CONVENTION",
]

TIME_CONVENTION = (
    "tau = 1/|M|^2 evaluated numerically with |M| in Hz and the result read as seconds "
    "(dimensionally inconsistent; reproduces the quoted 10 fs / 2.5 fs)"
)


@dataclass(frozen=True)
class PumpExpansion:
    """``mean(t) = n_R0 + mean_t2 t^2`` and ``var(t) = V_R0 + var_t2 t^2``."""

    n_R0: float
    V_R0: float
    mean_t2: float
    var_t2: float

    def __call__(self, t):
        return self.n_R0 + self.mean_t2 * t**2, self.V_R0 + self.var_t2 * t**2


def pump_moments_short_time(M_S, M_A, n_R, n_V, n_S=0.0, t=0.0, V_R=None):
    """Published t^2 expansion of the pump mean and variance.

    ``V_R`` defaults to ``n_R`` (coherent pump). ``n_S`` is kept as printed;
    it vanishes for a vacuum Stokes mode, which drops the anti-Stokes
    depletion term from the mean. The printed variance coefficient does not
    match exact evolution either (a coherent pump stays Poissonian to this
    order), so this form is only accurate to O(t^2) in general.
    """
    exp = published_expansion(M_S, M_A, n_R, n_V, n_S, V_R)
    return exp(t)


def published_expansion(M_S, M_A, n_R, n_V, n_S=0.0, V_R=None) -> PumpExpansion:
    V = n_R if V_R is None else V_R
    s, a = abs(M_S) ** 2, abs(M_A) ** 2
    mean_t2 = -(s * n_R * (1 + n_V) + a * n_R * n_S)
    var_t2 = 2 * (s * (V * (1 + n_V) + n_R * (1 + n_V)) + a * (V * n_V - n_R * n_V))
    return PumpExpansion(n_R, V, mean_t2, var_t2)


def pump_moments_second_order(M_S, M_A, n_R, n_V, t=0.0, V_R=None) -> tuple[float, float]:
    """Exact O(t^2) pump mean and variance.

    Stokes and anti-Stokes start in vacuum, the phonon is number-diagonal and
    independent of the pump. With ``k = |M_S|^2 (1 + n_V) + |M_A|^2 n_V``:

        mean(t) = n_R - k n_R t^2
        var(t)  = V_R - k (2 V_R - n_R) t^2
    """
    V = n_R if V_R is None else V_R
    k = abs(M_S) ** 2 * (1 + n_V) + abs(M_A) ** 2 * n_V
    return PumpExpansion(n_R, V, -k * n_R, -k * (2 * V - n_R))(t)


def validity_ranges(M_S, M_A, n_V) -> tuple[float, float]:
    """``(tau1, tau2)``: times over which the pump intensity and its variance
    stay close to their initial values."""
    s, a = abs(M_S) ** 2, abs(M_A) ** 2
    if s == 0:
        raise DomainError("validity ranges need a nonzero Stokes coupling")
    if n_V < 0:
        raise DomainError("phonon occupation must be nonnegative")
    tau1 = 1.0 / (s * (1 + n_V) + a * n_V)
    tau2 = 1.0 / (4 * s * (1 + n_V))
    return tau1, tau2
