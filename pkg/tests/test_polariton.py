import numpy as np
import pytest
import scipy.linalg as sla

from raman_correlate.errors import ConfigurationError, InstabilityError
from raman_correlate.modes import bose_einstein_mean
from raman_correlate.oracle import TruncatedSpace
from raman_correlate.polariton import (
    PolaritonSpec,
    detuning_for_plateau,
    diagonalize_polariton,
    g2_vs_temperature,
    thermal_phonon_moments,
    zero_temperature_g2,
)


def test_uncoupled_branches():
    m = diagonalize_polariton(PolaritonSpec(150.0, 200.0, 0.0))
    assert np.allclose(m.frequencies, [150.0, 200.0])
    assert np.allclose(m.T, np.eye(4))


def test_resonant_symplectic_residual():
    assert diagonalize_polariton(PolaritonSpec.resonant(200.0, 25.0)).symplectic_residual() < 1e-10


@pytest.mark.parametrize("wk, wb, g", [(200, 200, 25), (300, 200, 40), (120, 200, 10)])
def test_branches_match_characteristic_polynomial(wk, wb, g):
    # (x - wk^2)(x - wb^2) = 16 g^2 wk wb with x = w^2: the x-quadratic of the coupled dispersion
    b = wk**2 + wb**2
    c = wk**2 * wb**2 - 16 * g**2 * wk * wb
    x = np.sort(np.roots([1, -b, c]).real)
    got = diagonalize_polariton(PolaritonSpec(wk, wb, g)).frequencies
    assert np.allclose(got, np.sqrt(x), atol=1e-8)


def test_uncoupled_thermal_moments():
    m = diagonalize_polariton(PolaritonSpec(150.0, 200.0, 0.0))
    assert thermal_phonon_moments(m, np.inf) == (0.0, 0j)
    n, aa = thermal_phonon_moments(m, 1 / 80.0)
    assert n == pytest.approx(bose_einstein_mean(200.0, 80.0), rel=1e-12) and aa == 0


def test_thermal_moments_against_fock_trace():
    spec = PolaritonSpec.resonant(200.0, 25.0)
    T = 10.0
    space = TruncatedSpace(("a", "b"), (30, 30))
    a, b = space.annihilation("a"), space.annihilation("b")
    ad, bd = space.creation("a"), space.creation("b")
    H = 200.0 * (ad @ a) + 200.0 * (bd @ b) + 2j * 25.0 * ((ad - a) @ (bd + b))
    E, U = sla.eigh(H.toarray())
    p = np.exp(-(E - E[0]) / T)
    p /= p.sum()
    def avg(op):
        return complex(np.einsum("k,ik,ik->", p, U.conj(), op.toarray() @ U))
    n_ref, aa_ref = avg(bd @ b).real, avg(b @ b)
    n, aa = thermal_phonon_moments(diagonalize_polariton(spec), 1 / T)
    assert n == pytest.approx(n_ref, abs=1e-5)
    assert aa == pytest.approx(aa_ref, abs=1e-5)


def test_uncoupled_g2_is_two():
    res = g2_vs_temperature(PolaritonSpec(200.0, 200.0, 0.0), np.linspace(1, 2000, 30))
    assert np.all(res.column("G2") == 2.0)


def test_plateau_decays_toward_two():
    res = g2_vs_temperature(PolaritonSpec.resonant(200.0, 25.0), np.geomspace(1, 2000, 80))
    G = res.column("G2")
    assert G[0] > 2 and np.all(np.diff(G) <= 1e-12)
    assert G[0] == pytest.approx(zero_temperature_g2(PolaritonSpec.resonant(200.0, 25.0)), rel=1e-9)


def test_strong_coupling_is_unstable():
    with pytest.raises(InstabilityError):
        diagonalize_polariton(PolaritonSpec.resonant(200.0, 60.0))


def test_detuning_reaches_target():
    wk = detuning_for_plateau(200.0, 25.0, 8.0)
    assert zero_temperature_g2(PolaritonSpec(wk, 200.0, 25.0)) == pytest.approx(8.0, abs=1e-8)
    with pytest.raises(ConfigurationError):
        detuning_for_plateau(200.0, 25.0, 8.0, bracket=(1.0, 1.1))


def test_grid_validation():
    with pytest.raises(ConfigurationError):
        g2_vs_temperature(PolaritonSpec.resonant(200.0, 25.0), [5.0, 1.0])
