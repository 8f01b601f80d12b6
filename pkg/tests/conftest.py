import numpy as np
import pytest

from raman_correlate import RamanSystemSpec, VibrationMode


def random_spec(rng, n_phonons=None, stable=True):
    """Random multi-phonon spec; ``stable`` keeps couplings weak enough for real
    normal-mode frequencies most of the time (not guaranteed)."""
    n = n_phonons or int(rng.integers(1, 5))
    scale = 0.15 if stable else 1.0
    vibs = tuple(
        VibrationMode(
            float(rng.uniform(0.5, 2.0)),
            complex(*rng.normal(scale=scale, size=2)),
            complex(*rng.normal(scale=scale, size=2)),
        )
        for _ in range(n)
    )
    return RamanSystemSpec(vibs, omega_S=float(rng.uniform(0.5, 3)), omega_A=float(rng.uniform(0.5, 3)))


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture
def generic_spec():
    return RamanSystemSpec.single_mode(1.0, 0.3, 0.25, omega_S=1.3, omega_A=1.7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT):
            terminalreporter.write_line(line)
