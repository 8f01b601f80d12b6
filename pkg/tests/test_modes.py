import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from raman_correlate.errors import ConfigurationError, DomainError
from raman_correlate.modes import (
    RamanSystemSpec,
    SqueezedThermalSpec,
    UnitConvention,
    VibrationMode,
    bose_einstein_mean,
    effective_couplings,
    validate_spec,
)


def test_validate_flags_negative_frequency():
    spec = RamanSystemSpec((VibrationMode(1.0, 0.1, 0.1),), omega_S=-1.0, omega_A=2.0)
    assert any("nonpositive frequency" in p for p in validate_spec(spec))


def test_validate_flags_missing_vibrations():
    spec = RamanSystemSpec((), omega_S=1.0, omega_A=2.0)
    assert any("no vibration modes" in p for p in validate_spec(spec))


def test_validate_accepts_well_formed_spec(generic_spec):
    assert validate_spec(generic_spec) == []


def test_resonance_defaults():
    spec = RamanSystemSpec.single_mode(1.5, 0.1, 0.1, omega_R=10.0)
    assert spec.omega_S == 8.5 and spec.omega_A == 11.5


def test_single_pump_mode_coupling():
    g = effective_couplings({(0, "S", 0): 2.0, (0, "A", 0): 2.0}, {0: 3j})
    assert g[0] == (6j, 6j)


def test_zero_amplitudes_give_zero_couplings():
    g = effective_couplings({(0, "S", 0): 1.3, (1, "A", 0): -0.2}, {0: 0, 1: 0})
    assert g[0] == (0, 0)


def test_two_pump_modes_cancel():
    g = effective_couplings({(0, "S", 0): 1.0, (1, "S", 0): 1.0}, {0: 1.0, 1: -1.0})
    assert g[0][0] == 0


def test_missing_pump_amplitude_names_mode():
    with pytest.raises(ConfigurationError, match="'k7'"):
        effective_couplings({("k7", "S", 0): 1.0}, {})


cplx = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@given(cplx, cplx, cplx, cplx)
def test_couplings_linear_in_amplitudes(m1, m2, a1, a2):
    bare = {(0, "S", 0): m1, (1, "A", 0): m2, (1, "S", 0): m2}
    ga = effective_couplings(bare, {0: a1, 1: 0})[0]
    gb = effective_couplings(bare, {0: 0, 1: a2})[0]
    gab = effective_couplings(bare, {0: a1, 1: a2})[0]
    for x, y, z in zip(ga, gb, gab):
        assert abs(x + y - z) <= 1e-12 * (1 + abs(z))


def test_bose_einstein_reference_values():
    # 1/(e - 1) to 30 digits: 0.581976706869326424385002005109
    assert abs(bose_einstein_mean(1.0, 1.0) - 0.581976706869326) < 1e-6
    assert bose_einstein_mean(3.0, 0.0) == 0.0
    assert bose_einstein_mean(math.log(2), 1.0) == pytest.approx(1.0, abs=1e-15)


def test_bose_einstein_monotone():
    T = np.linspace(0.05, 20, 200)
    n = bose_einstein_mean(1.0, T)
    assert np.all(np.diff(n) > 0)
    w = np.linspace(0.05, 20, 200)
    assert np.all(np.diff(bose_einstein_mean(w, 1.0)) < 0)


def test_bose_einstein_domain():
    with pytest.raises(DomainError):
        bose_einstein_mean(0.0, 1.0)
    with pytest.raises(DomainError):
        bose_einstein_mean(1.0, -1.0)


def test_squeezed_spec_validation():
    with pytest.raises(DomainError):
        SqueezedThermalSpec(-0.1, 0.0)
    assert SqueezedThermalSpec(0.0, 0.1, 7.0).theta == pytest.approx(7.0 - 2 * math.pi)


def test_unit_convention():
    assert "K" in UnitConvention().describe()
    with pytest.raises(ValueError):
        UnitConvention("eV")
