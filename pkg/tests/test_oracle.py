import numpy as np
import pytest

from raman_correlate.errors import ResourceError
from raman_correlate.modes import RamanSystemSpec, SqueezedThermalSpec, VibrationMode
from raman_correlate.oracle import (
    Ensemble,
    ExactEvolver,
    OracleState,
    TruncatedSpace,
    build_effective_hamiltonian,
    build_trilinear_hamiltonian,
    coherent_amplitudes,
    correlation_identity_check,
    evolve,
    expectation,
    gaussian_crosscheck,
    manley_rowe_check,
    thermal_weights,
    trilinear_initial_ensemble,
)


def trilinear(MS=0.1, MA=0.07, alpha=1.0):
    return RamanSystemSpec.single_mode(1.0, 0, 0, omega_R=10.0, bare_M_S=MS, bare_M_A=MA, pump_alpha=alpha)


def test_basis_bijection(rng):
    space = TruncatedSpace(("R", "S", "A", "V"), (7, 5, 4, 9))
    for i in rng.integers(0, space.dimension, 10_000):
        assert space.index(space.occupations(int(i))) == i


def test_dimension_cap():
    with pytest.raises(ResourceError):
        TruncatedSpace(("R", "S", "A", "V"), (30, 30, 30, 30))
    with pytest.raises(ResourceError):
        TruncatedSpace(("a",), (50,), max_dimension=10)


def test_uncoupled_trilinear_is_free_energy():
    space = TruncatedSpace(("R", "S", "A", "V"), (3, 2, 2, 3))
    spec = trilinear(0, 0)
    H = build_trilinear_hamiltonian(space, spec)
    expected = sum(w * space.number(l) for l, w in zip("RSAV", (10.0, 9.0, 11.0, 1.0)))
    assert np.array_equal(H.toarray(), np.diag(expected).astype(complex))


def test_trilinear_hermitian_and_ladder_element():
    MS = 0.3 + 0.2j
    space = TruncatedSpace(("R", "S", "A", "V"), (4, 3, 3, 4))
    H = build_trilinear_hamiltonian(space, trilinear(MS, 0.1))
    assert abs(H - H.conj().T).max() == 0
    nR, nS, nV = 3, 1, 2
    src = space.index((nR, nS, 0, nV))
    dst = space.index((nR - 1, nS + 1, 0, nV + 1))
    assert H[dst, src] == pytest.approx(MS * np.sqrt((nS + 1) * nR * (nV + 1)), abs=1e-15)


def test_effective_hamiltonian_structure():
    space = TruncatedSpace(("S", "A", "V"), (3, 3, 4))
    H0 = build_effective_hamiltonian(space, RamanSystemSpec.single_mode(1.0, 0, 0, omega_S=1.3, omega_A=1.7))
    assert (H0 - H0.multiply(np.eye(space.dimension, dtype=bool))).nnz == 0
    gS, gA = 0.4 - 0.1j, 0.2j
    H = build_effective_hamiltonian(space, RamanSystemSpec.single_mode(1.0, gS, gA, omega_S=1.3, omega_A=1.7))
    assert abs(H - H.conj().T).max() == 0
    # <1_S, 0_A, 3_V | H | 0_S, 0_A, 2_V> = g_S sqrt(1) sqrt(3)
    assert H[space.index((1, 0, 3)), space.index((0, 0, 2))] == pytest.approx(gS * np.sqrt(3))
    # <0_S, 1_A, 1_V | H | 0_S, 0_A, 2_V> = g_A sqrt(1) sqrt(2)
    assert H[space.index((0, 1, 1)), space.index((0, 0, 2))] == pytest.approx(gA * np.sqrt(2))


def test_evolution_properties(rng):
    space = TruncatedSpace(("S", "A", "V"), (4, 4, 6))
    H = build_effective_hamiltonian(space, RamanSystemSpec.single_mode(1.0, 0.3, 0.25, omega_S=1.3, omega_A=1.7))
    ev = ExactEvolver(H)
    v = rng.normal(size=space.dimension) + 1j * rng.normal(size=space.dimension)
    v /= np.linalg.norm(v)
    psi = OracleState(space, v)
    assert np.allclose(evolve(ev, psi, 0.0).vector, v, atol=1e-14)
    t1, t2 = 0.7, 1.9
    a = ev.apply(ev.apply(v, t1), t2)
    b = ev.apply(v, t1 + t2)
    assert np.abs(a - b).max() < 1e-10
    assert abs(np.linalg.norm(b) - 1) < 1e-12


def test_diagonal_hamiltonian_only_rotates_phases(rng):
    space = TruncatedSpace(("S", "A", "V"), (3, 3, 3))
    H = build_effective_hamiltonian(space, RamanSystemSpec.single_mode(1.0, 0, 0, omega_S=1.3, omega_A=1.7))
    v = rng.normal(size=space.dimension) + 0j
    v /= np.linalg.norm(v)
    out = evolve(H, OracleState(space, v), 4.2)
    assert np.allclose(out.probabilities(), np.abs(v) ** 2, atol=1e-14)


def test_expectations():
    space = TruncatedSpace(("a",), (25,))
    fock = OracleState(space, space.basis_vector((3,)))
    assert expectation(fock, "n_a") == pytest.approx(3)
    w = thermal_weights(0.8)
    ens = Ensemble(space, w[:26], [space.basis_vector((k,)) for k in range(min(26, w.size))])
    assert expectation(ens, "a_a") == 0
    coh = OracleState(space, coherent_amplitudes(1.0, 25)).normalized()
    # Poisson: <n^2> = |alpha|^4 + |alpha|^2; the tail beyond 25 is below 1e-25
    assert expectation(coh, "n_a^2").real == pytest.approx(2.0, abs=1e-9)


def test_manley_rowe_trivial_without_coupling():
    space = TruncatedSpace(("R", "S", "A", "V"), (14, 2, 2, 20))
    ens = trilinear_initial_ensemble(space, 1.0, 0.3)
    rep = manley_rowe_check(trilinear(0, 0), ens, [0.0, 1.0, 5.0])
    assert rep.max_drift < 1e-13


def test_manley_rowe_weak_coupling():
    # the Stokes mode needs headroom: its occupation grows roughly geometrically
    space = TruncatedSpace(("R", "S", "A", "V"), (14, 14, 8, 20))
    spec = trilinear(0.1, 0.07)
    ens = trilinear_initial_ensemble(space, 1.0, 0.3)
    rep = manley_rowe_check(spec, ens, np.linspace(0, 0.5 / 0.1, 6))
    assert rep.max_drift < 1e-8
    assert rep.edge_population < 1e-10 and not rep.inconclusive


def test_identity_trivial_cases():
    space = TruncatedSpace(("R", "S", "A", "V"), (14, 4, 4, 1))
    ens = trilinear_initial_ensemble(space, 1.0, 0.0)
    r0 = correlation_identity_check(trilinear(), ens, 0.0)
    assert r0.verdict == "both"
    assert abs(r0.lhs) < 1e-14 and abs(r0.rhs_printed) < 1e-12 and abs(r0.rhs_alternate) < 1e-12
    free = correlation_identity_check(trilinear(0, 0), ens, 2.0)
    assert free.verdict == "both" and abs(free.lhs) < 1e-14


def test_identity_at_zero_time_with_thermal_phonons():
    """At t = 0 the minus-sign form leaves -V(N_V(0)); only the plus sign vanishes."""
    space = TruncatedSpace(("R", "S", "A", "V"), (14, 3, 3, 20))
    ens = trilinear_initial_ensemble(space, 1.0, 0.2)
    r0 = correlation_identity_check(trilinear(), ens, 0.0)
    assert r0.verdict == "+"
    assert r0.rhs_printed == pytest.approx(-r0.terms["V(N_V(0))"], abs=1e-12)


def test_identity_sign_verdict():
    space = TruncatedSpace(("R", "S", "A", "V"), (14, 14, 8, 20))
    ens = trilinear_initial_ensemble(space, 1.0, 0.2)
    rep = correlation_identity_check(trilinear(), ens, 0.3 / 0.1)
    assert rep.edge_population < 1e-6
    assert rep.verdict == "+"
    assert rep.residual_alternate < 1e-10 and rep.residual_printed > 1e-3


def test_crosscheck_without_coupling():
    spec = RamanSystemSpec.single_mode(1.0, 0, 0, omega_S=1.3, omega_A=1.7)
    rep = gaussian_crosscheck(spec, SqueezedThermalSpec(0.5, 0.2), 1.0, cutoffs=(3, 3, 20))
    assert rep.max_relative_residual == 0 or rep.max_relative_residual < 1e-12
    assert all(abs(rep.oracle[k]) < 1e-14 for k in ("n_S", "n_A", "corr_SA"))


def test_crosscheck_vacuum_small_gt(generic_spec):
    rep = gaussian_crosscheck(generic_spec, SqueezedThermalSpec(0.0), 0.5, cutoffs=(6, 6, 8))
    assert rep.max_relative_residual < 1e-6


def test_crosscheck_squeezed(generic_spec):
    # a phonon cutoff of 12 leaves 4e-5 on the edge and a 5e-3 residual; 30 is needed
    rep = gaussian_crosscheck(generic_spec, SqueezedThermalSpec(0.5, 0.2), 0.5, cutoffs=(8, 8, 30))
    assert rep.max_relative_residual < 1e-5


def test_truncation_warning_on_tiny_cutoffs():
    from raman_correlate.errors import TruncationWarning

    space = TruncatedSpace(("R", "S", "A", "V"), (2, 1, 1, 2))
    with pytest.warns(TruncationWarning):
        rep = manley_rowe_check(trilinear(), trilinear_initial_ensemble(space, 1.0, 0.5), [0, 1.0])
    assert rep.inconclusive
