# %% [markdown]
# # Stokes / anti-Stokes intensities and their correlation
#
# One dominant vibration mode, pump eliminated into static couplings. We
# propagate the operator vector with the pseudo-unitary propagator and read
# intensities and the intensity cross-correlation off its first two rows.

# %%
import numpy as np

from raman_correlate import RamanSystemSpec, SqueezedThermalSpec, dynamics as dyn
from raman_correlate.gaussian import DiagonalPhononStatistics

spec = RamanSystemSpec.single_mode(1.0, 0.3, 0.25, omega_S=1.3, omega_A=1.7)
dec = dyn.eigendecompose(dyn.build_matrix(spec))
print("normal-mode frequencies:", np.round(dec.eigenvalues.real, 4))

# %% [markdown]
# Thermal phonons at n = 0.5 and a squeezed-thermal phonon with the same
# thermal seed. Squeezing raises the phonon number variance, and the
# Stokes/anti-Stokes correlation follows it.

# %%
thermal = DiagonalPhononStatistics.thermal(0.5)
squeezed = DiagonalPhononStatistics.from_squeezed_thermal(SqueezedThermalSpec(0.5, 0.3))

print(f"{'t':>5} {'n_S':>10} {'n_A':>10} {'corr th':>11} {'corr sq':>11} {'C th':>7} {'C sq':>7}")
for t in np.linspace(0.5, 5.0, 10):
    p = dyn.propagator_at(dec, t)
    row = (
        dyn.stokes_intensity(p, thermal),
        dyn.antistokes_intensity(p, thermal),
        dyn.stokes_antistokes_correlation(p, thermal),
        dyn.stokes_antistokes_correlation(p, squeezed),
        dyn.cross_correlation_coefficient(p, thermal),
        dyn.cross_correlation_coefficient(p, squeezed),
    )
    print(f"{t:5.2f} " + " ".join(f"{x:10.4g}" for x in row[:4]) + " " + " ".join(f"{x:7.3f}" for x in row[4:]))

# %% [markdown]
# The correlation is affine in the phonon pair (n_V, V(n_V)):
# corr = A' + B' n_V + C' V(n_V). Knowing the propagator, a measured
# correlation together with the two intensities gives back V(n_V).

# %%
p = dyn.propagator_at(dec, 2.0)
c = dyn.correlation_coefficients(p, thermal)
print(f"A' = {c.A:.4g}   B' = {c.B:.4g}   C' = {c.C:.4g}")
meas = (dyn.stokes_antistokes_correlation(p, squeezed), dyn.stokes_intensity(p, squeezed), dyn.antistokes_intensity(p, squeezed))
n_est, V_est = dyn.invert_for_variance(*meas, p)
print(f"recovered n_V = {n_est:.6f}, V(n_V) = {V_est:.6f}; true {squeezed.n_V[0]:.6f}, {squeezed.V_nV[0]:.6f}")
