# %% [markdown]
# # Single-phonon closed form
#
# With one phonon mode on the Raman resonances the normal-mode frequencies
# solve a cubic. The published cubic is compared with the determinant of the
# dynamical matrix, and the closed-form propagator with the numerical one.

# %%
import numpy as np

from raman_correlate import RamanSystemSpec, dynamics as dyn
from raman_correlate.three_mode import closed_form_propagator, compare_cubics, mode_weights

spec = RamanSystemSpec.single_mode(1.0, 0.3, 0.2, omega_R=10.0)
cmp = compare_cubics(spec)
print(cmp.format())

E = cmp.published.roots
w = mode_weights(E, 10.0, 1.0, 0.3, 0.2)
for t in (0.0, 1.0, 5.0):
    ana = closed_form_propagator(w, E, t)
    num = dyn.propagator_at(dyn.eigendecompose(dyn.build_matrix(spec)), t)
    print(f"t = {t}: max |closed form - numerical| = {np.abs(ana.S - num.S).max():.2e}, "
          f"pseudo-unitarity residual {ana.pseudo_unitarity_residual():.2e}")
