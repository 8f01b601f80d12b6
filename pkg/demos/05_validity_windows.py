# %% [markdown]
# # How long does a classical pump stay classical?
#
# The pump depletes as Stokes photons are emitted. Its mean and variance stay
# near their initial values for times below tau1 and tau2.

# %%
import numpy as np

from raman_correlate import RamanSystemSpec
from raman_correlate.oracle import pump_moments_exact
from raman_correlate.pump import TIME_CONVENTION, published_expansion, pump_moments_second_order, validity_ranges

t1, t2 = validity_ranges(1e7, 0.0, 0.0)
print(f"|M_S| = 1e7: tau1 = {t1 * 1e15:.3g} fs, tau2 = {t2 * 1e15:.3g} fs")
print("convention:", TIME_CONVENTION)
for n in (0.0, 0.5, 1.0, 2.0):
    a, b = validity_ranges(1.0, 0.5, n)
    print(f"n_V = {n}: tau1 = {a:.4f}, tau2 = {b:.4f}")

# %% [markdown]
# Exact short-time pump statistics against the two expansions. The printed
# coefficients leave an error that grows like t^2; the exact second-order form
# leaves a t^4 error.

# %%
MS, MA, nV = 0.1, 0.07, 0.3
spec = RamanSystemSpec.single_mode(1.0, 0, 0, omega_R=10.0, bare_M_S=MS, bare_M_A=MA, pump_alpha=1.5)
tau1, _ = validity_ranges(MS, MA, nV)
ts = np.geomspace(1e-3, 1e-2, 4) * tau1
(m0, V0), exact = pump_moments_exact(spec, nV, ts, (14, 3, 3, 10))
pub = published_expansion(MS, MA, m0, nV, 0.0, V0)
for t, (m, v) in zip(ts, exact):
    mc, vc = pump_moments_second_order(MS, MA, m0, nV, t, V_R=V0)
    mp, vp = pub(t)
    print(f"t = {t:.3g}: variance error printed {abs(vp - v):.2e}, second order {abs(vc - v):.2e}")
