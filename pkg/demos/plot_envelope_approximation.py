r"""
Momentum-space picture and the envelope approximation
=====================================================

The exact intensities can be written as a single integral over quasi
momentum, evaluated here with the periodic trapezoidal rule. When the
spectrum is narrow the integral collapses to a rigid shift of
:math:`|c_p|^2` by :math:`(4/\alpha)\sin^2(\alpha\tau/2)` guides.
"""

import matplotlib.pyplot as plt
import numpy as np

import wbloch

params = wbloch.LatticeParams(101, 0.5)
tau = wbloch.bloch_period(0.5) / 2

fig, axes = plt.subplots(1, 3, figsize=(11, 3.5), sharey=False)
for ax, sigma in zip(axes, (1.8, 3.6, 7.2)):
    profile = wbloch.gaussian_profile(101, 51, sigma)
    exact = wbloch.intensity_wstate(wbloch.analytic_propagator(params, tau), profile)
    integral = wbloch.intensity_via_integral(profile, params, tau)
    approx = wbloch.approx_intensity(profile, params, tau)
    print(f"sigma={sigma}: integral vs closed form {np.abs(integral - exact).max():.1e}, "
          f"L1 error of envelope law {np.abs(approx - exact).sum():.3f}")
    ax.plot(params.sites, exact, label="exact")
    ax.plot(params.sites, approx, "--", label="envelope")
    ax.set_xlim(30, 90)
    ax.set_title(fr"$\sigma={sigma}$, width {wbloch.spectral_width(profile):.2f}")
    ax.set_xlabel("guide p")
axes[0].legend()
fig.tight_layout()
plt.show()
