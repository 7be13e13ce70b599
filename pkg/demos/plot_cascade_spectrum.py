r"""
Cascade W-state and its momentum spectrum
=========================================

The folded beam-splitter cascade sends the photon to port ``k`` (counted
outward from the centre) with probability :math:`TR^k/2`, so the amplitudes
decay geometrically away from the two central ports. The narrower the
profile in space, the wider :math:`|\tilde c(k)|^2`.
"""

import matplotlib.pyplot as plt
import numpy as np

import wbloch

fig, (left, right) = plt.subplots(1, 2, figsize=(10, 3.8))
for t in (0.3, 0.5, 0.8):
    profile, _ = wbloch.cascade_amplitudes(wbloch.CascadeSpec(t, 13))
    spectrum = wbloch.spectral_profile(profile)
    width = wbloch.spectral_width(profile)
    left.plot(np.arange(1, 27), np.abs(profile.amplitudes), "o-", ms=3, label=f"T={t}")
    right.plot(spectrum.k_grid, spectrum.power, label=f"T={t}, FWHM={width:.3f}")
left.set_xlabel("port p")
left.set_ylabel(r"$|c_p|$")
right.set_xlabel("k")
right.set_ylabel(r"$|\tilde c(k)|^2$")
left.legend()
right.legend(fontsize=8)
fig.tight_layout()

###############################################################################
# Half-height width as a function of the splitter transmissivity.

ts = np.linspace(0.1, 0.9, 33)
widths = [wbloch.spectral_width(wbloch.cascade_amplitudes(wbloch.CascadeSpec(t, 13))[0]) for t in ts]
plt.figure(figsize=(5, 3))
plt.plot(ts, widths)
plt.axhline(0.31, color="gray", lw=0.8)
plt.xlabel("T")
plt.ylabel("FWHM of $|\\tilde c(k)|^2$")
plt.show()
