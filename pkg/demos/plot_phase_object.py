r"""
Imprinting a phase object on the W-state
========================================

A thin phase object multiplies each amplitude by :math:`e^{i\phi_p}`. The
port occupations do not change, yet the interference pattern in the array
does, so the output carries information about the object.
"""

import matplotlib.pyplot as plt
import numpy as np

import wbloch

params = wbloch.LatticeParams(26, 0.5)
profile, _ = wbloch.cascade_amplitudes(wbloch.CascadeSpec(0.5, 13))
phases = np.where(params.sites > 13, np.pi / 2, 0.0)
masked = wbloch.apply_phase_mask(profile, phases)
taus = np.linspace(0, 25, 300)

# complex amplitudes: use the exp(-iH tau) propagator
plain = wbloch.intensity_map(params, taus, "wstate", profile, "numeric")
shifted = wbloch.intensity_map(params, taus, "wstate", masked, "numeric")

fig, axes = plt.subplots(1, 2, figsize=(9, 4), sharey=True)
for ax, imap, title in zip(axes, (plain, shifted), ("no object", "half-plane phase step")):
    ax.imshow(imap.values, aspect="auto", origin="lower",
              extent=[0.5, 26.5, taus[0], taus[-1]], cmap="magma")
    ax.set_title(title)
    ax.set_xlabel("guide p")
axes[0].set_ylabel(r"$\tau$")
fig.tight_layout()
plt.show()
