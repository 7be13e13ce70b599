r"""
W-state versus coherent and incoherent light
============================================

Three inputs with the same occupation pattern :math:`|c_p|^2`:

* a coherent field with amplitudes :math:`\alpha_p = c_p`,
* a single photon in the W-state :math:`\sum_p c_p|1_p\rangle`,
* independent single-photon sources with occupations :math:`|c_p|^2`.

The first two give identical mean intensities; the third loses the
interference and never oscillates coherently.
"""

import matplotlib.pyplot as plt
import numpy as np

import wbloch

params = wbloch.LatticeParams(26, 0.5)
profile, discarded = wbloch.cascade_amplitudes(wbloch.CascadeSpec(0.5, 13))
print(f"cascade discards a fraction {discarded:.2e} of the photons")
taus = np.linspace(0, 25, 400)

maps = {kind: wbloch.intensity_map(params, taus, kind, profile)
        for kind in ("coherent", "wstate", "incoherent")}
print("coherent vs W-state:", np.abs(maps["coherent"].values - maps["wstate"].values).max())
print("incoherent vs W-state:", np.abs(maps["incoherent"].values - maps["wstate"].values).max())

fig, axes = plt.subplots(1, 3, figsize=(11, 4), sharey=True)
for ax, (kind, imap) in zip(axes, maps.items()):
    ax.imshow(imap.values, aspect="auto", origin="lower",
              extent=[0.5, 26.5, taus[0], taus[-1]], cmap="magma")
    ax.set_title(kind)
    ax.set_xlabel("guide p")
axes[0].set_ylabel(r"$\tau$")
fig.tight_layout()

###############################################################################
# A Gaussian profile (width 3.6 guides) oscillates as a rigid packet: its
# centroid follows :math:`13 + (4/\alpha)\sin^2(\alpha\tau/2)`.

gaussian = wbloch.gaussian_profile(26, 13, 3.6)
moving = wbloch.intensity_map(params, taus, "wstate", gaussian, "numeric")
plt.figure(figsize=(5, 3))
plt.plot(taus, moving.centroids(), label="centroid")
plt.plot(taus, [13 + wbloch.envelope_shift(0.5, t) for t in taus], "--", label="envelope law")
plt.xlabel(r"$\tau$")
plt.ylabel("guide")
plt.legend()
plt.show()
