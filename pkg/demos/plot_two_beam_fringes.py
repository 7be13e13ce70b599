r"""
Two-beam fringes
================

Mean intensity behind a 50/50 combiner as the relative phase is scanned.
Two independent single photons give a flat line; one photon shared between
the two beams, :math:`(|1,0\rangle + |0,1\rangle)/\sqrt2`, gives full
visibility, exactly like two equal coherent beams.
"""

import matplotlib.pyplot as plt
import numpy as np

from wbloch.twobeam import Coherent, EntangledW, FockPair, fringe_visibility, two_beam_intensity

thetas = np.linspace(0, 4 * np.pi, 300)
states = {
    "entangled single photon": EntangledW(),
    "photon in each beam": FockPair(1, 1),
    "coherent, unequal": Coherent(1.0, 0.5j),
}
for label, state in states.items():
    curve = [two_beam_intensity(state, t) for t in thetas]
    plt.plot(thetas, curve, label=f"{label} (V={fringe_visibility(state):.2f})")
plt.xlabel(r"$\theta$")
plt.ylabel("mean intensity")
plt.legend()
plt.show()
