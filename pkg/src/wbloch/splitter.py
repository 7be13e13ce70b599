"""Single-photon W-state from a mirror-folded cascade of beam splitters.

A heralded photon meets a chain of identical splitters of transmissivity
``T``, split symmetrically into two arms of ``K`` stages each. Port ``k``
(counting outward from the centre, ``k = 0..K-1``) on either arm receives the
photon with probability ``T R^k / 2``. Whatever is left after ``K`` stages,
a fraction ``R^K``, never reaches an output port.
"""
from dataclasses import dataclass

import numpy as np

from .states import AmplitudeProfile, ProfileKind


@dataclass(frozen=True)
class CascadeSpec:
    transmissivity: float
    stages_per_arm: int

    def __post_init__(self):
        if not 0.0 < self.transmissivity <= 1.0:
            raise ValueError(f"transmissivity must lie in (0, 1], got {self.transmissivity!r}")
        if int(self.stages_per_arm) != self.stages_per_arm or self.stages_per_arm < 1:
            raise ValueError(f"stages_per_arm must be a positive integer, got {self.stages_per_arm!r}")

    @property
    def reflectivity(self) -> float:
        return 1.0 - self.transmissivity

    @property
    def total_ports(self) -> int:
        return 2 * self.stages_per_arm

    @property
    def residual_fraction(self) -> float:
        """Photon probability that never leaves through a port, ``R^K``."""
        return self.reflectivity ** self.stages_per_arm


def cascade_intensities(spec: CascadeSpec) -> np.ndarray:
    """Unnormalised port intensities, outermost left to outermost right.

    For ``K = 3`` this is ``(T R^2/2, T R/2, T/2, T/2, T R/2, T R^2/2)``.
    """
    t, r = spec.transmissivity, spec.reflectivity
    arm = np.array([t * r ** k / 2.0 for k in range(spec.stages_per_arm)])
    return np.concatenate([arm[::-1], arm])


def cascade_amplitudes(spec: CascadeSpec):
    """W-state amplitudes produced by the cascade, post-selected on detection.

    Returns
    -------
    profile : AmplitudeProfile
        Real non-negative ``c_p = sqrt(I_p / sum(I))``, unit norm. All
        splitter and path phases are taken as unity.
    residual : float
        The discarded fraction ``R^K``.
    """
    intensities = cascade_intensities(spec)
    amps = np.sqrt(intensities / intensities.sum())
    return AmplitudeProfile(amps, ProfileKind.WSTATE), spec.residual_fraction
