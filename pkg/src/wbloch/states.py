"""Input field states and their second-moment (correlation) matrices.

A W-state ``sum_p c_p |1_p, {0}>`` is never expanded in Fock space. Every mean
intensity depends on the input only through ``M[p, q] = <a_p^dagger a_q>``,
which for a W-state is the rank-one matrix ``conj(c)[:, None] * c[None, :]``.
The mean field of a W-state vanishes, so no first moment is ever attached to
one.
"""
from dataclasses import dataclass
import enum
import math

import numpy as np

NORM_TOLERANCE = 1e-9


class ProfileKind(enum.Enum):
    WSTATE = "wstate"
    COHERENT = "coherent"


@dataclass(frozen=True, eq=False)
class AmplitudeProfile:
    """Complex amplitudes over the sites of an array.

    For ``WSTATE`` these are the single-photon amplitudes ``c_p`` and must be
    unit norm. For ``COHERENT`` they are coherent-state amplitudes ``alpha_p``.
    """

    amplitudes: np.ndarray
    kind: ProfileKind = ProfileKind.WSTATE

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-d array")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        if self.kind is ProfileKind.WSTATE:
            _check_unit_norm(amps)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __len__(self):
        return self.amplitudes.size

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def _check_unit_norm(amps):
    norm_sq = float(np.vdot(amps, amps).real)
    if abs(norm_sq - 1.0) > NORM_TOLERANCE:
        raise ValueError(f"W-state amplitudes must have unit norm, got sum |c|^2 = {norm_sq!r}")


def single_site_profile(n_sites, site, site_origin=1, kind=ProfileKind.WSTATE):
    """Profile with all weight on one site (a single-photon Fock input for W kind)."""
    index = site - site_origin
    if not 0 <= index < n_sites:
        raise ValueError(f"site {site} outside the array {site_origin}..{site_origin + n_sites - 1}")
    amps = np.zeros(n_sites, dtype=complex)
    amps[index] = 1.0
    return AmplitudeProfile(amps, kind)


def gaussian_profile(n_sites, center, sigma, kind=ProfileKind.WSTATE, site_origin=1):
    """Real positive profile proportional to ``exp(-(p - center)^2 / (2 sigma^2))``.

    Both kinds are normalised to unit total weight so coherent and W-state
    runs share one intensity scale.

    Examples
    --------
    >>> c = gaussian_profile(5, 3, 1e6).amplitudes.real
    >>> np.allclose(c, 1 / np.sqrt(5))
    True
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be > 0, got {sigma!r}")
    last = site_origin + n_sites - 1
    if not site_origin <= center <= last:
        raise ValueError(f"center must lie in [{site_origin}, {last}], got {center!r}")
    sites = np.arange(site_origin, last + 1)
    amps = np.exp(-((sites - center) ** 2) / (2.0 * sigma ** 2))
    amps /= np.linalg.norm(amps)
    return AmplitudeProfile(amps, ProfileKind(kind))


def as_wstate(profile: AmplitudeProfile) -> AmplitudeProfile:
    """Reinterpret (and normalise) any profile as W-state amplitudes."""
    amps = profile.amplitudes
    return AmplitudeProfile(amps / math.sqrt(profile.norm_squared), ProfileKind.WSTATE)


def w_correlations(profile: AmplitudeProfile) -> np.ndarray:
    """Correlation matrix ``M[p, q] = conj(c_p) c_q`` of a W-state."""
    c = profile.amplitudes
    _check_unit_norm(c)
    return np.outer(c.conj(), c)


def incoherent_correlations(occupations) -> np.ndarray:
    """Diagonal correlation matrix of independent (incoherent) inputs."""
    n = np.asarray(occupations, dtype=float)
    if n.ndim != 1:
        raise ValueError("occupations must be a 1-d array")
    if not np.all(np.isfinite(n)) or np.any(n < 0):
        raise ValueError("occupations must be finite and non-negative")
    return np.diag(n).astype(complex)


def apply_phase_mask(profile: AmplitudeProfile, phases) -> AmplitudeProfile:
    """Multiply each amplitude by ``exp(i phi_p)``, as a thin phase object would."""
    phases = np.asarray(phases, dtype=float)
    if phases.shape != profile.amplitudes.shape:
        raise ValueError(
            f"phase mask has shape {phases.shape}, profile has {profile.amplitudes.shape}")
    return AmplitudeProfile(profile.amplitudes * np.exp(1j * phases), profile.kind)
