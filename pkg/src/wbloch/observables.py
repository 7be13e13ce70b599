"""Mean output intensities ``<b_q^dagger b_q>`` for each class of input.

Convention: ``b_q = sum_p G[q, p] a_p``, rows of ``G`` index outputs. The
general bilinear law is ``I_q = sum_{r,s} conj(G[q, r]) G[q, s] M[r, s]``;
the other functions are its closed-form specialisations.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .lattice import LatticeParams
from .propagator import Method, analytic_propagator, numeric_propagator
from .states import AmplitudeProfile, NORM_TOLERANCE

IMAGINARY_TOLERANCE = 1e-9
NEGATIVITY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class IntensityMap:
    """Intensities ``values[time_index, site_index]`` on a grid of ``tau``.

    ``params`` is the lattice the map was computed on. Maps built from other
    sources may leave it as ``None``; their sites are then labelled from
    ``site_origin``.
    """

    values: np.ndarray
    tau_grid: np.ndarray
    params: Optional[LatticeParams] = None
    input_descriptor: str = ""
    site_origin: int = 1

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        tau_grid = np.asarray(self.tau_grid, dtype=float)
        if values.ndim != 2 or values.shape[0] != tau_grid.size:
            raise ValueError(f"values shape {values.shape} does not match {tau_grid.size} times")
        if self.params is not None:
            if values.shape[1] != self.params.num_sites:
                raise ValueError(
                    f"values have {values.shape[1]} sites, lattice has {self.params.num_sites}")
            object.__setattr__(self, "site_origin", self.params.site_origin)
        if values.size and values.min() < -NEGATIVITY_TOLERANCE:
            raise ValueError(f"negative intensity {values.min()!r} in map")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "tau_grid", tau_grid)

    @property
    def sites(self):
        return np.arange(self.site_origin, self.site_origin + self.values.shape[1])

    def totals(self):
        """Total intensity at each time step."""
        return self.values.sum(axis=1)

    def centroids(self):
        """Intensity-weighted mean site at each time step."""
        return self.values @ self.sites / self.totals()


def _matrix(g):
    return np.asarray(g)


def _check_square(g, n):
    if g.ndim != 2 or g.shape[1] != n:
        raise ValueError(f"propagator of shape {g.shape} cannot act on {n} input modes")


def _amplitude_intensity(g, amplitudes):
    _check_square(g, amplitudes.size)
    out = g @ amplitudes
    return out.real ** 2 + out.imag ** 2


def intensity_from_correlations(g, m) -> np.ndarray:
    """Bilinear law for an arbitrary Hermitian correlation matrix ``m``."""
    g = _matrix(g)
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"correlation matrix must be square, got shape {m.shape}")
    _check_square(g, m.shape[0])
    values = np.einsum("qr,rs,qs->q", g.conj(), m, g)
    residue = np.abs(values.imag).max()
    if residue > IMAGINARY_TOLERANCE:
        raise ValueError(f"imaginary intensity residue {residue:.3g}: correlation matrix is not Hermitian")
    return values.real.copy()


def intensity_wstate(g, profile: AmplitudeProfile) -> np.ndarray:
    """``I_q = |sum_p G[q, p] c_p|^2`` for a single photon in a W-state."""
    c = profile.amplitudes if isinstance(profile, AmplitudeProfile) else np.asarray(profile, dtype=complex)
    norm_sq = float(np.vdot(c, c).real)
    if abs(norm_sq - 1.0) > NORM_TOLERANCE:
        raise ValueError(f"W-state amplitudes must have unit norm, got {norm_sq!r}")
    return _amplitude_intensity(_matrix(g), c)


def intensity_coherent(g, alphas) -> np.ndarray:
    """``I_q = |sum_p G[q, p] alpha_p|^2`` for coherent inputs.

    Deliberately the same arithmetic as :func:`intensity_wstate`: a W-state
    and a coherent field with equal amplitudes give identical mean
    intensities.
    """
    a = alphas.amplitudes if isinstance(alphas, AmplitudeProfile) else np.asarray(alphas, dtype=complex)
    return _amplitude_intensity(_matrix(g), a)


def intensity_incoherent(g, occupations) -> np.ndarray:
    """``I_q = sum_p |G[q, p]|^2 n_p``: no cross terms survive."""
    g = _matrix(g)
    n = np.asarray(occupations, dtype=float)
    _check_square(g, n.size)
    return (g.real ** 2 + g.imag ** 2) @ n


INPUT_KINDS = ("fock", "coherent", "wstate", "incoherent")


def intensity_map(params: LatticeParams, tau_grid, input_kind, profile: AmplitudeProfile,
                  method=Method.ANALYTIC) -> IntensityMap:
    """Evaluate the output intensities of one input over a grid of times.

    ``input_kind`` is one of ``fock`` (the profile must sit on a single
    site), ``coherent``, ``wstate`` or ``incoherent``; for the last,
    occupations are taken as ``|profile|^2``.
    """
    method = Method(method)
    if input_kind not in INPUT_KINDS:
        raise ValueError(f"input_kind must be one of {INPUT_KINDS}, got {input_kind!r}")
    if len(profile) != params.num_sites:
        raise ValueError(f"profile has {len(profile)} sites, lattice has {params.num_sites}")
    amps = profile.amplitudes
    weights = amps.real ** 2 + amps.imag ** 2
    if input_kind == "fock" and np.count_nonzero(weights) != 1:
        raise ValueError("a fock input needs a profile supported on exactly one site")

    propagate = analytic_propagator if method is Method.ANALYTIC else numeric_propagator
    tau_grid = np.asarray(tau_grid, dtype=float)
    rows = []
    for tau in tau_grid:
        g = propagate(params, tau).g
        if input_kind == "coherent":
            rows.append(intensity_coherent(g, amps))
        elif input_kind == "wstate":
            rows.append(intensity_wstate(g, amps))
        else:
            rows.append(intensity_incoherent(g, weights / weights.sum()))
    values = np.array(rows).reshape(tau_grid.size, params.num_sites)
    return IntensityMap(values, tau_grid, params, input_kind)
