"""Bloch oscillations of single photons prepared in W-states.

A single photon shared coherently over many input guides of a waveguide array
(a W-state) produces the same mean output intensities as a coherent field
with the same amplitudes. This package builds the array propagator in closed
form and numerically, the W-state of a beam-splitter cascade, the mean
intensities of coherent, incoherent and W-state inputs, and the
quasi-momentum analysis of the resulting oscillations.
"""
from .bessel import bessel_j, bessel_j_orders
from .fourier import (
    NonUnimodalSpectrumError,
    SpectralProfile,
    approx_intensity,
    bloch_period,
    c_tilde,
    envelope_shift,
    intensity_via_integral,
    spectral_profile,
    spectral_width,
)
from .lattice import LatticeParams, build_hamiltonian
from .observables import (
    IntensityMap,
    intensity_coherent,
    intensity_from_correlations,
    intensity_incoherent,
    intensity_map,
    intensity_wstate,
)
from .propagator import (
    EigensolverError,
    Method,
    PropagatorMatrix,
    analytic_propagator,
    numeric_propagator,
    unitarity_defect,
)
from .splitter import CascadeSpec, cascade_amplitudes, cascade_intensities
from .states import (
    AmplitudeProfile,
    ProfileKind,
    apply_phase_mask,
    gaussian_profile,
    incoherent_correlations,
    single_site_profile,
    w_correlations,
)
from .twobeam import (
    Coherent,
    EntangledW,
    FockPair,
    fringe_visibility,
    two_beam_cross_correlation,
    two_beam_intensity,
)

__version__ = "0.1.0"
