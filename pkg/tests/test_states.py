import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from wbloch.lattice import LatticeParams
from wbloch.observables import intensity_wstate
from wbloch.propagator import numeric_propagator
from wbloch.states import (
    AmplitudeProfile, ProfileKind, apply_phase_mask, as_wstate, gaussian_profile,
    incoherent_correlations, single_site_profile, w_correlations)

GAUSSIAN_RATIO_13_17 = 1.8538859518680509052  # exp(16 / (2 * 3.6**2))

finite = st.floats(-1, 1, allow_nan=False)


@st.composite
def unit_profiles(draw, min_size=1, max_size=20):
    n = draw(st.integers(min_size, max_size))
    re = draw(arrays(float, n, elements=finite))
    im = draw(arrays(float, n, elements=finite))
    c = re + 1j * im
    norm = np.linalg.norm(c)
    if norm < 1e-3:
        c = np.zeros(n, complex)
        c[0] = 1
        norm = 1.0
    return AmplitudeProfile(c / norm)


def test_fig6_parameter_set_is_symmetric_and_peaked():
    c = gaussian_profile(26, 13, 3.6).amplitudes.real
    assert np.argmax(c) == 12
    np.testing.assert_array_equal(c[12 - 12:12], c[12 + 12:12:-1])


def test_flat_limit():
    c = gaussian_profile(5, 3, 1e6).amplitudes
    np.testing.assert_allclose(c, 1 / math.sqrt(5), atol=1e-9)


def test_gaussian_ratio():
    c = gaussian_profile(26, 13, 3.6).amplitudes.real
    assert c[12] / c[16] == pytest.approx(GAUSSIAN_RATIO_13_17, rel=1e-13)


@pytest.mark.parametrize("kind", list(ProfileKind))
def test_gaussian_both_kinds_unit_norm(kind):
    profile = gaussian_profile(26, 10.5, 2.0, kind)
    assert profile.kind is kind
    assert profile.norm_squared == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("sigma", [0.0, -1.0])
def test_gaussian_rejects_bad_sigma(sigma):
    with pytest.raises(ValueError):
        gaussian_profile(10, 5, sigma)


def test_gaussian_rejects_center_outside():
    with pytest.raises(ValueError):
        gaussian_profile(10, 11, 1.0)


def test_wstate_must_be_normalised():
    with pytest.raises(ValueError):
        AmplitudeProfile(np.array([1.0, 1.0]))
    AmplitudeProfile(np.array([1.0, 1.0]), ProfileKind.COHERENT)


def test_single_port_fock_correlations():
    m = w_correlations(single_site_profile(4, 1))
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_array_equal(m, expected)


def test_entangled_pair_correlation_is_one_half():
    m = w_correlations(AmplitudeProfile(np.array([1, 1]) / math.sqrt(2)))
    np.testing.assert_allclose(m, 0.5, atol=1e-15)


def test_w_correlations_rejects_unnormalised():
    coherent = AmplitudeProfile(np.array([1.0, 1.0]), ProfileKind.COHERENT)
    with pytest.raises(ValueError):
        w_correlations(coherent)


@given(unit_profiles())
def test_w_correlation_structure(profile):
    m = w_correlations(profile)
    np.testing.assert_allclose(m, m.conj().T, atol=1e-12)
    eig = np.linalg.eigvalsh(m)
    assert eig.min() >= -1e-10
    expected = np.zeros_like(eig)
    expected[-1] = 1
    np.testing.assert_allclose(eig, expected, atol=1e-10)
    assert np.trace(m).real == pytest.approx(1, abs=1e-12)


def test_incoherent_correlations():
    np.testing.assert_array_equal(incoherent_correlations([1, 0, 0]), np.diag([1, 0, 0]))
    np.testing.assert_array_equal(incoherent_correlations(np.zeros(3)), np.zeros((3, 3)))
    with pytest.raises(ValueError):
        incoherent_correlations([1, -0.5])


def test_zero_mask_is_identity():
    profile = gaussian_profile(8, 4, 2)
    np.testing.assert_array_equal(apply_phase_mask(profile, np.zeros(8)).amplitudes, profile.amplitudes)


def test_global_phase_leaves_intensities():
    profile = gaussian_profile(12, 6, 2)
    g = numeric_propagator(LatticeParams(12, 0.5), 3.3).g
    masked = apply_phase_mask(profile, np.full(12, 1.234))
    np.testing.assert_allclose(intensity_wstate(g, masked), intensity_wstate(g, profile), atol=1e-14)


def test_alternating_mask_changes_pattern():
    n = 12
    flat = AmplitudeProfile(np.full(n, 1 / math.sqrt(n)))
    masked = apply_phase_mask(flat, math.pi * np.arange(1, n + 1))
    g = numeric_propagator(LatticeParams(n, 0.5), 2.0).g
    assert np.abs(intensity_wstate(g, masked) - intensity_wstate(g, flat)).max() > 1e-2


def test_mask_length_mismatch():
    with pytest.raises(ValueError):
        apply_phase_mask(gaussian_profile(8, 4, 2), np.zeros(7))


@given(unit_profiles(), st.data())
def test_mask_preserves_norm_and_diagonal(profile, data):
    phases = data.draw(arrays(float, len(profile), elements=st.floats(-10, 10)))
    masked = apply_phase_mask(profile, phases)
    assert abs(masked.norm_squared - profile.norm_squared) <= 1e-14
    np.testing.assert_allclose(np.diag(w_correlations(masked)), np.diag(w_correlations(profile)), atol=1e-15)


@given(st.integers(3, 40), st.integers(0, 40), st.floats(0.3, 10))
def test_gaussian_symmetric_about_integer_center(n, offset, sigma):
    center = 1 + offset % n
    a = np.abs(gaussian_profile(n, center, sigma).amplitudes)
    for k in range(1, n):
        lo, hi = center - k, center + k
        if lo >= 1 and hi <= n:
            assert a[lo - 1] == a[hi - 1]


def test_as_wstate_normalises():
    coherent = AmplitudeProfile(np.array([3.0, 4.0]), ProfileKind.COHERENT)
    np.testing.assert_allclose(as_wstate(coherent).amplitudes, [0.6, 0.8])


def test_profile_is_read_only():
    profile = gaussian_profile(5, 3, 1.0)
    with pytest.raises(ValueError):
        profile.amplitudes[0] = 0
