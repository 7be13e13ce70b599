import numpy as np
import pytest
from hypothesis import given, strategies as st

from wbloch.splitter import CascadeSpec, cascade_amplitudes, cascade_intensities


def test_six_port_pattern():
    t = 0.37
    r = 1 - t
    expected = [t * r ** 2 / 2, t * r / 2, t / 2, t / 2, t * r / 2, t * r ** 2 / 2]
    np.testing.assert_array_equal(cascade_intensities(CascadeSpec(t, 3)), expected)


def test_perfect_transmission():
    np.testing.assert_array_equal(cascade_intensities(CascadeSpec(1.0, 3)), [0, 0, 0.5, 0.5, 0, 0])


def test_default_cascade_total():
    assert cascade_intensities(CascadeSpec(0.5, 13)).sum() == 0.9998779296875


def test_fifty_fifty_split():
    profile, residual = cascade_amplitudes(CascadeSpec(1.0, 1))
    np.testing.assert_allclose(profile.amplitudes, [2 ** -0.5, 2 ** -0.5], atol=1e-15)
    assert residual == 0.0


def test_default_profile_geometric_decay():
    profile, residual = cascade_amplitudes(CascadeSpec(0.5, 13))
    c = profile.amplitudes.real
    assert c[12] == c[13] == c.max()
    np.testing.assert_allclose(c[:12] / c[1:13], np.sqrt(0.5), rtol=1e-13)
    assert residual == 0.5 ** 13


@pytest.mark.parametrize("t, k", [(0.0, 3), (1.2, 3), (0.5, 0), (0.5, 2.5)])
def test_rejects_invalid_spec(t, k):
    with pytest.raises(ValueError):
        CascadeSpec(t, k)


specs = st.builds(CascadeSpec, st.floats(1e-3, 1.0), st.integers(1, 40))


@given(specs)
def test_invariants(spec):
    intensities = cascade_intensities(spec)
    assert intensities.size == spec.total_ports
    assert abs(intensities.sum() - (1 - spec.reflectivity ** spec.stages_per_arm)) <= 1e-14
    profile, residual = cascade_amplitudes(spec)
    c = profile.amplitudes.real
    assert abs(profile.norm_squared - 1) <= 1e-14
    np.testing.assert_array_equal(c, c[::-1])
    k = spec.stages_per_arm
    assert np.all(np.diff(c[:k]) >= 0) and np.all(np.diff(c[k:]) <= 0)
    assert residual == pytest.approx(spec.reflectivity ** k)
