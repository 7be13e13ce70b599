import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import jv

from wbloch.bessel import bessel_j, bessel_j_orders

from oracles import bessel_series

J1_OF_2 = 0.5767248077568733872  # 40-digit series


def test_j0_at_zero():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(7, 0.0) == 0.0


def test_negative_order_parity():
    assert bessel_j(-3, 2.5) == -bessel_j(3, 2.5)
    assert bessel_j(-4, 2.5) == bessel_j(4, 2.5)


def test_negative_argument_parity():
    assert bessel_j(3, -2.5) == -bessel_j(3, 2.5)
    assert bessel_j(-3, -2.5) == bessel_j(3, 2.5)


def test_j1_of_2():
    assert abs(bessel_j(1, 2.0) - J1_OF_2) < 1e-15


@pytest.mark.parametrize("x", [1e-300, 1e-8, 0.3, 0.999999, 1.0, 1.000001, 7.3, 48.0])
def test_against_series_oracle(x):
    for n in (0, 1, 2, 5, 17, 40):
        assert abs(bessel_j(n, x) - bessel_series(n, x)) <= 1e-12


@pytest.mark.parametrize("x", [0.5, 3.0, 40.0, 400.0, 1000.0])
def test_full_range_against_scipy(x):
    orders = bessel_j_orders(500, x)
    np.testing.assert_allclose(orders, jv(np.arange(501), x), rtol=0, atol=1e-12)


def test_small_argument_high_order_underflows_to_zero():
    assert bessel_j(500, 1e-3) == 0.0


@settings(max_examples=300)
@given(st.integers(-499, 499), st.floats(0.01, 1000.0))
def test_three_term_recurrence(n, x):
    residual = bessel_j(n - 1, x) + bessel_j(n + 1, x) - 2 * n / x * bessel_j(n, x)
    assert abs(residual) <= 1e-10


@pytest.mark.parametrize("order, x", [(501, 1.0), (-501, 1.0), (2, 1000.5), (2, math.nan), (2, math.inf), (1.5, 1.0)])
def test_rejects_out_of_range(order, x):
    with pytest.raises(ValueError):
        bessel_j(order, x)
