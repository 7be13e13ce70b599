r"""Integer-order Bessel functions of the first kind.

All orders :math:`J_0(x) \dots J_n(x)` at one argument are produced together
by Miller's backward recurrence

.. math:: J_{k-1}(x) = \frac{2k}{x} J_k(x) - J_{k+1}(x),

started well above both ``n`` and ``x`` where the true solution is
negligible, and normalised with :math:`J_0^2 + 2\sum_{k\ge1} J_k^2 = 1`. The
overall sign comes from :math:`J_0 + 2\sum_{k\ge1} J_{2k} = 1`. Small arguments
go through the power series instead.
"""
import math

import numpy as np

MAX_ORDER = 500
MAX_ARGUMENT = 1000.0

_SERIES_CUTOFF = 1.0
_RESCALE_AT = 1e200


def bessel_j(order, x):
    """Bessel function :math:`J_n(x)` for integer ``order``.

    Parameters
    ----------
    order : int
        Integer order with ``|order| <= 500``.
    x : float
        Real argument with ``|x| <= 1000``.

    Returns
    -------
    float
        :math:`J_n(x)`, absolute error below ``1e-12`` in the supported range.

    Examples
    --------
    >>> bessel_j(0, 0.0)
    1.0
    >>> round(bessel_j(1, 2.0), 12)
    0.576724807757
    """
    if int(order) != order:
        raise ValueError(f"order must be an integer, got {order!r}")
    order = int(order)
    x = float(x)
    if abs(order) > MAX_ORDER:
        raise ValueError(f"|order| must be <= {MAX_ORDER}, got {order}")
    if not math.isfinite(x) or abs(x) > MAX_ARGUMENT:
        raise ValueError(f"x must be finite with |x| <= {MAX_ARGUMENT}, got {x!r}")
    n = abs(order)
    value = float(bessel_j_orders(n, abs(x))[n])
    # J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x)
    if n % 2 and ((order < 0) != (x < 0)):
        value = -value
    return value


def bessel_j_orders(max_order, x):
    """Array ``[J_0(x), J_1(x), ..., J_max_order(x)]`` for ``x >= 0``.

    No range limits are enforced here beyond ``x >= 0``; cost grows linearly
    with ``max(max_order, x)``.
    """
    max_order = int(max_order)
    x = float(x)
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    if not x >= 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if x == 0.0:
        out = np.zeros(max_order + 1)
        out[0] = 1.0
        return out
    if x < _SERIES_CUTOFF:
        return _series(max_order, x)
    return _miller(max_order, x)


def _series(max_order, x):
    half = 0.5 * x
    quarter_sq = -half * half
    out = np.zeros(max_order + 1)
    log_half = math.log(half)
    for n in range(max_order + 1):
        log_lead = n * log_half - math.lgamma(n + 1)
        if log_lead < -745.0:
            break
        term = 1.0
        total = 1.0
        k = 0
        while abs(term) > 1e-17 * abs(total):
            k += 1
            term *= quarter_sq / (k * (n + k))
            total += term
        out[n] = math.exp(log_lead) * total
    return out


def _start_order(max_order, x):
    top = max(max_order, x)
    start = int(top + 20 + math.sqrt(60.0 * top))
    return start + (start % 2)


def _miller(max_order, x):
    start = _start_order(max_order, x)
    vals = np.zeros(start + 2)
    vals[start] = 1e-300
    two_over_x = 2.0 / x
    for k in range(start, 0, -1):
        vals[k - 1] = k * two_over_x * vals[k] - vals[k + 1]
        if abs(vals[k - 1]) > _RESCALE_AT:
            vals[k - 1:] /= _RESCALE_AT
    vals = vals[:start + 1]
    vals /= np.abs(vals).max()
    sum_sq = vals[0] ** 2 + 2.0 * np.dot(vals[1:], vals[1:])
    even_sum = vals[0] + 2.0 * vals[2::2].sum()
    scale = math.copysign(1.0 / math.sqrt(sum_sq), even_sum)
    return vals[:max_order + 1] * scale
