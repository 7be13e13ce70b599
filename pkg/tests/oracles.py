"""Reference computations that share no code with the package."""
import mpmath
import numpy as np
from scipy.linalg import expm

mpmath.mp.dps = 40


def bessel_series(n, x):
    """J_n(x) from its power series in 40-digit arithmetic, any integer n."""
    sign = -1 if (n < 0 and n % 2) else 1
    n = abs(n)
    x = mpmath.mpf(x)
    half_sq = (x / 2) ** 2
    term = (x / 2) ** n / mpmath.factorial(n)
    total = mpmath.mpf(0)
    k = 0
    while True:
        total += term
        k += 1
        term *= -half_sq / (k * (k + n))
        if abs(term) < mpmath.mpf(10) ** -38 and k > x:
            break
    return sign * float(total)


def expm_propagator(num_sites, alpha, tau, origin=1):
    """exp(-i H tau) from a dense Pade exponential."""
    sites = np.arange(origin, origin + num_sites)
    h = np.diag(alpha * sites.astype(float))
    h += np.diag(np.ones(num_sites - 1), 1) + np.diag(np.ones(num_sites - 1), -1)
    return expm(-1j * h * tau)


def brute_intensity(g, m):
    """Bilinear law by explicit loops."""
    n = len(m)
    out = np.zeros(g.shape[0])
    for q in range(g.shape[0]):
        acc = 0j
        for r in range(n):
            for s in range(n):
                acc += np.conj(g[q, r]) * g[q, s] * m[r, s]
        out[q] = acc.real
    return out
