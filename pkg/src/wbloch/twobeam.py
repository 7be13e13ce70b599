"""Two-beam interference: when do second moments produce fringes?

The output ``b = (a_1 + e^{i theta} a_2) / sqrt(2)`` has mean intensity

    I(theta) = [<n_1> + <n_2> + 2 Re(e^{i theta} <a_1^dagger a_2>)] / 2,

so fringes need a non-zero cross-correlation ``<a_1^dagger a_2>``. The three
input families below have their moments evaluated in closed form.
"""
from dataclasses import dataclass
import cmath
import math


@dataclass(frozen=True)
class Coherent:
    alpha1: complex
    alpha2: complex

    def __post_init__(self):
        for a in (self.alpha1, self.alpha2):
            if not cmath.isfinite(complex(a)):
                raise ValueError(f"coherent amplitudes must be finite, got {a!r}")


@dataclass(frozen=True)
class FockPair:
    n1: int
    n2: int

    def __post_init__(self):
        for n in (self.n1, self.n2):
            if int(n) != n or n < 0:
                raise ValueError(f"Fock occupations must be non-negative integers, got {n!r}")


@dataclass(frozen=True)
class EntangledW:
    """``(|1,0> + |0,1>) / sqrt(2)``."""


def mean_occupations(state):
    """``(<n_1>, <n_2>)``."""
    if isinstance(state, Coherent):
        return abs(state.alpha1) ** 2, abs(state.alpha2) ** 2
    if isinstance(state, FockPair):
        return float(state.n1), float(state.n2)
    if isinstance(state, EntangledW):
        return 0.5, 0.5
    raise TypeError(f"unknown two-beam state {state!r}")


def two_beam_cross_correlation(state) -> complex:
    """``<a_1^dagger a_2>`` of the input state."""
    if isinstance(state, Coherent):
        return complex(state.alpha1).conjugate() * complex(state.alpha2)
    if isinstance(state, FockPair):
        return 0j
    if isinstance(state, EntangledW):
        return 0.5 + 0j
    raise TypeError(f"unknown two-beam state {state!r}")


def two_beam_intensity(state, theta) -> float:
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta!r}")
    n1, n2 = mean_occupations(state)
    cross = two_beam_cross_correlation(state)
    return 0.5 * (n1 + n2 + 2.0 * (cmath.exp(1j * theta) * cross).real)


def fringe_visibility(state) -> float:
    """``2 |<a_1^dagger a_2>| / (<n_1> + <n_2>)``; zero for the vacuum."""
    n1, n2 = mean_occupations(state)
    if n1 + n2 == 0:
        return 0.0
    return 2.0 * abs(two_beam_cross_correlation(state)) / (n1 + n2)
