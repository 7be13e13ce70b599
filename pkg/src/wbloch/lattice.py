"""Waveguide-array model: a tight-binding chain with a linear detuning gradient.

Everything is expressed in units of the nearest-neighbour coupling ``J``:
energies in ``hbar*J`` and time as the dimensionless ``tau = J*t``. The only
free parameter of the array besides its size is the gradient ``alpha``, the
per-site detuning divided by ``J``.
"""
from dataclasses import dataclass
import math

import numpy as np


@dataclass(frozen=True)
class LatticeParams:
    """Finite array of ``num_sites`` guides labelled ``site_origin, site_origin+1, ...``.

    The absolute labels matter: the on-site detuning of guide ``p`` is
    ``alpha * p``. Shifting the origin only adds a constant to the Hamiltonian.
    """

    num_sites: int
    alpha: float
    site_origin: int = 1

    def __post_init__(self):
        if int(self.num_sites) != self.num_sites or self.num_sites < 2:
            raise ValueError(f"num_sites must be an integer >= 2, got {self.num_sites!r}")
        if not math.isfinite(self.alpha) or self.alpha < 0:
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha!r}")
        if int(self.site_origin) != self.site_origin:
            raise ValueError(f"site_origin must be an integer, got {self.site_origin!r}")

    @property
    def sites(self) -> np.ndarray:
        """Integer site labels of the array."""
        return np.arange(self.site_origin, self.site_origin + self.num_sites)


def build_hamiltonian(params: LatticeParams) -> np.ndarray:
    """Dense ``H / (hbar J)`` of the array with open boundaries.

    Diagonal entries are ``alpha * p`` for the site labels ``p``; the first
    off-diagonals are 1 and everything else is zero.

    Examples
    --------
    >>> build_hamiltonian(LatticeParams(2, 0.5))
    array([[0.5, 1. ],
           [1. , 1. ]])
    """
    diagonal, off_diagonal = tridiagonal_bands(params)
    return np.diag(diagonal) + np.diag(off_diagonal, 1) + np.diag(off_diagonal, -1)


def tridiagonal_bands(params: LatticeParams):
    """Return ``(diagonal, off_diagonal)`` of the Hamiltonian."""
    diagonal = params.alpha * params.sites.astype(float)
    off_diagonal = np.ones(params.num_sites - 1)
    return diagonal, off_diagonal
