"""Unit constants for the reporting layer.

The numeric core works in natural units (hbar = k = 1); reports scale by
these constants only at the edges, since differential entropies of
dimensionful variables are convention-laden.
"""

from dataclasses import dataclass

K_BOLTZMANN_SI = 1.380649e-23  # J/K
HBAR_SI = 1.054571817e-34  # J s


@dataclass(frozen=True)
class Units:
    k: float = 1.0
    hbar: float = 1.0
    temperature: float = 1.0

    def __post_init__(self):
        if self.k <= 0 or self.hbar <= 0 or self.temperature <= 0:
            raise ValueError("k, hbar and temperature must all be positive")
