"""Pure-numpy reduction kernels; reference implementation for the compiled core.

Semantics must match ``_kernels.pyx`` exactly: same zero-density cutoff, same
plug-in Riemann convention (no division by the total mass, which is assumed
to be 1 for valid densities).
"""

import numpy as np

# Cells below this are treated as exact zeros (0 ln 0 = 0 convention).
ZERO_DENSITY = 1e-300


def entropy_sum(values, spacing):
    """Plug-in differential entropy  -sum v ln v * spacing  over live cells."""
    v = np.ascontiguousarray(values, dtype=np.float64)
    live = v[v >= ZERO_DENSITY]
    if live.size == 0:
        return 0.0
    return float(-np.sum(live * np.log(live)) * spacing)


def moments(values, origin, spacing):
    """Return (mass, mean, variance) of a sampled density.

    Coordinates are origin + i*spacing.  mean and variance use the plain
    Riemann sums sum(u v)*spacing and sum((u-mean)^2 v)*spacing.
    """
    v = np.ascontiguousarray(values, dtype=np.float64)
    u = origin + spacing * np.arange(v.size, dtype=np.float64)
    mass = float(np.sum(v) * spacing)
    mean = float(np.sum(u * v) * spacing)
    var = float(np.sum((u - mean) ** 2 * v) * spacing)
    return mass, mean, var


def abs2(amplitudes):
    """|z|^2 of a complex array as float64, without intermediate copies of z."""
    z = np.ascontiguousarray(amplitudes, dtype=np.complex128)
    return z.real**2 + z.imag**2
