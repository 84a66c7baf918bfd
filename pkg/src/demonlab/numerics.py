"""Grid-based 1-D quantum states and the position/momentum transform.

All states live on a uniform spatial grid in natural units (hbar = 1).
The momentum representation uses the unitary convention

    phi(p) = (2 pi)^(-1/2) integral psi(x) exp(-i p x) dx,

discretized with the FFT on a symmetric momentum grid centered at 0, so
Parseval holds to machine precision.  Values are immutable after
construction and every operation is a pure function.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kernels import abs2, moments

# Constructor / transform tolerances.
NORM_TOL = 1e-10
PARSEVAL_TOL = 1e-8
DENSITY_TOL = 1e-8

# A box must occupy at most 1/8 of the grid extent: sharp truncation makes
# slowly decaying momentum tails, and the padding keeps their aliasing small.
BOX_PADDING = 8.0

# Truncated states carry 1/p^2 momentum tails; reject grids whose estimated
# off-grid tail mass exceeds this.  (Smooth states come out near zero.)
TAIL_MASS_LIMIT = 1e-3

BOX_MASS_MIN = 0.99
MIN_SIDE_MASS = 1e-6

_SIDES = ("left", "right")


@dataclass(frozen=True)
class Grid:
    """Uniform spatial grid: n points x_i = x_min + i*dx, dx = (x_max-x_min)/n."""

    n: int
    x_min: float
    x_max: float

    def __post_init__(self):
        if self.n <= 0 or (self.n & (self.n - 1)) != 0:
            raise ValueError(f"grid size must be a positive power of two, got {self.n}")
        if not self.x_max > self.x_min:
            raise ValueError(f"need x_max > x_min, got [{self.x_min}, {self.x_max}]")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n

    @property
    def x(self) -> np.ndarray:
        """Sample coordinates."""
        return self.x_min + self.dx * np.arange(self.n)

    @property
    def dp(self) -> float:
        """Momentum spacing 2 pi / (n dx) of the conjugate grid (hbar = 1)."""
        return 2.0 * math.pi / (self.n * self.dx)

    @property
    def p(self) -> np.ndarray:
        """Conjugate momentum coordinates, centered at 0."""
        return (np.arange(self.n) - self.n // 2) * self.dp


@dataclass(frozen=True)
class WaveFunction:
    """Normalized complex amplitudes psi(x_i) on a Grid.

    The constructor enforces sum |psi|^2 dx = 1 within ``NORM_TOL``; use the
    ``make_*`` constructors to build normalized states.
    """

    grid: Grid
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.grid.n,):
            raise ValueError(
                f"amplitudes shape {amps.shape} does not match grid size {self.grid.n}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        norm = float(np.sum(abs2(amps))) * self.grid.dx
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"wavefunction not normalized: sum |psi|^2 dx = {norm!r}")


@dataclass(frozen=True)
class MomentumAmplitudes:
    """Complex amplitudes phi(p_j) on the symmetric momentum grid.

    p_j = (j - n/2) * dp; Parseval (sum |phi|^2 dp = 1) is enforced within
    ``PARSEVAL_TOL``.
    """

    dp: float
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("momentum amplitudes must be a nonempty 1-D array")
        if self.dp <= 0:
            raise ValueError(f"momentum spacing must be positive, got {self.dp}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        norm = float(np.sum(abs2(amps))) * self.dp
        if abs(norm - 1.0) > PARSEVAL_TOL:
            raise ValueError(f"Parseval violated: sum |phi|^2 dp = {norm!r}")

    @property
    def n(self) -> int:
        return self.amplitudes.size

    @property
    def p(self) -> np.ndarray:
        """Momentum coordinates."""
        return (np.arange(self.n) - self.n // 2) * self.dp


@dataclass(frozen=True)
class Density:
    """Nonnegative sampled probability density with uniform spacing.

    values[i] sits at coordinate origin + i*spacing; sum(values)*spacing
    must be 1 within ``DENSITY_TOL``.
    """

    values: np.ndarray
    spacing: float
    origin: float

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("density values must be a nonempty 1-D array")
        if self.spacing <= 0:
            raise ValueError(f"density spacing must be positive, got {self.spacing}")
        if np.any(vals < 0.0):
            raise ValueError("density values must be nonnegative")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        mass = float(np.sum(vals)) * self.spacing
        if abs(mass - 1.0) > DENSITY_TOL:
            raise ValueError(f"density not normalized: total mass = {mass!r}")

    @property
    def coordinates(self) -> np.ndarray:
        return self.origin + self.spacing * np.arange(self.values.size)


@dataclass(frozen=True)
class BoxSpec:
    """Confining box [a, b] of length L = b - a (1-D stand-in for the volume)."""

    a: float
    b: float

    def __post_init__(self):
        if not self.b > self.a:
            raise ValueError(f"need b > a, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


def centered_box(length: float) -> BoxSpec:
    """Box of the given length centered at the origin."""
    if length <= 0:
        raise ValueError(f"box length must be positive, got {length}")
    return BoxSpec(-0.5 * length, 0.5 * length)


def check_box_fits(grid: Grid, box: BoxSpec) -> None:
    """Require the box inside the grid with padding factor >= BOX_PADDING."""
    fuzz = 1e-12 * (grid.x_max - grid.x_min)
    if box.a < grid.x_min - fuzz or box.b > grid.x_max + fuzz:
        raise ValueError(
            f"box [{box.a}, {box.b}] not inside grid [{grid.x_min}, {grid.x_max}]"
        )
    if (grid.x_max - grid.x_min) + fuzz < BOX_PADDING * box.length:
        raise ValueError(
            f"grid extent {grid.x_max - grid.x_min} must pad the box by a factor "
            f">= {BOX_PADDING} (box length {box.length})"
        )


def _normalized(grid: Grid, raw: np.ndarray) -> WaveFunction:
    norm = math.sqrt(float(np.sum(abs2(raw))) * grid.dx)
    if norm <= 0.0:
        raise ValueError("cannot normalize a null state")
    return WaveFunction(grid, raw / norm)


def make_gaussian(
    grid: Grid, center: float, sigma_x: float, momentum: float = 0.0
) -> WaveFunction:
    """Minimum-uncertainty Gaussian: |psi|^2 has std sigma_x, optional plane-wave
    modulation exp(i*momentum*x) shifting the momentum density to ``momentum``.

    The analytic profile is evaluated and then renormalized on the grid, so
    no quadrature drift enters the normalization.

    Raises
    ------
    ValueError
        If sigma_x <= 0 or [center - 6 sigma, center + 6 sigma] sticks out of
        the grid (tail truncation would break the normalization tolerance).
    """
    if sigma_x <= 0:
        raise ValueError(f"sigma_x must be positive, got {sigma_x}")
    if center - 6.0 * sigma_x < grid.x_min or center + 6.0 * sigma_x > grid.x_max:
        raise ValueError(
            f"Gaussian with center {center}, sigma {sigma_x} needs "
            f"[{center - 6 * sigma_x}, {center + 6 * sigma_x}] inside the grid "
            f"[{grid.x_min}, {grid.x_max}]"
        )
    x = grid.x
    raw = (2.0 * math.pi * sigma_x**2) ** (-0.25) * np.exp(
        -((x - center) ** 2) / (4.0 * sigma_x**2)
    )
    if momentum != 0.0:
        raw = raw * np.exp(1j * momentum * x)
    return _normalized(grid, raw.astype(np.complex128))


def make_box_eigenstate(grid: Grid, box: BoxSpec, quantum_number: int) -> WaveFunction:
    """Infinite-well eigenstate sqrt(2/L) sin(q pi (x-a)/L) inside [a, b], zero outside."""
    if quantum_number < 1:
        raise ValueError(f"quantum number must be >= 1, got {quantum_number}")
    check_box_fits(grid, box)
    x = grid.x
    L = box.length
    inside = (x >= box.a) & (x <= box.b)
    raw = np.zeros(grid.n, dtype=np.complex128)
    raw[inside] = math.sqrt(2.0 / L) * np.sin(
        quantum_number * math.pi * (x[inside] - box.a) / L
    )
    return _normalized(grid, raw)


def position_density(wf: WaveFunction) -> Density:
    """|psi(x)|^2 as a Density on the spatial grid."""
    return Density(abs2(wf.amplitudes), wf.grid.dx, wf.grid.x_min)


def momentum_density(mom: MomentumAmplitudes) -> Density:
    """|phi(p)|^2 as a Density on the momentum grid."""
    return Density(abs2(mom.amplitudes), mom.dp, -(mom.n // 2) * mom.dp)


def momentum_tail_mass(mom: MomentumAmplitudes) -> float:
    """Estimate the probability mass beyond the momentum grid.

    Fits C = |phi|^2 p^2 over the outermost decade |p| in [p_max/10, p_max]
    (truncated states decay like 1/p^2 there) and extrapolates
    2*C/p_max for the two off-grid tails.
    """
    rho = abs2(mom.amplitudes)
    p = mom.p
    p_max = (mom.n // 2) * mom.dp
    outer = np.abs(p) >= 0.1 * p_max
    c = float(np.median(rho[outer] * p[outer] ** 2))
    return 2.0 * c / p_max


def to_momentum(wf: WaveFunction) -> MomentumAmplitudes:
    """Unitary transform psi(x) -> phi(p) on the centered momentum grid.

    Raises
    ------
    ValueError
        If the estimated off-grid momentum tail mass exceeds
        ``TAIL_MASS_LIMIT`` (grid too coarse for this state).
    """
    grid = wf.grid
    shifted = np.fft.fftshift(np.fft.fft(wf.amplitudes))
    phi = (grid.dx / math.sqrt(2.0 * math.pi)) * np.exp(-1j * grid.p * grid.x_min) * shifted
    mom = MomentumAmplitudes(grid.dp, phi)
    tail = momentum_tail_mass(mom)
    if tail > TAIL_MASS_LIMIT:
        raise ValueError(
            f"momentum grid too small for this state: estimated off-grid tail "
            f"mass {tail:.3e} exceeds {TAIL_MASS_LIMIT:.0e}; increase n or shrink dx"
        )
    return mom


def from_momentum(mom: MomentumAmplitudes, grid: Grid) -> WaveFunction:
    """Inverse transform phi(p) -> psi(x); exact round trip with to_momentum."""
    if mom.n != grid.n:
        raise ValueError(f"momentum size {mom.n} does not match grid size {grid.n}")
    if not math.isclose(mom.dp, grid.dp, rel_tol=1e-12):
        raise ValueError(f"momentum spacing {mom.dp} does not match grid ({grid.dp})")
    vals = mom.amplitudes * np.exp(1j * grid.p * grid.x_min) * (
        math.sqrt(2.0 * math.pi) / grid.dx
    )
    psi = np.fft.ifft(np.fft.ifftshift(vals))
    return WaveFunction(grid, psi)


def _half_membership(grid: Grid, box: BoxSpec, side: str):
    """Masks (kept cells, shared midpoint cell) for one half of the box.

    A grid node that coincides with the partition position belongs to both
    halves with weight 1/2, so the two side masses always sum to the box mass.
    """
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")
    x = grid.x
    mid = box.midpoint
    eps = 1e-9 * grid.dx
    on_mid = np.abs(x - mid) <= eps
    if side == "left":
        kept = (x >= box.a - eps) & (x < mid) & ~on_mid
    else:
        kept = (x > mid) & (x <= box.b + eps) & ~on_mid
    return kept, on_mid


def box_mass(wf: WaveFunction, box: BoxSpec) -> float:
    """Probability mass inside [a, b]."""
    x = wf.grid.x
    eps = 1e-9 * wf.grid.dx
    inside = (x >= box.a - eps) & (x <= box.b + eps)
    rho = abs2(wf.amplitudes)
    return float(np.sum(rho[inside])) * wf.grid.dx


def half_masses(wf: WaveFunction, box: BoxSpec) -> tuple[float, float]:
    """Probability masses on the (left, right) sides of the partition plane.

    The split is the whole line at the box midpoint, so for any state the
    two masses sum to 1; a node on the plane contributes half of its cell
    to each side.
    """
    rho = abs2(wf.amplitudes)
    x = wf.grid.x
    mid = box.midpoint
    eps = 1e-9 * wf.grid.dx
    on_mid = np.abs(x - mid) <= eps
    shared = 0.5 * float(np.sum(rho[on_mid]))
    left = float(np.sum(rho[(x < mid) & ~on_mid])) + shared
    right = float(np.sum(rho[(x > mid) & ~on_mid])) + shared
    return left * wf.grid.dx, right * wf.grid.dx


def project_half(wf: WaveFunction, box: BoxSpec, side: str) -> WaveFunction:
    """Localize the state to one half of the box and renormalize.

    Amplitudes outside [a, (a+b)/2] (side='left') or [(a+b)/2, b]
    (side='right') are zeroed; a node exactly on the partition keeps its
    amplitude scaled by 1/sqrt(2).

    Raises
    ------
    ValueError
        If less than ``BOX_MASS_MIN`` of the state lives in the box, or the
        chosen side carries no mass (impossible measurement outcome).
    """
    check_box_fits(wf.grid, box)
    contained = box_mass(wf, box)
    if contained < BOX_MASS_MIN:
        raise ValueError(
            f"state has only {contained:.6f} of its mass inside the box; "
            f"project_half needs >= {BOX_MASS_MIN}"
        )
    kept, on_mid = _half_membership(wf.grid, box, side)
    side_mass = half_masses(wf, box)[0 if side == "left" else 1]
    if side_mass <= MIN_SIDE_MASS:
        raise ValueError(
            f"impossible outcome: {side} half carries mass {side_mass:.3e} "
            f"<= {MIN_SIDE_MASS}"
        )
    projected = np.zeros(wf.grid.n, dtype=np.complex128)
    projected[kept] = wf.amplitudes[kept]
    projected[on_mid] = wf.amplitudes[on_mid] / math.sqrt(2.0)
    return _normalized(wf.grid, projected)


def mean(density: Density) -> float:
    """First moment sum(u v)*spacing of a normalized density."""
    _, m, _ = moments(density.values, density.origin, density.spacing)
    return m


def variance(density: Density) -> float:
    """Centered second moment sum((u - mean)^2 v)*spacing."""
    _, _, var = moments(density.values, density.origin, density.spacing)
    return var


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def density_to_csv(density: Density, fh) -> None:
    """Write a density as CSV with columns coordinate,value (12 significant digits)."""
    fh.write("coordinate,value\n")
    for u, v in zip(density.coordinates, density.values):
        fh.write(f"{_fmt(u)},{_fmt(v)}\n")


def wavefunction_to_csv(wf: WaveFunction, fh) -> None:
    """Write a state as CSV with columns coordinate,value (complex literal values)."""
    fh.write("coordinate,value\n")
    for u, z in zip(wf.grid.x, wf.amplitudes):
        fh.write(f"{_fmt(u)},{z.real:.12g}{z.imag:+.12g}j\n")
