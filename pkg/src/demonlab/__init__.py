"""demonlab: entropy bookkeeping for a single molecule in a box.

Position/momentum differential entropies of 1-D wavefunctions, uncertainty-
sum checks, partition-insertion entropy costs (analytic Gaussian model and
literal projection), engine cycle ledgers, free expansion, the no-erase
memory reset, and the aiming bound on momentum-measuring demons.
"""

from .demon import (
    AimReport,
    CycleLedger,
    ExpansionResult,
    MonteCarloResult,
    ResetResult,
    ResetState,
    boltzmann_delta_s,
    free_expansion_entropy,
    monte_carlo_cycles,
    norton_reset,
    speed_demon_feasibility,
    szilard_cycle,
)
from .entropy import (
    EUR_BOUND_LEIPNIK,
    EUR_BOUND_SHARP,
    EntropyReport,
    differential_entropy,
    eur_report,
    gaussian_entropy,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .numerics import (
    BoxSpec,
    Density,
    Grid,
    MomentumAmplitudes,
    WaveFunction,
    box_mass,
    centered_box,
    from_momentum,
    half_masses,
    make_box_eigenstate,
    make_gaussian,
    mean,
    momentum_density,
    position_density,
    project_half,
    to_momentum,
    variance,
)
from .szilard import (
    PartitionComparison,
    PartitionEvent,
    analytic_localization_cost,
    analytic_partition_event,
    gaussian_vs_eigenstate,
    numeric_partition_event,
)
from .units import Units

__version__ = "0.1.0"

__all__ = [
    "AimReport",
    "BoxSpec",
    "CycleLedger",
    "Density",
    "EntropyReport",
    "EUR_BOUND_LEIPNIK",
    "EUR_BOUND_SHARP",
    "ExpansionResult",
    "Grid",
    "KERNEL_BACKEND",
    "MomentumAmplitudes",
    "MonteCarloResult",
    "PartitionComparison",
    "PartitionEvent",
    "ResetResult",
    "ResetState",
    "Units",
    "WaveFunction",
    "analytic_localization_cost",
    "analytic_partition_event",
    "boltzmann_delta_s",
    "box_mass",
    "centered_box",
    "differential_entropy",
    "eur_report",
    "free_expansion_entropy",
    "from_momentum",
    "gaussian_entropy",
    "gaussian_vs_eigenstate",
    "half_masses",
    "make_box_eigenstate",
    "make_gaussian",
    "mean",
    "momentum_density",
    "monte_carlo_cycles",
    "norton_reset",
    "numeric_partition_event",
    "position_density",
    "project_half",
    "speed_demon_feasibility",
    "szilard_cycle",
    "to_momentum",
    "variance",
]
