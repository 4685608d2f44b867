"""Dicke-superradiant emission probes for atoms in 2D optical lattices.

Computes normalized emission peaks P / (N^2 P_single) for a catalog of
bosonic and fermionic lattice states, sudden-quench and adiabatic
transitions, classical-laser drive observables, and validates all closed
forms against an exact-diagonalization oracle on tiny lattices.
"""

from .classical import (
    DriveParameters,
    expected_sigma_z,
    mean_excitations,
    metastable_population,
    metastable_population_partial_condensation,
)
from .correlators import (
    CorrelatorQuery,
    bosonic_four_point,
    dicke_ladder_factor,
    fermionic_four_point,
    mott_correlator,
    neel_correlator,
)
from .distributions import (
    ChemicalPotentialError,
    MomentumDistribution,
    Statistics,
    bose_einstein,
    fermi_dirac,
    metallic,
    partial_condensation,
    superfluid,
    uniform,
)
from .emission import (
    EmissionCurve,
    ProbeGeometry,
    adiabatic_peak,
    bessel_envelope,
    coherent_amplitude,
    emission_curve,
    normalized_peak,
    peak_curve,
    phase_sum,
    quench_peak,
    separable_peak,
)
from .lattice import (
    LatticeSpec,
    Mode,
    adjacency_fourier,
    adjacency_matrix,
    canonical_mode,
    condensate_phase,
    hopping_phase,
    mode_add,
    mode_energy,
    mode_grid,
    mode_neg,
    mode_sub,
)

__version__ = "0.1.0"

__all__ = [
    "ChemicalPotentialError",
    "CorrelatorQuery",
    "DriveParameters",
    "EmissionCurve",
    "LatticeSpec",
    "Mode",
    "MomentumDistribution",
    "ProbeGeometry",
    "Statistics",
    "adiabatic_peak",
    "adjacency_fourier",
    "adjacency_matrix",
    "bessel_envelope",
    "bose_einstein",
    "bosonic_four_point",
    "canonical_mode",
    "coherent_amplitude",
    "condensate_phase",
    "dicke_ladder_factor",
    "emission_curve",
    "expected_sigma_z",
    "fermi_dirac",
    "fermionic_four_point",
    "hopping_phase",
    "mean_excitations",
    "metallic",
    "metastable_population",
    "metastable_population_partial_condensation",
    "mode_add",
    "mode_energy",
    "mode_grid",
    "mode_neg",
    "mode_sub",
    "mott_correlator",
    "neel_correlator",
    "normalized_peak",
    "partial_condensation",
    "peak_curve",
    "phase_sum",
    "quench_peak",
    "separable_peak",
    "superfluid",
    "uniform",
]
