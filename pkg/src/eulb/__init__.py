"""Entropic uncertainty lower bounds with a decohering quantum memory.

A library plus command-line tool for a two-qubit uncertainty game in which
the memory qubit is one of N qubits relaxing into a common Lorentzian
reservoir.  It computes the measured uncertainty and its lower bounds
(Berta and Adabi forms) from eigendecomposition-based definitions, checks
the reservoir dynamics against independent numerical oracles, and audits a
set of closed-form shortcut expressions for the two reference state
families.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bounds import (
    BoundsRecord,
    MeasurementResult,
    Observable,
    adabi_bound,
    berta_bound,
    bounds_record,
    closed_form_report,
    complementarity,
    conditional_entropy,
    holevo,
    measure,
    mutual_information,
    pauli_x,
    pauli_z,
    post_measurement_state,
    uncertainty_left,
)
from .channel import (
    apply_memory_decay,
    bell_diagonal_initial,
    bell_diagonal_r_vector,
    evolved_bell_diagonal_closed_form,
    evolved_max_entangled,
    max_entangled_initial,
)
from .linalg import (
    binary_entropy,
    eigenvalues_hermitian,
    partial_trace,
    tensor_product,
    validate_density_matrix,
    von_neumann_entropy,
)
from .reservoir import (
    AmplitudeTrajectory,
    ModeGrid,
    Regime,
    RegimeKind,
    ReservoirParams,
    asymptotic_amplitude,
    build_mode_grid,
    classify_regime,
    decay_amplitude,
    discrete_mode_oracle,
    kernel_ode_oracle,
    spectral_density,
)
from .sweep import (
    ConfigError,
    DiscrepancyReport,
    OracleReport,
    SweepConfig,
    SweepOutput,
    discrepancy_report,
    emit_csv,
    figure_preset,
    format_config,
    oracle_report,
    parse_config,
    run_sweep,
)

__all__ = [
    "__version__",
    "AmplitudeTrajectory",
    "BoundsRecord",
    "ConfigError",
    "DiscrepancyReport",
    "MeasurementResult",
    "ModeGrid",
    "Observable",
    "OracleReport",
    "Regime",
    "RegimeKind",
    "ReservoirParams",
    "SweepConfig",
    "SweepOutput",
    "adabi_bound",
    "apply_memory_decay",
    "asymptotic_amplitude",
    "bell_diagonal_initial",
    "bell_diagonal_r_vector",
    "berta_bound",
    "binary_entropy",
    "bounds_record",
    "build_mode_grid",
    "classify_regime",
    "closed_form_report",
    "complementarity",
    "conditional_entropy",
    "decay_amplitude",
    "discrepancy_report",
    "discrete_mode_oracle",
    "eigenvalues_hermitian",
    "emit_csv",
    "evolved_bell_diagonal_closed_form",
    "evolved_max_entangled",
    "figure_preset",
    "format_config",
    "holevo",
    "kernel_ode_oracle",
    "max_entangled_initial",
    "measure",
    "mutual_information",
    "oracle_report",
    "parse_config",
    "partial_trace",
    "pauli_x",
    "pauli_z",
    "post_measurement_state",
    "run_sweep",
    "spectral_density",
    "tensor_product",
    "uncertainty_left",
    "validate_density_matrix",
    "von_neumann_entropy",
]
