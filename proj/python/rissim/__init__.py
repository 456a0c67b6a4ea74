# SPDX-License-Identifier: Apache-2.0
"""Sub-array channel simulator for RIS-assisted UAV-to-vehicle links.

Thin wrapper over the compiled extension: scenario configuration, panel
partitioning, channel matrices, correlation statistics and capacity.
"""
from ._core import (
    ConfigError,
    Scenario,
    capacity,
    channel_matrix,
    component_matrices,
    fraunhofer_distance,
    frequency_cf,
    max_subarray_side,
    mean_capacity,
    model_names,
    modeling_error_db,
    partition_summary,
    preset_names,
    run_preset,
    spatial_temporal_correlation,
    temporal_acf,
)

__all__ = [
    "ConfigError",
    "Scenario",
    "capacity",
    "channel_matrix",
    "component_matrices",
    "fraunhofer_distance",
    "frequency_cf",
    "max_subarray_side",
    "mean_capacity",
    "model_names",
    "modeling_error_db",
    "partition_summary",
    "preset_names",
    "run_preset",
    "spatial_temporal_correlation",
    "temporal_acf",
]

__version__ = "0.1.0"
