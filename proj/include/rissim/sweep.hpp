// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "rissim/stats.hpp"

namespace rissim {

/// Quantities a sweep can scan.  Each variable selects a fixed set of
/// output columns:
///  t, ris_dim          - partition metrics + deviation from the exact model
///  dt                  - temporal correlation of entry pq
///  df                  - frequency correlation
///  snr                 - mean capacity (grid values in dB)
///  K                   - temporal correlation at lag at_dt
///  H_0                 - frequency correlation at spacing at_df
///  max_subarray_side   - deviation + mean capacity at at_snr_db
enum class SweepVariable { Time, TimeLag, FrequencyLag, Snr, RisDim, RicianK, UavHeight, MaxSubArraySide };

SweepVariable sweep_variable_from_name(std::string_view name);
const char* sweep_variable_name(SweepVariable variable);

/// Inclusive arithmetic grid start, start+step, ..., stop.
std::vector<double> sweep_grid(double start, double stop, double step);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Time;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::vector<ModelKind> models{ModelKind::SubArrayGeometry};
    std::optional<int> draws;           ///< overrides scenario.draws
    std::optional<std::uint64_t> seed;  ///< overrides scenario.seed
    AntennaPair pq{1, 1};
    double at_dt = 0.01;      ///< lag [s] for K sweeps
    double at_df = 1.0e6;     ///< spacing [Hz] for H_0 sweeps
    double at_snr_db = 10.0;  ///< SNR [dB] for max_subarray_side sweeps
};

/// Run the sweep and write sweep_<variable>.csv into out_dir (one row per
/// grid point per model, in grid order).  Returns the file path.
std::filesystem::path run_sweep(const Scenario& scenario, const SweepSpec& spec,
                                const std::filesystem::path& out_dir);

}  // namespace rissim
