// SPDX-License-Identifier: Apache-2.0
#include "rissim/sweep.hpp"

#include <cmath>
#include <string>

#include "rissim/csv.hpp"

namespace rissim {

namespace {

/// Deterministic reflected-component channel matrix (draw 0), in the domain
/// native to the model.
Eigen::MatrixXcd reflected_matrix(const Scenario& scenario, ModelKind model, double t) {
    const SubArrayPartition partition = partition_for(scenario, model, t);
    const RisState state = regulate(scenario, partition, t, 0);
    const ComponentCir cir = ris_component(scenario, partition, state, t);
    return model == ModelKind::SubArrayBeam ? cir.beam_matrix() : cir.matrix();
}

/// Deviation of the model's reflected component from the exact per-element
/// reference, compared in the model's own domain.
double reflected_deviation_db(const Scenario& scenario, ModelKind model, double t) {
    Eigen::MatrixXcd reference = reflected_matrix(scenario, ModelKind::Spherical, t);
    if (model == ModelKind::SubArrayBeam) {
        reference = beam_transform(reference, BeamGrid(scenario.uav.count, scenario.vehicle.count));
    }
    return modeling_error_db(reflected_matrix(scenario, model, t), reference);
}

int integer_grid_value(double value, const char* what) {
    const double rounded = std::round(value);
    if (!(rounded >= 1.0) || std::abs(value - rounded) > 1.0e-6) {
        throw ConfigError(std::string(what) + " sweep values must be positive integers");
    }
    return static_cast<int>(rounded);
}

}  // namespace

SweepVariable sweep_variable_from_name(std::string_view name) {
    if (name == "t") return SweepVariable::Time;
    if (name == "dt") return SweepVariable::TimeLag;
    if (name == "df") return SweepVariable::FrequencyLag;
    if (name == "snr") return SweepVariable::Snr;
    if (name == "ris_dim") return SweepVariable::RisDim;
    if (name == "K") return SweepVariable::RicianK;
    if (name == "H_0") return SweepVariable::UavHeight;
    if (name == "max_subarray_side") return SweepVariable::MaxSubArraySide;
    throw ConfigError("unknown sweep variable '" + std::string(name) +
                      "' (expected one of: t, dt, df, snr, ris_dim, K, H_0, max_subarray_side)");
}

const char* sweep_variable_name(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::Time: return "t";
        case SweepVariable::TimeLag: return "dt";
        case SweepVariable::FrequencyLag: return "df";
        case SweepVariable::Snr: return "snr";
        case SweepVariable::RisDim: return "ris_dim";
        case SweepVariable::RicianK: return "K";
        case SweepVariable::UavHeight: return "H_0";
        case SweepVariable::MaxSubArraySide: return "max_subarray_side";
    }
    throw ConfigError("unknown sweep variable");
}

std::vector<double> sweep_grid(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw ConfigError("sweep bounds must be finite");
    }
    if (!(step > 0.0)) throw ConfigError("sweep step must be > 0");
    if (stop < start) throw ConfigError("sweep stop must be >= start");
    const double span = (stop - start) / step;
    if (span > 1.0e6) throw ConfigError("sweep grid exceeds 1e6 points");
    const std::size_t count = static_cast<std::size_t>(std::floor(span + 1.0e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

std::filesystem::path run_sweep(const Scenario& base, const SweepSpec& spec,
                                const std::filesystem::path& out_dir) {
    Scenario scenario = base;
    if (spec.draws) scenario.draws = *spec.draws;
    if (spec.seed) scenario.seed = *spec.seed;
    validate(scenario);
    if (spec.models.empty()) throw ConfigError("sweep needs at least one model");
    const std::vector<double> grid = sweep_grid(spec.start, spec.stop, spec.step);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path file =
        out_dir / ("sweep_" + std::string(sweep_variable_name(spec.variable)) + ".csv");
    CsvWriter csv(file);

    const double carrier_hz = kSpeedOfLight / scenario.wavelength;
    switch (spec.variable) {
        case SweepVariable::Time: {
            csv.row("model", "t", "side", "num_x", "num_z", "subarray_count", "error_db");
            for (const double t : grid) {
                for (const ModelKind model : spec.models) {
                    const SubArrayPartition part = partition_for(scenario, model, t);
                    csv.row(model_name(model), t, part.side, part.num_x(), part.num_z(),
                            part.total(), reflected_deviation_db(scenario, model, t));
                }
            }
            break;
        }
        case SweepVariable::TimeLag: {
            csv.row("model", "dt", "acf_abs", "acf_re", "acf_im", "acf_se");
            std::vector<CorrelationSeries> series;
            series.reserve(spec.models.size());
            for (const ModelKind model : spec.models) {
                series.push_back(temporal_acf(scenario, model, spec.pq, scenario.time,
                                              std::span<const double>(grid), scenario.draws));
            }
            for (std::size_t i = 0; i < grid.size(); ++i) {
                for (std::size_t m = 0; m < spec.models.size(); ++m) {
                    const CorrelationPoint& pt = series[m].points[i];
                    csv.row(model_name(spec.models[m]), pt.axis, std::abs(pt.value),
                            pt.value.real(), pt.value.imag(), pt.se_abs);
                }
            }
            break;
        }
        case SweepVariable::FrequencyLag: {
            csv.row("model", "df_hz", "fcf_abs", "fcf_re", "fcf_im");
            for (const double df : grid) {
                for (const ModelKind model : spec.models) {
                    const std::complex<double> cf = frequency_cf_via_transfer(
                        scenario, model, spec.pq, scenario.time, df, carrier_hz, scenario.draws);
                    csv.row(model_name(model), df, std::abs(cf), cf.real(), cf.imag());
                }
            }
            break;
        }
        case SweepVariable::Snr: {
            csv.row("model", "snr_db", "capacity_bps_hz");
            for (const double snr_db : grid) {
                const double snr = std::pow(10.0, snr_db / 10.0);
                for (const ModelKind model : spec.models) {
                    csv.row(model_name(model), snr_db,
                            mean_capacity(scenario, model, scenario.time, snr, scenario.draws));
                }
            }
            break;
        }
        case SweepVariable::RisDim: {
            csv.row("model", "ris_dim", "side", "subarray_count", "error_db");
            for (const double value : grid) {
                const int dim = integer_grid_value(value, "ris_dim");
                Scenario dimmed = scenario;
                dimmed.ris.elements_x = dim;
                dimmed.ris.elements_z = dim;
                for (const ModelKind model : spec.models) {
                    const SubArrayPartition part = partition_for(dimmed, model, dimmed.time);
                    csv.row(model_name(model), dim, part.side, part.total(),
                            reflected_deviation_db(dimmed, model, dimmed.time));
                }
            }
            break;
        }
        case SweepVariable::RicianK: {
            csv.row("model", "K", "acf_abs", "acf_se");
            for (const double k : grid) {
                if (!(k >= 0.0)) throw ConfigError("K sweep values must be >= 0");
                Scenario mixed = scenario;
                mixed.rician_k = k;
                for (const ModelKind model : spec.models) {
                    const CorrelationEstimate est = spatial_temporal_correlation(
                        mixed, model, spec.pq, spec.pq, mixed.time, spec.at_dt, mixed.draws);
                    csv.row(model_name(model), k, std::abs(est.value), est.se_abs);
                }
            }
            break;
        }
        case SweepVariable::UavHeight: {
            csv.row("model", "h0_m", "fcf_abs", "fcf_re", "fcf_im");
            for (const double h0 : grid) {
                if (!(h0 >= 0.0)) throw ConfigError("H_0 sweep values must be >= 0");
                Scenario lifted = scenario;
                lifted.uav_height = h0;
                for (const ModelKind model : spec.models) {
                    const std::complex<double> cf =
                        frequency_cf_via_transfer(lifted, model, spec.pq, lifted.time, spec.at_df,
                                                  carrier_hz, lifted.draws);
                    csv.row(model_name(model), h0, std::abs(cf), cf.real(), cf.imag());
                }
            }
            break;
        }
        case SweepVariable::MaxSubArraySide: {
            csv.row("model", "side", "subarray_count", "error_db", "capacity_bps_hz");
            const double snr = std::pow(10.0, spec.at_snr_db / 10.0);
            for (const double value : grid) {
                const int side = integer_grid_value(value, "max_subarray_side");
                Scenario forced = scenario;
                forced.forced_max_side = side;
                for (const ModelKind model : spec.models) {
                    const SubArrayPartition part = partition_for(forced, model, forced.time);
                    csv.row(model_name(model), part.side, part.total(),
                            reflected_deviation_db(forced, model, forced.time),
                            mean_capacity(forced, model, forced.time, snr, forced.draws));
                }
            }
            break;
        }
    }
    csv.flush();
    return file;
}

}  // namespace rissim
