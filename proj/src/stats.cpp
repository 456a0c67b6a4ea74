// SPDX-License-Identifier: Apache-2.0
#include "rissim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>

#include "rissim/parallel.hpp"

namespace rissim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phasor(double phase) { return {std::cos(phase), std::sin(phase)}; }

/// Power weights of the two channel components.
struct RicianWeights {
    double ris = 0.5;
    double nlos = 0.5;
};

RicianWeights rician_weights(double k) { return {k / (k + 1.0), 1.0 / (k + 1.0)}; }

void validate_pair(const Scenario& scenario, AntennaPair pq, const char* label) {
    if (pq.p < 1 || pq.p > scenario.uav.count) {
        throw std::domain_error(std::string(label) + " transmit index " + std::to_string(pq.p) +
                                " outside [1, " + std::to_string(scenario.uav.count) + "]");
    }
    if (pq.q < 1 || pq.q > scenario.vehicle.count) {
        throw std::domain_error(std::string(label) + " receive index " + std::to_string(pq.q) +
                                " outside [1, " + std::to_string(scenario.vehicle.count) + "]");
    }
}

void validate_time(double value, const char* label) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(label) + " must be finite");
    }
}

std::complex<double> entry_for(const ComponentCir& cir, ModelKind model, AntennaPair pq) {
    return model == ModelKind::SubArrayBeam ? cir.beam_entry(pq.p, pq.q) : cir.entry(pq.p, pq.q);
}

std::complex<double> tap_gain_for(const ComponentCir& cir, const TapGroup& tap, ModelKind model,
                                  AntennaPair pq) {
    return model == ModelKind::SubArrayBeam ? cir.tap_beam_entry(tap, pq.p, pq.q)
                                            : ComponentCir::tap_entry(tap, pq.p, pq.q);
}

/// Second moments of one component between probe a at time t and probe b at
/// time t + dt: E[x conj(y)], E|x|^2, E|y|^2.
struct Moments {
    std::complex<double> num{0.0, 0.0};
    double pow_a = 0.0;
    double pow_b = 0.0;
};

}  // namespace

CorrelationEstimate spatial_temporal_correlation(const Scenario& scenario, ModelKind model,
                                                 AntennaPair a, AntennaPair b, double t, double dt,
                                                 int draws) {
    validate_pair(scenario, a, "first");
    validate_pair(scenario, b, "second");
    validate_time(t, "time");
    validate_time(dt, "time lag");
    if (draws < 1) throw std::domain_error("draw count must be >= 1");

    // Self-correlation at zero lag is 1 by definition; the estimator below
    // only reproduces it up to rounding, so resolve it exactly here.
    if (a.p == b.p && a.q == b.q && dt == 0.0) return {{1.0, 0.0}, 0.0};

    const RicianWeights weights = rician_weights(scenario.rician_k);
    const bool ris_varies = scenario.phase_policy == PhasePolicy::Random && weights.ris > 0.0;
    // One partition serves both instants so sub-arrays pair up across the lag.
    const SubArrayPartition partition = partition_for(scenario, model, t);

    Moments ris_fixed;
    if (weights.ris > 0.0 && !ris_varies) {
        const RisState state_a = regulate(scenario, partition, t, 0);
        const RisState state_b = regulate(scenario, partition, t + dt, 0);
        const std::complex<double> x =
            entry_for(ris_component(scenario, partition, state_a, t), model, a);
        const std::complex<double> y =
            entry_for(ris_component(scenario, partition, state_b, t + dt), model, b);
        ris_fixed = {x * std::conj(y), std::norm(x), std::norm(y)};
    }

    // The reflected entry is linear in the per-sub-array reflection
    // phasors and the underlying geometry does not depend on the draw, so
    // precompute each sub-array's contribution to both probes once and
    // synthesize draws from the phase vector alone.
    std::vector<std::complex<double>> ris_coef_a;
    std::vector<std::complex<double>> ris_coef_b;
    if (ris_varies) {
        RisState flat;
        flat.amplitude.assign(static_cast<std::size_t>(partition.total()), scenario.ris_amplitude);
        flat.phase.assign(static_cast<std::size_t>(partition.total()), 0.0);
        const ComponentCir cir_a = ris_component(scenario, partition, flat, t);
        const ComponentCir cir_b = ris_component(scenario, partition, flat, t + dt);
        ris_coef_a.reserve(cir_a.taps.size());
        ris_coef_b.reserve(cir_b.taps.size());
        for (const TapGroup& tap : cir_a.taps) ris_coef_a.push_back(tap_gain_for(cir_a, tap, model, a));
        for (const TapGroup& tap : cir_b.taps) ris_coef_b.push_back(tap_gain_for(cir_b, tap, model, b));
    }

    const std::size_t n = static_cast<std::size_t>(draws);
    std::vector<std::complex<double>> ris_num(ris_varies ? n : 0);
    std::vector<double> ris_pow_a(ris_varies ? n : 0);
    std::vector<double> ris_pow_b(ris_varies ? n : 0);
    std::vector<std::complex<double>> nlos_num(n);
    std::vector<double> nlos_pow_a(n);
    std::vector<double> nlos_pow_b(n);

    parallel_for(n, [&](std::size_t d) {
        const ClusterSet clusters = draw_clusters(scenario, d);
        const ComponentCir nlos_a = nlos_component(scenario, clusters, t);
        const std::complex<double> x = entry_for(nlos_a, model, a);
        const std::complex<double> y =
            dt == 0.0 ? entry_for(nlos_a, model, b)
                      : entry_for(nlos_component(scenario, clusters, t + dt), model, b);
        nlos_num[d] = x * std::conj(y);
        nlos_pow_a[d] = std::norm(x);
        nlos_pow_b[d] = std::norm(y);
        if (ris_varies) {
            // One panel state per draw, shared by both instants.
            const RisState state = regulate(scenario, partition, t, d);
            std::complex<double> rx{0.0, 0.0};
            std::complex<double> ry{0.0, 0.0};
            for (std::size_t s = 0; s < ris_coef_a.size(); ++s) {
                const std::complex<double> phasor = unit_phasor(state.phase[s]);
                rx += phasor * ris_coef_a[s];
                ry += phasor * ris_coef_b[s];
            }
            ris_num[d] = rx * std::conj(ry);
            ris_pow_a[d] = std::norm(rx);
            ris_pow_b[d] = std::norm(ry);
        }
    });

    // Each component is normalized by its own mean power, then the two
    // normalized correlations are mixed with the Rician power weights.
    const auto combine = [&](std::size_t lo, std::size_t hi) -> std::optional<std::complex<double>> {
        std::complex<double> value{0.0, 0.0};
        if (weights.ris > 0.0) {
            Moments m = ris_fixed;
            if (ris_varies) {
                const std::size_t len = hi - lo;
                m.num = pairwise_mean(std::span<const std::complex<double>>(ris_num).subspan(lo, len));
                m.pow_a = pairwise_mean(std::span<const double>(ris_pow_a).subspan(lo, len));
                m.pow_b = pairwise_mean(std::span<const double>(ris_pow_b).subspan(lo, len));
            }
            const double denom = m.pow_a * m.pow_b;
            if (!(denom > 0.0)) return std::nullopt;
            value += weights.ris * m.num / std::sqrt(denom);
        }
        {
            const std::size_t len = hi - lo;
            const std::complex<double> num =
                pairwise_mean(std::span<const std::complex<double>>(nlos_num).subspan(lo, len));
            const double pow_a = pairwise_mean(std::span<const double>(nlos_pow_a).subspan(lo, len));
            const double pow_b = pairwise_mean(std::span<const double>(nlos_pow_b).subspan(lo, len));
            const double denom = pow_a * pow_b;
            if (!(denom > 0.0)) return std::nullopt;
            value += weights.nlos * num / std::sqrt(denom);
        }
        return value;
    };

    const std::optional<std::complex<double>> value = combine(0, n);
    if (!value) throw std::domain_error("zero-power component in correlation normalization");

    double se = 0.0;
    const std::size_t batches = std::min<std::size_t>(20, n);
    if (batches >= 2) {
        std::vector<double> magnitudes;
        magnitudes.reserve(batches);
        for (std::size_t i = 0; i < batches; ++i) {
            const std::size_t lo = n * i / batches;
            const std::size_t hi = n * (i + 1) / batches;
            if (const auto batch = combine(lo, hi)) magnitudes.push_back(std::abs(*batch));
        }
        if (magnitudes.size() >= 2) {
            const double count = static_cast<double>(magnitudes.size());
            double mean = 0.0;
            for (const double m : magnitudes) mean += m;
            mean /= count;
            double variance = 0.0;
            for (const double m : magnitudes) variance += (m - mean) * (m - mean);
            variance /= count - 1.0;
            se = std::sqrt(variance / count);
        }
    }
    return {*value, se};
}

CorrelationSeries temporal_acf(const Scenario& scenario, ModelKind model, AntennaPair pq, double t,
                               std::span<const double> dt_grid, int draws) {
    for (std::size_t i = 0; i < dt_grid.size(); ++i) {
        validate_time(dt_grid[i], "time lag");
        if (i > 0 && !(dt_grid[i] > dt_grid[i - 1])) {
            throw std::domain_error("time-lag grid must be strictly increasing");
        }
    }
    CorrelationSeries series;
    series.axis = "dt";
    series.model = model;
    series.draws = draws;
    series.points.reserve(dt_grid.size());
    for (const double dt : dt_grid) {
        const CorrelationEstimate est =
            spatial_temporal_correlation(scenario, model, pq, pq, t, dt, draws);
        series.points.push_back({dt, est.value, est.se_abs});
    }
    return series;
}

std::complex<double> transfer_function(const Scenario& scenario, ModelKind model, AntennaPair pq,
                                       double t, double frequency_hz, std::uint64_t draw_index) {
    validate_pair(scenario, pq, "probe");
    validate_time(t, "time");
    if (!std::isfinite(frequency_hz) || frequency_hz < 0.0) {
        throw std::domain_error("frequency must be finite and >= 0");
    }
    const RicianWeights weights = rician_weights(scenario.rician_k);
    const SubArrayPartition partition = partition_for(scenario, model, t);
    const RisState state = regulate(scenario, partition, t, draw_index);
    const ComponentCir ris = ris_component(scenario, partition, state, t);
    const ComponentCir nlos =
        nlos_component(scenario, draw_clusters(scenario, draw_index), t);

    std::complex<double> acc{0.0, 0.0};
    const double ris_amp = std::sqrt(weights.ris);
    for (const TapGroup& tap : ris.taps) {
        acc += ris_amp * tap_gain_for(ris, tap, model, pq) *
               unit_phasor(-kTwoPi * frequency_hz * tap.delay_s);
    }
    const double nlos_amp = std::sqrt(weights.nlos);
    for (const TapGroup& tap : nlos.taps) {
        acc += nlos_amp * tap_gain_for(nlos, tap, model, pq) *
               unit_phasor(-kTwoPi * frequency_hz * tap.delay_s);
    }
    return acc;
}

std::complex<double> frequency_cf(const Scenario& scenario, AntennaPair pq, double t, double df_hz,
                                  std::uint64_t draw_index) {
    validate_pair(scenario, pq, "probe");
    validate_time(t, "time");
    if (!std::isfinite(df_hz) || df_hz < 0.0) {
        throw std::domain_error("frequency spacing must be finite and >= 0");
    }
    const RicianWeights weights = rician_weights(scenario.rician_k);
    const Vec3 uav = terminal_position(Side::Uav, scenario, t);
    const Vec3 vehicle = terminal_position(Side::Vehicle, scenario, t);
    const double panel_delay =
        (norm(scenario.ris.center - uav) + norm(scenario.ris.center - vehicle)) / kSpeedOfLight;

    std::complex<double> acc = weights.ris * unit_phasor(-kTwoPi * df_hz * panel_delay);
    const ClusterSet clusters = draw_clusters(scenario, draw_index);
    std::complex<double> scattered{0.0, 0.0};
    for (const ClusterSet::Cluster& cluster : clusters.clusters) {
        const double delay =
            (norm(cluster.center - uav) + norm(cluster.center - vehicle)) / kSpeedOfLight;
        scattered += unit_phasor(-kTwoPi * df_hz * delay);
    }
    acc += weights.nlos * scattered / static_cast<double>(clusters.clusters.size());
    return acc;
}

std::complex<double> frequency_cf_via_transfer(const Scenario& scenario, ModelKind model,
                                               AntennaPair pq, double t, double df_hz,
                                               double base_frequency_hz, int draws) {
    validate_pair(scenario, pq, "probe");
    validate_time(t, "time");
    if (!std::isfinite(df_hz) || df_hz < 0.0) {
        throw std::domain_error("frequency spacing must be finite and >= 0");
    }
    if (!std::isfinite(base_frequency_hz) || base_frequency_hz < 0.0) {
        throw std::domain_error("base frequency must be finite and >= 0");
    }
    if (draws < 1) throw std::domain_error("draw count must be >= 1");

    const RicianWeights weights = rician_weights(scenario.rician_k);
    // Per-tap product of transfer-function terms at the two frequencies:
    // conj(g e^{-j2pi f tau}) * g e^{-j2pi (f+df) tau} = |g|^2 e^{j(phi2-phi1)}.
    const auto tap_moments = [&](const ComponentCir& cir) {
        Moments m;
        for (const TapGroup& tap : cir.taps) {
            const double power = std::norm(tap_gain_for(cir, tap, model, pq));
            const double phi1 = -kTwoPi * base_frequency_hz * tap.delay_s;
            const double phi2 = -kTwoPi * (base_frequency_hz + df_hz) * tap.delay_s;
            m.num += power * unit_phasor(phi2 - phi1);
            m.pow_a += power;
        }
        return m;
    };

    std::complex<double> value{0.0, 0.0};
    if (weights.ris > 0.0) {
        // Tap powers and delays do not depend on the reflection phases, so
        // one draw represents every draw.
        const SubArrayPartition partition = partition_for(scenario, model, t);
        const RisState state = regulate(scenario, partition, t, 0);
        const Moments m = tap_moments(ris_component(scenario, partition, state, t));
        if (!(m.pow_a > 0.0)) throw std::domain_error("reflected component has zero power");
        value += weights.ris * m.num / m.pow_a;
    }
    const std::size_t n = static_cast<std::size_t>(draws);
    std::vector<std::complex<double>> num(n);
    std::vector<double> den(n);
    parallel_for(n, [&](std::size_t d) {
        const Moments m = tap_moments(nlos_component(scenario, draw_clusters(scenario, d), t));
        num[d] = m.num;
        den[d] = m.pow_a;
    });
    const std::complex<double> num_sum = pairwise_sum(std::span<const std::complex<double>>(num));
    const double den_sum = pairwise_sum(std::span<const double>(den));
    if (!(den_sum > 0.0)) throw std::domain_error("scattered component has zero power");
    value += weights.nlos * num_sum / den_sum;
    return value;
}

double capacity(const Eigen::MatrixXcd& channel, double snr, int tx_count) {
    if (!std::isfinite(snr) || snr < 0.0) throw std::domain_error("snr must be finite and >= 0");
    if (tx_count < 1) throw std::domain_error("transmit antenna count must be >= 1");
    if (channel.rows() == 0 || channel.cols() == 0) throw std::domain_error("empty channel matrix");
    if (!channel.allFinite()) throw std::domain_error("channel matrix has non-finite entries");
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(channel.rows(), channel.rows());
    gram.noalias() += (snr / tx_count) * channel * channel.adjoint();
    const Eigen::LLT<Eigen::MatrixXcd> llt(gram);
    if (llt.info() != Eigen::Success) {
        throw std::domain_error("capacity factorization failed");
    }
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        log_det += std::log(std::real(llt.matrixLLT()(i, i)));
    }
    return 2.0 * log_det / std::numbers::ln2;
}

double mean_capacity(const Scenario& scenario, ModelKind model, double t, double snr, int draws) {
    validate_time(t, "time");
    if (draws < 1) throw std::domain_error("draw count must be >= 1");
    const RicianWeights weights = rician_weights(scenario.rician_k);
    const double ris_amp = std::sqrt(weights.ris);
    const double nlos_amp = std::sqrt(weights.nlos);
    const bool beam = model == ModelKind::SubArrayBeam;
    const bool ris_varies = scenario.phase_policy == PhasePolicy::Random;
    const SubArrayPartition partition = partition_for(scenario, model, t);

    Eigen::MatrixXcd ris_fixed;
    if (!ris_varies) {
        const ComponentCir cir =
            ris_component(scenario, partition, regulate(scenario, partition, t, 0), t);
        ris_fixed = beam ? cir.beam_matrix() : cir.matrix();
    }

    const std::size_t n = static_cast<std::size_t>(draws);
    std::vector<double> capacities(n);
    parallel_for(n, [&](std::size_t d) {
        const ComponentCir nlos = nlos_component(scenario, draw_clusters(scenario, d), t);
        Eigen::MatrixXcd combined = nlos_amp * (beam ? nlos.beam_matrix() : nlos.matrix());
        if (ris_varies) {
            const ComponentCir cir =
                ris_component(scenario, partition, regulate(scenario, partition, t, d), t);
            combined.noalias() += ris_amp * (beam ? cir.beam_matrix() : cir.matrix());
        } else {
            combined.noalias() += ris_amp * ris_fixed;
        }
        capacities[d] = capacity(combined, snr, scenario.uav.count);
    });
    return pairwise_mean(std::span<const double>(capacities));
}

double modeling_error_db(const Eigen::MatrixXcd& model, const Eigen::MatrixXcd& reference) {
    if (model.rows() != reference.rows() || model.cols() != reference.cols()) {
        throw std::domain_error("model and reference channel dimensions differ");
    }
    double sum = 0.0;
    for (Eigen::Index col = 0; col < reference.cols(); ++col) {
        for (Eigen::Index row = 0; row < reference.rows(); ++row) {
            const double ref_mag = std::abs(reference(row, col));
            if (ref_mag == 0.0) {
                throw std::domain_error("reference channel entry with zero magnitude");
            }
            sum += std::abs(model(row, col) - reference(row, col)) / ref_mag;
        }
    }
    if (sum == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sum);
}

}  // namespace rissim
