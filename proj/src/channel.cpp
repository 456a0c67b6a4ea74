// SPDX-License-Identifier: Apache-2.0
#include "rissim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rissim/rng.hpp"

namespace rissim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phasor(double phase) { return {std::cos(phase), std::sin(phase)}; }

[[noreturn]] void index_error(const char* what, int value, int count) {
    throw std::domain_error(std::string(what) + " index " + std::to_string(value) +
                            " outside [1, " + std::to_string(count) + "]");
}

void check_pq(int p, int tx_count, int q, int rx_count) {
    if (p < 1 || p > tx_count) index_error("transmit", p, tx_count);
    if (q < 1 || q > rx_count) index_error("receive", q, rx_count);
}

}  // namespace

const char* model_name(ModelKind model) {
    switch (model) {
        case ModelKind::Spherical: return "spherical";
        case ModelKind::Planar: return "planar";
        case ModelKind::SubArrayGeometry: return "subarray";
        case ModelKind::SubArrayBeam: return "beam";
    }
    throw std::domain_error("unknown model kind");
}

ModelKind model_from_name(std::string_view name) {
    if (name == "spherical") return ModelKind::Spherical;
    if (name == "planar") return ModelKind::Planar;
    if (name == "subarray") return ModelKind::SubArrayGeometry;
    if (name == "beam") return ModelKind::SubArrayBeam;
    throw ConfigError("unknown model '" + std::string(name) +
                      "' (expected one of: spherical, planar, subarray, beam)");
}

std::pair<double, double> spatial_frequencies(const AnglePair& angles, const ArraySpec& array,
                                              double wavelength) {
    const double ratio = array.spacing / wavelength;
    const double azi = ratio * std::cos(angles.vertical) * std::cos(array.vertical_tilt) *
                       std::cos(angles.azimuth - array.azimuth_tilt);
    const double ver = ratio * std::sin(angles.vertical) * std::sin(array.vertical_tilt);
    return {azi, ver};
}

Eigen::VectorXcd array_response(int length, double theta_azi, double theta_ver) {
    if (length < 1) throw std::domain_error("array response length must be >= 1");
    Eigen::VectorXcd response(length);
    const double step = kTwoPi * (theta_azi + theta_ver);
    for (int k = 0; k < length; ++k) response(k) = unit_phasor(step * k);
    return response;
}

std::complex<double> dirichlet_sum(int count, double x) {
    if (count < 1) throw std::domain_error("phase sum needs at least one term");
    // Periodic in x with period 1; reduce to |frac| <= 0.5 for accuracy.
    const double frac = x - std::round(x);
    if (std::abs(frac) < 1.0e-4) {
        // Near-singular closed form; the direct sum is exact enough here.
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < count; ++k) acc += unit_phasor(kTwoPi * k * frac);
        return acc;
    }
    const double ratio = std::sin(std::numbers::pi * count * frac) /
                         std::sin(std::numbers::pi * frac);
    return unit_phasor(std::numbers::pi * (count - 1) * frac) * ratio;
}

double BeamGrid::spatial_frequency(int index, int count) {
    return (index - 0.5 - 0.5 * count) / count;
}

BeamGrid::BeamGrid(int tx_count, int rx_count) {
    if (tx_count < 1 || rx_count < 1) throw std::domain_error("beam grid needs >= 1 beam per end");
    tx.resize(tx_count, tx_count);
    const double tx_scale = 1.0 / std::sqrt(static_cast<double>(tx_count));
    for (int p = 1; p <= tx_count; ++p) {
        const double theta = spatial_frequency(p, tx_count);
        for (int k = 0; k < tx_count; ++k) tx(k, p - 1) = tx_scale * unit_phasor(kTwoPi * k * theta);
    }
    rx.resize(rx_count, rx_count);
    const double rx_scale = 1.0 / std::sqrt(static_cast<double>(rx_count));
    for (int q = 1; q <= rx_count; ++q) {
        const double theta = spatial_frequency(q, rx_count);
        for (int k = 0; k < rx_count; ++k) rx(k, q - 1) = rx_scale * unit_phasor(kTwoPi * k * theta);
    }
}

Eigen::MatrixXcd beam_transform(const Eigen::MatrixXcd& antenna_domain, const BeamGrid& grid) {
    if (antenna_domain.rows() != grid.rx.rows() || antenna_domain.cols() != grid.tx.rows()) {
        throw std::domain_error("channel matrix does not match the beam grid dimensions");
    }
    return grid.rx.adjoint() * antenna_domain * grid.tx.conjugate();
}

std::complex<double> ComponentCir::tap_entry(const TapGroup& tap, int p, int q) {
    std::complex<double> acc{0.0, 0.0};
    for (const PathTerm& term : tap.terms) {
        acc += term.amp * unit_phasor(kTwoPi * ((p - 1) * term.theta_t + (q - 1) * term.theta_r));
    }
    return acc;
}

std::complex<double> ComponentCir::tap_beam_entry(const TapGroup& tap, int p, int q) const {
    const double theta_p = BeamGrid::spatial_frequency(p, tx_count);
    const double theta_q = BeamGrid::spatial_frequency(q, rx_count);
    const double scale = 1.0 / std::sqrt(static_cast<double>(tx_count) * rx_count);
    std::complex<double> acc{0.0, 0.0};
    for (const PathTerm& term : tap.terms) {
        acc += term.amp * dirichlet_sum(tx_count, term.theta_t - theta_p) *
               dirichlet_sum(rx_count, term.theta_r - theta_q);
    }
    return scale * acc;
}

std::complex<double> ComponentCir::entry(int p, int q) const {
    check_pq(p, tx_count, q, rx_count);
    std::complex<double> acc{0.0, 0.0};
    for (const TapGroup& tap : taps) acc += tap_entry(tap, p, q);
    return acc;
}

std::complex<double> ComponentCir::beam_entry(int p, int q) const {
    check_pq(p, tx_count, q, rx_count);
    std::complex<double> acc{0.0, 0.0};
    for (const TapGroup& tap : taps) acc += tap_beam_entry(tap, p, q);
    return acc;
}

Eigen::MatrixXcd ComponentCir::matrix() const {
    Eigen::MatrixXcd channel = Eigen::MatrixXcd::Zero(rx_count, tx_count);
    for (const TapGroup& tap : taps) {
        for (const PathTerm& term : tap.terms) {
            const Eigen::VectorXcd at = array_response(tx_count, term.theta_t, 0.0);
            const Eigen::VectorXcd ar = array_response(rx_count, term.theta_r, 0.0);
            channel.noalias() += term.amp * ar * at.transpose();
        }
    }
    return channel;
}

Eigen::MatrixXcd ComponentCir::beam_matrix() const {
    Eigen::MatrixXcd channel = Eigen::MatrixXcd::Zero(rx_count, tx_count);
    const double scale = 1.0 / std::sqrt(static_cast<double>(tx_count) * rx_count);
    Eigen::VectorXcd dp(tx_count);
    Eigen::VectorXcd dq(rx_count);
    for (const TapGroup& tap : taps) {
        for (const PathTerm& term : tap.terms) {
            for (int p = 1; p <= tx_count; ++p) {
                dp(p - 1) = dirichlet_sum(tx_count,
                                          term.theta_t - BeamGrid::spatial_frequency(p, tx_count));
            }
            for (int q = 1; q <= rx_count; ++q) {
                dq(q - 1) = dirichlet_sum(rx_count,
                                          term.theta_r - BeamGrid::spatial_frequency(q, rx_count));
            }
            channel.noalias() += (scale * term.amp) * dq * dp.transpose();
        }
    }
    return channel;
}

std::vector<double> ComponentCir::delays() const {
    std::vector<double> out;
    out.reserve(taps.size());
    for (const TapGroup& tap : taps) out.push_back(tap.delay_s);
    return out;
}

RisState regulate(const Scenario& scenario, const SubArrayPartition& partition, double t,
                  std::uint64_t draw_index) {
    const int total = partition.total();
    RisState state;
    state.amplitude.assign(total, scenario.ris_amplitude);
    state.phase.assign(total, 0.0);
    switch (scenario.phase_policy) {
        case PhasePolicy::Zero:
            break;
        case PhasePolicy::Random: {
            // One reflection state per draw: the panel is not re-regulated
            // between the two instants of a correlation lag, so the phases
            // must not depend on t.
            RandomStream stream(mix_seed(mix_seed(scenario.seed, draw_index),
                                         static_cast<std::uint64_t>(RngPurpose::RisPhase)));
            for (int s = 0; s < total; ++s) state.phase[s] = stream.angle();
            break;
        }
        case PhasePolicy::CoPhase: {
            const Vec3 uav = terminal_position(Side::Uav, scenario, t);
            const Vec3 vehicle = terminal_position(Side::Vehicle, scenario, t);
            for (int s = 0; s < total; ++s) {
                const Vec3& centre = partition.centers[s];
                const double xi = norm(centre - uav) + norm(centre - vehicle);
                state.phase[s] = kTwoPi * xi / scenario.wavelength;
            }
            break;
        }
    }
    return state;
}

ClusterSet draw_clusters(const Scenario& scenario, std::uint64_t draw_index) {
    RandomStream stream(scenario.seed, draw_index, RngPurpose::Clusters);
    const ClusterConfig& cfg = scenario.clusters;
    ClusterSet set;
    set.clusters.resize(cfg.count);
    for (ClusterSet::Cluster& cluster : set.clusters) {
        cluster.center = {stream.uniform(cfg.box.x_min, cfg.box.x_max),
                          stream.uniform(cfg.box.y_min, cfg.box.y_max),
                          stream.uniform(cfg.box.z_min, cfg.box.z_max)};
        cluster.rays.reserve(cfg.rays_per_cluster);
        cluster.initial_phase.reserve(cfg.rays_per_cluster);
        for (int l = 0; l < cfg.rays_per_cluster; ++l) {
            const Vec3 offset{stream.normal(), stream.normal(), stream.normal()};
            cluster.rays.push_back(cluster.center + cfg.ray_sigma * offset);
            cluster.initial_phase.push_back(stream.angle());
        }
    }
    return set;
}

ComponentCir ris_component(const Scenario& scenario, const SubArrayPartition& partition,
                           const RisState& state, double t) {
    const int total = partition.total();
    if (static_cast<int>(state.amplitude.size()) != total ||
        static_cast<int>(state.phase.size()) != total) {
        throw std::domain_error("reflection state does not match the partition size");
    }
    const Vec3 uav = terminal_position(Side::Uav, scenario, t);
    const Vec3 vehicle = terminal_position(Side::Vehicle, scenario, t);
    const Vec3 v_t = velocity(scenario.uav_motion);
    const Vec3 v_r = velocity(scenario.vehicle_motion);
    const double lambda = scenario.wavelength;

    ComponentCir cir;
    cir.tx_count = scenario.uav.count;
    cir.rx_count = scenario.vehicle.count;
    cir.taps.reserve(total);
    for (int s = 0; s < total; ++s) {
        const Vec3& centre = partition.centers[s];
        const double xi_t = norm(centre - uav);
        const double xi_r = norm(centre - vehicle);
        if (xi_t == 0.0 || xi_r == 0.0) {
            throw std::domain_error("terminal position coincides with a sub-array centre");
        }
        const AnglePair angles_t = angles_between(uav, centre);
        const AnglePair angles_r = ground_angles_between(vehicle, centre);
        const auto [azi_t, ver_t] = spatial_frequencies(angles_t, scenario.uav, lambda);
        const auto [azi_r, ver_r] = spatial_frequencies(angles_r, scenario.vehicle, lambda);
        const double doppler = dot(v_t, unit_direction(angles_t)) +
                               dot(v_r, unit_direction(angles_r));
        const double weight = scenario.weighting == SubArrayWeighting::ElementCount
                                  ? static_cast<double>(partition.weights[s])
                                  : 1.0;
        const double phase =
            state.phase[s] + kTwoPi * (t * doppler - (xi_t + xi_r)) / lambda;
        TapGroup tap;
        tap.delay_s = (xi_t + xi_r) / kSpeedOfLight;
        tap.terms.push_back(
            {weight * state.amplitude[s] * unit_phasor(phase), azi_t + ver_t, azi_r + ver_r});
        cir.taps.push_back(std::move(tap));
    }
    return cir;
}

ComponentCir nlos_component(const Scenario& scenario, const ClusterSet& clusters, double t) {
    if (clusters.clusters.empty()) throw std::domain_error("scattered component needs >= 1 cluster");
    std::size_t total_rays = 0;
    for (const ClusterSet::Cluster& cluster : clusters.clusters) {
        if (cluster.rays.empty()) throw std::domain_error("cluster without rays");
        if (cluster.rays.size() != cluster.initial_phase.size()) {
            throw std::domain_error("cluster rays and initial phases differ in length");
        }
        total_rays += cluster.rays.size();
    }
    const double power_norm = 1.0 / std::sqrt(static_cast<double>(total_rays));
    const Vec3 uav = terminal_position(Side::Uav, scenario, t);
    const Vec3 vehicle = terminal_position(Side::Vehicle, scenario, t);
    const Vec3 v_t = velocity(scenario.uav_motion);
    const Vec3 v_r = velocity(scenario.vehicle_motion);
    const double lambda = scenario.wavelength;

    ComponentCir cir;
    cir.tx_count = scenario.uav.count;
    cir.rx_count = scenario.vehicle.count;
    cir.taps.reserve(clusters.clusters.size());
    for (const ClusterSet::Cluster& cluster : clusters.clusters) {
        TapGroup tap;
        tap.delay_s = (norm(cluster.center - uav) + norm(cluster.center - vehicle)) / kSpeedOfLight;
        tap.terms.reserve(cluster.rays.size());
        for (std::size_t l = 0; l < cluster.rays.size(); ++l) {
            const Vec3& ray = cluster.rays[l];
            const double xi_t = norm(ray - uav);
            const double xi_r = norm(ray - vehicle);
            if (xi_t == 0.0 || xi_r == 0.0) {
                throw std::domain_error("terminal position coincides with a scatterer");
            }
            const AnglePair angles_t = angles_between(uav, ray);
            const AnglePair angles_r = ground_angles_between(vehicle, ray);
            const auto [azi_t, ver_t] = spatial_frequencies(angles_t, scenario.uav, lambda);
            const auto [azi_r, ver_r] = spatial_frequencies(angles_r, scenario.vehicle, lambda);
            const double doppler = dot(v_t, unit_direction(angles_t)) +
                                   dot(v_r, unit_direction(angles_r));
            const double phase =
                cluster.initial_phase[l] + kTwoPi * (t * doppler - (xi_t + xi_r)) / lambda;
            tap.terms.push_back({power_norm * unit_phasor(phase), azi_t + ver_t, azi_r + ver_r});
        }
        cir.taps.push_back(std::move(tap));
    }
    return cir;
}

SubArrayPartition partition_for(const Scenario& scenario, ModelKind model, double t) {
    switch (model) {
        case ModelKind::Spherical: return unit_partition(scenario.ris);
        case ModelKind::Planar: return whole_panel_partition(scenario.ris);
        case ModelKind::SubArrayGeometry:
        case ModelKind::SubArrayBeam: return partition_grid(scenario, t);
    }
    throw std::domain_error("unknown model kind");
}

ChannelRealization combined_channel(const Scenario& scenario, double t, ModelKind model,
                                    std::uint64_t draw_index) {
    ChannelRealization real;
    real.model = model;
    real.t = t;
    const SubArrayPartition partition = partition_for(scenario, model, t);
    const RisState state = regulate(scenario, partition, t, draw_index);
    real.ris = ris_component(scenario, partition, state, t);
    real.nlos = nlos_component(scenario, draw_clusters(scenario, draw_index), t);
    if (model == ModelKind::SubArrayBeam) {
        real.ris_matrix = real.ris.beam_matrix();
        real.nlos_matrix = real.nlos.beam_matrix();
    } else {
        real.ris_matrix = real.ris.matrix();
        real.nlos_matrix = real.nlos.matrix();
    }
    const double k = scenario.rician_k;
    real.combined = std::sqrt(k / (k + 1.0)) * real.ris_matrix +
                    std::sqrt(1.0 / (k + 1.0)) * real.nlos_matrix;
    return real;
}

ChannelRealization spherical_oracle(const Scenario& scenario, double t, std::uint64_t draw_index) {
    return combined_channel(scenario, t, ModelKind::Spherical, draw_index);
}

ChannelRealization planar_baseline(const Scenario& scenario, double t, std::uint64_t draw_index) {
    return combined_channel(scenario, t, ModelKind::Planar, draw_index);
}

}  // namespace rissim
