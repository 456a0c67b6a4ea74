// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/partition.hpp"
#include "rissim/scenario.hpp"

namespace rissim {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Channel model variants.
///  Spherical          - per-element evaluation (exact reference)
///  Planar             - whole panel as one sub-array
///  SubArrayGeometry   - distance-adaptive partition, antenna domain
///  SubArrayBeam       - distance-adaptive partition, beam domain
enum class ModelKind { Spherical, Planar, SubArrayGeometry, SubArrayBeam };

const char* model_name(ModelKind model);
ModelKind model_from_name(std::string_view name);

/// Sum of azimuth and vertical spatial frequencies of an arrival/departure
/// direction as seen by a tilted uniform linear array, in cycles per
/// element.
std::pair<double, double> spatial_frequencies(const AnglePair& angles, const ArraySpec& array,
                                              double wavelength);

/// Array response vector a(theta): entry k = exp(j*2*pi*k*(ta + tv)),
/// k = 0 .. length-1.
Eigen::VectorXcd array_response(int length, double theta_azi, double theta_ver);

/// sum_{k=0}^{count-1} exp(j*2*pi*k*x), evaluated in closed form away from
/// integer x and by direct summation near it.
std::complex<double> dirichlet_sum(int count, double x);

/// Orthonormal beam bases for both link ends.  Beam p (1-based) points at
/// spatial frequency (p - 0.5 - 0.5*count)/count, spanning [-0.5, 0.5].
struct BeamGrid {
    BeamGrid(int tx_count, int rx_count);
    static double spatial_frequency(int index, int count);
    Eigen::MatrixXcd tx;  ///< transmit basis, tx_count x tx_count
    Eigen::MatrixXcd rx;  ///< receive basis, rx_count x rx_count
};

/// Antenna-domain to beam-domain transform: rx^H * H * conj(tx).
Eigen::MatrixXcd beam_transform(const Eigen::MatrixXcd& antenna_domain, const BeamGrid& grid);

/// One propagation path: complex amplitude plus the transmit/receive
/// spatial-frequency sums that generate the per-antenna phases.
struct PathTerm {
    std::complex<double> amp;
    double theta_t = 0.0;
    double theta_r = 0.0;
};

/// Paths sharing one propagation delay (a sub-array or a scatterer
/// cluster).
struct TapGroup {
    double delay_s = 0.0;
    std::vector<PathTerm> terms;
};

/// Impulse response of one channel component as delay-tagged path groups.
/// Antenna indices p (transmit) and q (receive) are 1-based; the antenna
/// phase of path k at (p, q) is exp(j*2*pi*((p-1)*theta_t + (q-1)*theta_r)).
struct ComponentCir {
    int tx_count = 1;
    int rx_count = 1;
    std::vector<TapGroup> taps;

    std::complex<double> entry(int p, int q) const;
    std::complex<double> beam_entry(int p, int q) const;
    Eigen::MatrixXcd matrix() const;       ///< rx_count x tx_count
    Eigen::MatrixXcd beam_matrix() const;  ///< direct kernel evaluation
    std::vector<double> delays() const;

    static std::complex<double> tap_entry(const TapGroup& tap, int p, int q);
    std::complex<double> tap_beam_entry(const TapGroup& tap, int p, int q) const;
};

/// Reflection amplitudes/phases, one per sub-array of a partition.
struct RisState {
    std::vector<double> amplitude;
    std::vector<double> phase;
};

/// Evaluate the scenario's phase policy for the partition at time t.
RisState regulate(const Scenario& scenario, const SubArrayPartition& partition, double t,
                  std::uint64_t draw_index);

/// Scatterer clusters of one Monte Carlo draw.
struct ClusterSet {
    struct Cluster {
        Vec3 center;
        std::vector<Vec3> rays;
        std::vector<double> initial_phase;
    };
    std::vector<Cluster> clusters;
};

ClusterSet draw_clusters(const Scenario& scenario, std::uint64_t draw_index);

/// Reflected component: one tap per sub-array.  Each tap's amplitude
/// carries the sub-array weight, the reflection coefficient and the
/// propagation, regulation and displacement phases at the sub-array
/// centre.
ComponentCir ris_component(const Scenario& scenario, const SubArrayPartition& partition,
                           const RisState& state, double t);

/// Scattered component: one tap per cluster (delay from the cluster
/// centre), one path per ray, normalised so the mean entry power is 1.
ComponentCir nlos_component(const Scenario& scenario, const ClusterSet& clusters, double t);

/// Partition used by each model variant.
SubArrayPartition partition_for(const Scenario& scenario, ModelKind model, double t);

/// Channel matrices of one draw.  `combined` mixes the components with
/// Rician weights sqrt(K/(K+1)) and sqrt(1/(K+1)); matrices are in the
/// beam domain for SubArrayBeam and in the antenna domain otherwise.
struct ChannelRealization {
    ModelKind model = ModelKind::SubArrayGeometry;
    double t = 0.0;
    ComponentCir ris;
    ComponentCir nlos;
    Eigen::MatrixXcd ris_matrix;
    Eigen::MatrixXcd nlos_matrix;
    Eigen::MatrixXcd combined;
};

ChannelRealization combined_channel(const Scenario& scenario, double t, ModelKind model,
                                    std::uint64_t draw_index = 0);

/// Exact per-element reference channel.
ChannelRealization spherical_oracle(const Scenario& scenario, double t,
                                    std::uint64_t draw_index = 0);

/// Far-field baseline: the whole panel as a single sub-array.
ChannelRealization planar_baseline(const Scenario& scenario, double t,
                                   std::uint64_t draw_index = 0);

}  // namespace rissim
