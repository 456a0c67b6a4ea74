// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "rissim/channel.hpp"

namespace rissim {

/// 1-based transmit/receive index pair (antenna or beam, depending on the
/// model the pair is used with).
struct AntennaPair {
    int p = 1;
    int q = 1;
};

struct CorrelationEstimate {
    std::complex<double> value;
    double se_abs = 0.0;  ///< batch-means standard error of |value|
};

struct CorrelationPoint {
    double axis = 0.0;
    std::complex<double> value;
    double se_abs = 0.0;
};

struct CorrelationSeries {
    std::string axis;
    ModelKind model = ModelKind::SubArrayGeometry;
    int draws = 0;
    std::vector<CorrelationPoint> points;
};

/// Normalised correlation E[h_a(t) conj(h_b(t+dt))] /
/// sqrt(E|h_a(t)|^2 E|h_b(t+dt)|^2).  The expectation averages the
/// scattered component (and the reflected one under the random phase
/// policy) over `draws` Monte Carlo draws; components are mixed with
/// Rician weights K/(K+1) and 1/(K+1).  For a == b and dt == 0 the
/// estimator reduces to an identity and returns exactly 1.
CorrelationEstimate spatial_temporal_correlation(const Scenario& scenario, ModelKind model,
                                                 AntennaPair a, AntennaPair b, double t, double dt,
                                                 int draws);

/// Temporal autocorrelation of entry `pq` over a grid of lags.
CorrelationSeries temporal_acf(const Scenario& scenario, ModelKind model, AntennaPair pq, double t,
                               std::span<const double> dt_grid, int draws);

/// Channel transfer function at carrier offset frequency f [Hz]: sum of
/// per-tap gains rotated by exp(-j*2*pi*f*delay), Rician-weighted.
std::complex<double> transfer_function(const Scenario& scenario, ModelKind model, AntennaPair pq,
                                       double t, double frequency_hz, std::uint64_t draw_index = 0);

/// Closed-form frequency correlation over spacing df [Hz]: the reflected
/// path contributes at the panel-centre delay with weight K/(K+1), each
/// cluster at its centre delay with weight 1/((K+1)*N).
std::complex<double> frequency_cf(const Scenario& scenario, AntennaPair pq, double t, double df_hz,
                                  std::uint64_t draw_index = 0);

/// Frequency correlation estimated from transfer-function products
/// evaluated at base_frequency_hz and base_frequency_hz + df_hz.  Per-tap
/// products only (taps at different delays are uncorrelated by
/// construction), so the estimate depends on the base frequency only
/// through rounding.
std::complex<double> frequency_cf_via_transfer(const Scenario& scenario, ModelKind model,
                                               AntennaPair pq, double t, double df_hz,
                                               double base_frequency_hz, int draws);

/// log2 det(I + snr/tx_count * H H^H)  [bit/s/Hz], via Cholesky.
double capacity(const Eigen::MatrixXcd& channel, double snr, int tx_count);

/// Mean capacity over Monte Carlo draws at linear SNR `snr`.
double mean_capacity(const Scenario& scenario, ModelKind model, double t, double snr, int draws);

/// Aggregate relative deviation from a reference channel in dB:
/// 10*log10(sum_pq |h_pq - ref_pq| / |ref_pq|).  Returns -infinity when
/// the matrices are identical; throws when a reference entry is zero.
double modeling_error_db(const Eigen::MatrixXcd& model, const Eigen::MatrixXcd& reference);

}  // namespace rissim
