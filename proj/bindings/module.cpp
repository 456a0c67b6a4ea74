// SPDX-License-Identifier: Apache-2.0
// Python bindings: scenario configuration, partition queries, channel
// matrices and the propagation statistics.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rissim/channel.hpp"
#include "rissim/partition.hpp"
#include "rissim/presets.hpp"
#include "rissim/stats.hpp"

namespace py = pybind11;
using namespace rissim;

namespace {

ModelKind to_model(const std::string& name) { return model_from_name(name); }

/// Summary of the panel partition at time t, as a plain dict.
py::dict partition_summary(const Scenario& scenario, double t) {
    const SideBounds bounds = subarray_side_bounds(scenario, t);
    const SubArrayPartition partition = partition_grid(scenario, t);
    py::dict out;
    out["side"] = partition.side;
    out["num_x"] = partition.num_x();
    out["num_z"] = partition.num_z();
    out["count"] = partition.total();
    out["g1"] = bounds.g1;
    out["g2"] = bounds.g2;
    out["uav_distance_m"] = bounds.xi_t;
    out["vehicle_distance_m"] = bounds.xi_r;
    return out;
}

std::vector<double> acf_magnitudes(const CorrelationSeries& series) {
    std::vector<double> out;
    out.reserve(series.points.size());
    for (const CorrelationPoint& point : series.points) out.push_back(std::abs(point.value));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sub-array channel simulator for RIS-assisted UAV-to-vehicle links";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_static(
            "from_file",
            [](const std::filesystem::path& path) { return load_scenario(path); },
            py::arg("path"), "Load and validate a key = value scenario file.")
        .def_static(
            "from_text", [](const std::string& text) { return parse_scenario(text); },
            py::arg("text"), "Parse and validate scenario text.")
        .def_readwrite("wavelength", &Scenario::wavelength)
        .def_readwrite("rician_k", &Scenario::rician_k)
        .def_readwrite("seed", &Scenario::seed)
        .def_readwrite("draws", &Scenario::draws)
        .def_readwrite("time", &Scenario::time)
        .def_property(
            "uav_antennas", [](const Scenario& sc) { return sc.uav.count; },
            [](Scenario& sc, int count) { sc.uav.count = count; })
        .def_property(
            "vehicle_antennas", [](const Scenario& sc) { return sc.vehicle.count; },
            [](Scenario& sc, int count) { sc.vehicle.count = count; })
        .def_property(
            "ris_elements",
            [](const Scenario& sc) { return py::make_tuple(sc.ris.elements_x, sc.ris.elements_z); },
            [](Scenario& sc, std::pair<int, int> dims) {
                sc.ris.elements_x = dims.first;
                sc.ris.elements_z = dims.second;
            })
        .def_property(
            "forced_max_side", [](const Scenario& sc) { return sc.forced_max_side; },
            [](Scenario& sc, int side) { sc.forced_max_side = side; })
        .def("validate", [](const Scenario& sc) { validate(sc); },
             "Raise ConfigError when a parameter is out of range.")
        .def("__repr__", [](const Scenario& sc) {
            return "<Scenario " + std::to_string(sc.uav.count) + "x" +
                   std::to_string(sc.vehicle.count) + " antennas, panel " +
                   std::to_string(sc.ris.elements_x) + "x" + std::to_string(sc.ris.elements_z) +
                   ">";
        });

    m.def(
        "fraunhofer_distance",
        [](const Scenario& sc) { return fraunhofer_distance(sc.ris, sc.wavelength); },
        py::arg("scenario"), "Far-field boundary of the whole panel [m].");
    m.def(
        "max_subarray_side",
        [](const Scenario& sc, double t) { return max_subarray_side(sc, t); },
        py::arg("scenario"), py::arg("t"), "Admissible per-axis sub-array side at time t.");
    m.def("partition_summary", &partition_summary, py::arg("scenario"), py::arg("t"),
          "Partition layout and side bounds at time t.");

    m.def(
        "channel_matrix",
        [](const Scenario& sc, double t, const std::string& model, std::uint64_t draw) {
            return combined_channel(sc, t, to_model(model), draw).combined;
        },
        py::arg("scenario"), py::arg("t"), py::arg("model") = "subarray", py::arg("draw") = 0,
        "Combined channel matrix (receive x transmit) of one draw.");
    m.def(
        "component_matrices",
        [](const Scenario& sc, double t, const std::string& model, std::uint64_t draw) {
            const ChannelRealization real = combined_channel(sc, t, to_model(model), draw);
            return py::make_tuple(real.ris_matrix, real.nlos_matrix);
        },
        py::arg("scenario"), py::arg("t"), py::arg("model") = "subarray", py::arg("draw") = 0,
        "Reflected and scattered component matrices of one draw.");

    m.def(
        "spatial_temporal_correlation",
        [](const Scenario& sc, const std::string& model, std::pair<int, int> a,
           std::pair<int, int> b, double t, double dt, int draws) {
            const CorrelationEstimate est = spatial_temporal_correlation(
                sc, to_model(model), {a.first, a.second}, {b.first, b.second}, t, dt, draws);
            return py::make_tuple(est.value, est.se_abs);
        },
        py::arg("scenario"), py::arg("model"), py::arg("a"), py::arg("b"), py::arg("t"),
        py::arg("dt"), py::arg("draws"),
        "Normalised correlation of entries a=(p,q), b=(p,q) and its standard error.");
    m.def(
        "temporal_acf",
        [](const Scenario& sc, const std::string& model, std::pair<int, int> pq, double t,
           const std::vector<double>& lags, int draws) {
            return acf_magnitudes(
                temporal_acf(sc, to_model(model), {pq.first, pq.second}, t, lags, draws));
        },
        py::arg("scenario"), py::arg("model"), py::arg("pq"), py::arg("t"), py::arg("lags"),
        py::arg("draws"), "|ACF| of one entry over a grid of time lags.");
    m.def(
        "frequency_cf",
        [](const Scenario& sc, std::pair<int, int> pq, double t, double df, std::uint64_t draw) {
            return frequency_cf(sc, {pq.first, pq.second}, t, df, draw);
        },
        py::arg("scenario"), py::arg("pq"), py::arg("t"), py::arg("df"), py::arg("draw") = 0,
        "Closed-form frequency correlation over spacing df [Hz].");

    m.def(
        "capacity",
        [](const Eigen::MatrixXcd& channel, double snr, int tx_count) {
            return capacity(channel, snr, tx_count);
        },
        py::arg("channel"), py::arg("snr"), py::arg("tx_count"),
        "log2 det(I + snr/tx_count * H H^H) [bit/s/Hz].");
    m.def(
        "mean_capacity",
        [](const Scenario& sc, const std::string& model, double t, double snr, int draws) {
            return mean_capacity(sc, to_model(model), t, snr, draws);
        },
        py::arg("scenario"), py::arg("model"), py::arg("t"), py::arg("snr"), py::arg("draws"),
        "Mean capacity over Monte Carlo draws at linear SNR.");
    m.def(
        "modeling_error_db",
        [](const Eigen::MatrixXcd& model, const Eigen::MatrixXcd& reference) {
            return modeling_error_db(model, reference);
        },
        py::arg("model"), py::arg("reference"),
        "Aggregate relative deviation from a reference channel [dB].");

    m.def("model_names", [] {
        return std::vector<std::string>{"spherical", "planar", "subarray", "beam"};
    });
    m.def("preset_names", [] { return preset_names(); });
    m.def(
        "run_preset",
        [](const std::string& name, const std::filesystem::path& out_dir) {
            return run_preset(name, out_dir);
        },
        py::arg("name"), py::arg("out_dir"), "Run a canned study; returns the written CSV paths.");
}
