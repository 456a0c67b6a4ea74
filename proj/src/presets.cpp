// SPDX-License-Identifier: Apache-2.0
#include "rissim/presets.hpp"

#include <cstdio>
#include <initializer_list>

#include "rissim/csv.hpp"
#include "rissim/sweep.hpp"

namespace rissim {

namespace {

/// "0.01" -> "0p01", "10" -> "10": dots are awkward inside file stems.
std::string value_tag(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    std::string tag(buffer);
    for (char& c : tag) {
        if (c == '.') c = 'p';
    }
    return tag;
}

std::filesystem::path renamed(const std::filesystem::path& from, const std::filesystem::path& to) {
    std::filesystem::rename(from, to);
    return to;
}

/// Small terminal arrays keep the partition bounds in the regime where the
/// sub-array count visibly tracks the trajectory.
Scenario small_array_scenario() {
    Scenario sc;
    sc.uav.count = 6;
    sc.vehicle.count = 8;
    return sc;
}

std::vector<std::filesystem::path> preset_fig3(const std::filesystem::path& out) {
    SweepSpec spec;
    spec.variable = SweepVariable::Time;
    spec.start = 0.0;
    spec.stop = 8.0;
    spec.step = 0.25;
    spec.models = {ModelKind::SubArrayGeometry};
    const std::filesystem::path file = run_sweep(small_array_scenario(), spec, out);
    return {renamed(file, out / "fig3_subarray_count.csv")};
}

std::vector<std::filesystem::path> preset_fig4(const std::filesystem::path& out) {
    Scenario sc = small_array_scenario();
    sc.ris.center = {50.0, 30.0, 20.0};
    sc.ris.element_spacing = sc.wavelength / 4.0;
    SweepSpec spec;
    spec.variable = SweepVariable::RisDim;
    spec.start = 5.0;
    spec.stop = 60.0;
    spec.step = 5.0;
    spec.models = {ModelKind::SubArrayGeometry, ModelKind::Planar};
    std::vector<std::filesystem::path> files;
    for (const double t : {1.0, 4.0}) {
        sc.time = t;
        const std::filesystem::path file = run_sweep(sc, spec, out);
        files.push_back(renamed(file, out / ("fig4_error_t" + value_tag(t) + ".csv")));
    }
    return files;
}

/// Correlation studies average over unregulated (random-phase) panel
/// states; a co-phased panel is deterministic and would pin the reflected
/// component's correlation modulus at 1.
Scenario ensemble_scenario() {
    Scenario sc;
    sc.phase_policy = PhasePolicy::Random;
    return sc;
}

std::vector<std::filesystem::path> preset_fig5(const std::filesystem::path& out) {
    Scenario sc = ensemble_scenario();
    sc.vehicle.count = 100;
    sc.time = 4.0;
    std::filesystem::create_directories(out);
    std::vector<std::filesystem::path> files;
    for (const ModelKind model : {ModelKind::SubArrayGeometry, ModelKind::SubArrayBeam}) {
        for (const double k : {1.0, 0.0}) {
            sc.rician_k = k;
            const std::filesystem::path file =
                out / ("fig5_ccf_" + std::string(model_name(model)) + "_k" + value_tag(k) + ".csv");
            CsvWriter csv(file);
            csv.row("index", "ccf_abs", "ccf_se");
            for (int index = 1; index <= sc.vehicle.count; ++index) {
                const CorrelationEstimate est = spatial_temporal_correlation(
                    sc, model, {1, 1}, {1, index}, sc.time, 0.0, sc.draws);
                csv.row(index, std::abs(est.value), est.se_abs);
            }
            csv.flush();
            files.push_back(file);
        }
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig6(const std::filesystem::path& out) {
    Scenario sc = ensemble_scenario();
    SweepSpec spec;
    spec.variable = SweepVariable::TimeLag;
    spec.start = 0.0;
    spec.stop = 0.02;
    spec.step = 0.001;
    std::vector<std::filesystem::path> files;
    for (const ModelKind model : {ModelKind::SubArrayGeometry, ModelKind::SubArrayBeam}) {
        spec.models = {model};
        for (const double k : {1.0, 0.0}) {
            sc.rician_k = k;
            const std::filesystem::path file = run_sweep(sc, spec, out);
            files.push_back(renamed(file, out / ("fig6_acf_" + std::string(model_name(model)) +
                                                 "_k" + value_tag(k) + ".csv")));
        }
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig7(const std::filesystem::path& out) {
    Scenario sc = ensemble_scenario();
    SweepSpec spec;
    spec.variable = SweepVariable::TimeLag;
    spec.start = 0.0;
    spec.stop = 0.02;
    spec.step = 0.002;
    spec.models = {ModelKind::SubArrayBeam};
    std::vector<std::filesystem::path> files;
    for (const double k : {0.01, 1.0, 10.0}) {
        sc.rician_k = k;
        const std::filesystem::path file = run_sweep(sc, spec, out);
        files.push_back(renamed(file, out / ("fig7_acf_k" + value_tag(k) + ".csv")));
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig8(const std::filesystem::path& out) {
    Scenario sc = ensemble_scenario();
    sc.time = 4.0;
    SweepSpec spec;
    spec.variable = SweepVariable::TimeLag;
    spec.start = 0.0;
    spec.stop = 0.02;
    spec.step = 0.002;
    spec.models = {ModelKind::SubArrayBeam};
    std::vector<std::filesystem::path> files;
    for (const int dim : {30, 50, 100}) {
        sc.ris.elements_x = dim;
        sc.ris.elements_z = dim;
        const std::filesystem::path file = run_sweep(sc, spec, out);
        files.push_back(renamed(file, out / ("fig8_acf_dim" + std::to_string(dim) + ".csv")));
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig9(const std::filesystem::path& out) {
    Scenario sc;
    SweepSpec spec;
    spec.variable = SweepVariable::FrequencyLag;
    spec.start = 0.0;
    spec.stop = 2.0e7;
    spec.step = 5.0e5;
    std::vector<std::filesystem::path> files;
    for (const ModelKind model : {ModelKind::SubArrayGeometry, ModelKind::SubArrayBeam}) {
        spec.models = {model};
        for (const double k : {0.1, 1.0, 10.0}) {
            sc.rician_k = k;
            const std::filesystem::path file = run_sweep(sc, spec, out);
            files.push_back(renamed(file, out / ("fig9_fcf_" + std::string(model_name(model)) +
                                                 "_k" + value_tag(k) + ".csv")));
        }
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig10(const std::filesystem::path& out) {
    Scenario sc;
    SweepSpec spec;
    spec.variable = SweepVariable::FrequencyLag;
    spec.start = 0.0;
    spec.stop = 2.0e7;
    spec.step = 5.0e5;
    spec.models = {ModelKind::SubArrayBeam};
    std::vector<std::filesystem::path> files;
    for (const double h0 : {50.0, 200.0, 1000.0}) {
        sc.uav_height = h0;
        const std::filesystem::path file = run_sweep(sc, spec, out);
        files.push_back(renamed(file, out / ("fig10_fcf_h" + value_tag(h0) + ".csv")));
    }
    return files;
}

std::vector<std::filesystem::path> preset_fig11(const std::filesystem::path& out) {
    Scenario sc;
    sc.draws = 500;  // capacity averages settle quickly; keep the preset snappy
    SweepSpec spec;
    spec.variable = SweepVariable::Snr;
    spec.start = 0.0;
    spec.stop = 30.0;
    spec.step = 2.0;
    spec.models = {ModelKind::SubArrayGeometry};
    std::vector<std::filesystem::path> files;
    for (const int dim : {1, 30, 50, 100}) {
        sc.ris.elements_x = dim;
        sc.ris.elements_z = dim;
        const std::filesystem::path file = run_sweep(sc, spec, out);
        files.push_back(renamed(file, out / ("fig11_capacity_dim" + std::to_string(dim) + ".csv")));
    }
    return files;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig3", "fig4", "fig5",  "fig6", "fig7",
                                                "fig8", "fig9", "fig10", "fig11"};
    return names;
}

std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    if (name == "fig3") return preset_fig3(out_dir);
    if (name == "fig4") return preset_fig4(out_dir);
    if (name == "fig5") return preset_fig5(out_dir);
    if (name == "fig6") return preset_fig6(out_dir);
    if (name == "fig7") return preset_fig7(out_dir);
    if (name == "fig8") return preset_fig8(out_dir);
    if (name == "fig9") return preset_fig9(out_dir);
    if (name == "fig10") return preset_fig10(out_dir);
    if (name == "fig11") return preset_fig11(out_dir);
    std::string known;
    for (const std::string& n : preset_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw ConfigError("unknown preset '" + name + "' (expected one of: " + known + ")");
}

}  // namespace rissim
