// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rissim/presets.hpp"
#include "rissim/sweep.hpp"

namespace {

rissim::Scenario load_or_default(const std::string& path) {
    if (path.empty()) {
        rissim::Scenario sc;
        rissim::validate(sc);
        return sc;
    }
    return rissim::load_scenario(path);
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw rissim::ConfigError("cannot parse " + what + " '" + text + "' as a number");
    }
}

/// "var=a:b:c" -> variable plus inclusive grid bounds.
void parse_sweep_argument(const std::string& text, rissim::SweepSpec& spec) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
        throw rissim::ConfigError("--sweep expects <var>=<start>:<stop>:<step>, got '" + text +
                                  "'");
    }
    spec.variable = rissim::sweep_variable_from_name(text.substr(0, eq));
    const std::string grid = text.substr(eq + 1);
    const std::size_t c1 = grid.find(':');
    const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : grid.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        grid.find(':', c2 + 1) != std::string::npos) {
        throw rissim::ConfigError("--sweep grid must be <start>:<stop>:<step>, got '" + grid +
                                  "'");
    }
    spec.start = parse_number(grid.substr(0, c1), "sweep start");
    spec.stop = parse_number(grid.substr(c1 + 1, c2 - c1 - 1), "sweep stop");
    spec.step = parse_number(grid.substr(c2 + 1), "sweep step");
}

struct SimulateArgs {
    std::string scenario_path;
    std::string sweep;
    std::vector<std::string> models{"subarray"};
    std::optional<int> draws;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "out";
    int p = 1;
    int q = 1;
    double at_dt = 0.01;
    double at_df = 1.0e6;
    double at_snr_db = 10.0;
};

int run_simulate(const SimulateArgs& args) {
    const rissim::Scenario scenario = load_or_default(args.scenario_path);
    rissim::SweepSpec spec;
    parse_sweep_argument(args.sweep, spec);
    spec.models.clear();
    for (const std::string& name : args.models) {
        spec.models.push_back(rissim::model_from_name(name));
    }
    spec.draws = args.draws;
    spec.seed = args.seed;
    spec.pq = {args.p, args.q};
    spec.at_dt = args.at_dt;
    spec.at_df = args.at_df;
    spec.at_snr_db = args.at_snr_db;
    const std::filesystem::path file = rissim::run_sweep(scenario, spec, args.out_dir);
    std::printf("wrote %s\n", file.string().c_str());
    return 0;
}

int run_preset_command(const std::string& name, const std::string& out_dir) {
    const std::vector<std::filesystem::path> files = rissim::run_preset(name, out_dir);
    for (const std::filesystem::path& file : files) {
        std::printf("wrote %s\n", file.string().c_str());
    }
    return 0;
}

int run_partition_report(const std::string& scenario_path, std::optional<double> t_opt) {
    const rissim::Scenario scenario = load_or_default(scenario_path);
    const double t = t_opt.value_or(scenario.time);
    if (!(t >= 0.0)) throw rissim::ConfigError("--t must be >= 0");
    const double fraunhofer = rissim::fraunhofer_distance(scenario.ris, scenario.wavelength);
    const rissim::SideBounds bounds = rissim::subarray_side_bounds(scenario, t);
    const rissim::SubArrayPartition partition = rissim::partition_grid(scenario, t);
    std::printf("time: %g s\n", t);
    std::printf("panel: %d x %d elements, spacing %g m, centre (%g, %g, %g)\n",
                scenario.ris.elements_x, scenario.ris.elements_z, scenario.ris.element_spacing,
                scenario.ris.center.x, scenario.ris.center.y, scenario.ris.center.z);
    std::printf("fraunhofer distance: %.6g m\n", fraunhofer);
    std::printf("uav link distance: %.6g m\n", bounds.xi_t);
    std::printf("vehicle link distance: %.6g m\n", bounds.xi_r);
    std::printf("side bound g1 (uav): %.6g\n", bounds.g1);
    std::printf("side bound g2 (vehicle): %.6g\n", bounds.g2);
    if (scenario.forced_max_side > 0) {
        std::printf("forced max side: %d\n", scenario.forced_max_side);
    }
    std::printf("sub-array side: %d\n", partition.side);
    std::printf("sub-array grid: %d x %d (%d sub-arrays)\n", partition.num_x(), partition.num_z(),
                partition.total());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sub-array channel simulator for RIS-assisted UAV-to-vehicle links"};
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run a sweep and write one CSV");
    simulate->add_option("--scenario", sim.scenario_path, "scenario file (key = value lines)");
    simulate->add_option("--sweep", sim.sweep, "swept variable, <var>=<start>:<stop>:<step>")
        ->required();
    simulate->add_option("--model", sim.models,
                         "models to evaluate: spherical, planar, subarray, beam")
        ->delimiter(',');
    simulate->add_option("--draws", sim.draws, "Monte Carlo draw count override");
    simulate->add_option("--seed", sim.seed, "random seed override");
    simulate->add_option("--out", sim.out_dir, "output directory")->capture_default_str();
    simulate->add_option("--p", sim.p, "transmit antenna index for correlation sweeps")
        ->capture_default_str();
    simulate->add_option("--q", sim.q, "receive antenna index for correlation sweeps")
        ->capture_default_str();
    simulate->add_option("--at-dt", sim.at_dt, "time lag [s] for the K sweep")
        ->capture_default_str();
    simulate->add_option("--at-df", sim.at_df, "frequency spacing [Hz] for the H_0 sweep")
        ->capture_default_str();
    simulate->add_option("--at-snr", sim.at_snr_db, "SNR [dB] for the max_subarray_side sweep")
        ->capture_default_str();

    std::string preset_name;
    std::string preset_out = "out";
    CLI::App* preset = app.add_subcommand("preset", "run a canned study (fig3 .. fig11)");
    preset->add_option("name", preset_name, "preset name")->required();
    preset->add_option("--out", preset_out, "output directory")->capture_default_str();

    std::string report_scenario;
    std::optional<double> report_t;
    CLI::App* report =
        app.add_subcommand("partition-report", "print the sub-array partition at a time instant");
    report->add_option("--scenario", report_scenario, "scenario file (key = value lines)");
    report->add_option("--t", report_t, "evaluation time [s] (default: scenario time)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (preset->parsed()) return run_preset_command(preset_name, preset_out);
        return run_partition_report(report_scenario, report_t);
    } catch (const rissim::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
