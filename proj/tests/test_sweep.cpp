// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rissim/csv.hpp"
#include "rissim/presets.hpp"
#include "rissim/sweep.hpp"

using namespace rissim;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("sweep grids are inclusive with exact endpoints") {
    const std::vector<double> grid = sweep_grid(0.0, 8.0, 0.5);
    REQUIRE(grid.size() == 17);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 8.0);

    const std::vector<double> single = sweep_grid(3.0, 3.0, 1.0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 3.0);

    CHECK_THROWS_WITH_AS(sweep_grid(0.0, 1.0, 0.0), doctest::Contains("step"), ConfigError);
    CHECK_THROWS_WITH_AS(sweep_grid(2.0, 1.0, 0.5), doctest::Contains(">= start"), ConfigError);
    CHECK_THROWS_AS(sweep_grid(0.0, std::numeric_limits<double>::infinity(), 1.0), ConfigError);
}

TEST_CASE("sweep variable names round-trip and reject unknowns") {
    for (SweepVariable variable :
         {SweepVariable::Time, SweepVariable::TimeLag, SweepVariable::FrequencyLag,
          SweepVariable::Snr, SweepVariable::RisDim, SweepVariable::RicianK,
          SweepVariable::UavHeight, SweepVariable::MaxSubArraySide}) {
        CHECK(sweep_variable_from_name(sweep_variable_name(variable)) == variable);
    }
    CHECK_THROWS_WITH_AS(sweep_variable_from_name("bogus"),
                         doctest::Contains("unknown sweep variable"), ConfigError);
}

TEST_CASE("time sweep writes one interleaved row block per grid point") {
    Scenario sc;
    sc.uav.count = 4;
    sc.vehicle.count = 4;
    sc.ris.elements_x = 20;
    sc.ris.elements_z = 20;
    validate(sc);

    SweepSpec spec;
    spec.variable = SweepVariable::Time;
    spec.start = 0.0;
    spec.stop = 2.0;
    spec.step = 1.0;
    spec.models = {ModelKind::SubArrayGeometry, ModelKind::Planar};

    const std::filesystem::path dir = fresh_dir("rissim_sweep_time");
    const std::filesystem::path file = run_sweep(sc, spec, dir);
    CHECK(file.filename() == "sweep_t.csv");

    const std::vector<std::string> lines = read_lines(file);
    REQUIRE(lines.size() == 7);  // header + 3 grid points x 2 models
    CHECK(lines[0] == "model,t,side,num_x,num_z,subarray_count,error_db");
    CHECK(lines[1].rfind("subarray,0", 0) == 0);
    CHECK(lines[2].rfind("planar,0", 0) == 0);
    CHECK(lines[3].rfind("subarray,1", 0) == 0);
    CHECK(lines[4].rfind("planar,1", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("lag sweep output is byte-identical across reruns") {
    Scenario sc;
    sc.uav.count = 4;
    sc.vehicle.count = 4;
    sc.ris.elements_x = 16;
    sc.ris.elements_z = 16;
    sc.clusters.rays_per_cluster = 5;
    validate(sc);

    SweepSpec spec;
    spec.variable = SweepVariable::TimeLag;
    spec.start = 0.0;
    spec.stop = 0.004;
    spec.step = 0.002;
    spec.models = {ModelKind::SubArrayGeometry};
    spec.draws = 16;

    const std::filesystem::path dir_a = fresh_dir("rissim_sweep_rerun_a");
    const std::filesystem::path dir_b = fresh_dir("rissim_sweep_rerun_b");
    const std::filesystem::path file_a = run_sweep(sc, spec, dir_a);
    const std::filesystem::path file_b = run_sweep(sc, spec, dir_b);
    CHECK(file_a.filename() == "sweep_dt.csv");

    const std::string bytes_a = read_bytes(file_a);
    CHECK(bytes_a == read_bytes(file_b));
    CHECK(bytes_a.rfind("model,dt,acf_abs,acf_re,acf_im,acf_se\n", 0) == 0);
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("integer-valued sweeps reject fractional or negative grids") {
    const Scenario sc;
    const std::filesystem::path dir = fresh_dir("rissim_sweep_bad");

    SweepSpec dims;
    dims.variable = SweepVariable::RisDim;
    dims.start = 5.0;
    dims.stop = 6.0;
    dims.step = 0.5;
    CHECK_THROWS_WITH_AS(run_sweep(sc, dims, dir), doctest::Contains("positive integers"),
                         ConfigError);

    SweepSpec rician;
    rician.variable = SweepVariable::RicianK;
    rician.start = -1.0;
    rician.stop = 1.0;
    rician.step = 1.0;
    CHECK_THROWS_WITH_AS(run_sweep(sc, rician, dir), doctest::Contains(">= 0"), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("doubles round-trip through their CSV rendering") {
    for (double value : {0.0, 1.0, -1.0, std::numbers::pi, 0.1, 1e-300,
                         1.7976931348623157e308}) {
        CHECK(std::stod(format_double(value)) == value);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("csv writer refuses unopenable paths") {
    CHECK_THROWS_WITH_AS(CsvWriter("/nonexistent_dir/out.csv"), doctest::Contains("cannot open"),
                         std::runtime_error);
}

TEST_CASE("preset catalogue and a canned study run") {
    const std::vector<std::string> expected = {"fig3", "fig4", "fig5",  "fig6", "fig7",
                                               "fig8", "fig9", "fig10", "fig11"};
    CHECK(preset_names() == expected);

    const std::filesystem::path dir = fresh_dir("rissim_preset_fig3");
    const std::vector<std::filesystem::path> files = run_preset("fig3", dir);
    REQUIRE(files.size() == 1);
    CHECK(files[0].filename() == "fig3_subarray_count.csv");
    CHECK(read_lines(files[0]).size() == 34);  // header + 33 trajectory samples
    std::filesystem::remove_all(dir);

    CHECK_THROWS_WITH_AS(run_preset("nope", dir), doctest::Contains("fig3"), ConfigError);
}
