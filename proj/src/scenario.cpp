// SPDX-License-Identifier: Apache-2.0
#include "rissim/scenario.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rissim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1.0e-12;

struct Entry {
    std::string value;
    int line = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("scenario line " + std::to_string(line) + ": " + message);
}

std::map<std::string, Entry, std::less<>> tokenize(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) fail(line_no, "missing key before '='");
        if (value.empty()) fail(line_no, "missing value for '" + key + "'");
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            fail(line_no, "duplicate key '" + key + "'");
        }
    }
    return entries;
}

class Applier {
  public:
    explicit Applier(std::string_view text) : entries_(tokenize(text)) {}

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    std::optional<Entry> take(std::string_view key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        Entry entry = it->second;
        entries_.erase(it);
        return entry;
    }

    void number(const char* key, double& target) {
        if (const auto e = take(key)) target = parse_double(*e, key);
    }

    void angle(const char* key, double& target) {
        const auto plain = take(key);
        const std::string deg_key = std::string(key) + "_deg";
        const auto degrees = take(deg_key);
        if (plain && degrees) {
            fail(degrees->line, "'" + deg_key + "' conflicts with '" + key + "'");
        }
        if (plain) target = parse_double(*plain, key);
        if (degrees) target = parse_double(*degrees, deg_key.c_str()) * kPi / 180.0;
    }

    void integer(const char* key, int& target) {
        if (const auto e = take(key)) {
            const long long v = parse_integer(*e, key);
            if (v < INT_MIN || v > INT_MAX) fail(e->line, std::string("'") + key + "' out of range");
            target = static_cast<int>(v);
        }
    }

    void unsigned64(const char* key, std::uint64_t& target) {
        if (const auto e = take(key)) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(e->value.c_str(), &end, 10);
            if (end == e->value.c_str() || *end != '\0' || e->value.front() == '-') {
                fail(e->line, "value for '" + std::string(key) + "' is not an unsigned integer: '" +
                                  e->value + "'");
            }
            target = v;
        }
    }

    template <typename EnumT>
    void choice(const char* key, EnumT& target,
                std::initializer_list<std::pair<std::string_view, EnumT>> options) {
        const auto e = take(key);
        if (!e) return;
        for (const auto& [name, value] : options) {
            if (e->value == name) {
                target = value;
                return;
            }
        }
        std::string allowed;
        for (const auto& [name, value] : options) {
            if (!allowed.empty()) allowed += ", ";
            allowed += name;
        }
        fail(e->line, "invalid value '" + e->value + "' for '" + key + "' (expected one of: " +
                          allowed + ")");
    }

    void finish() const {
        if (entries_.empty()) return;
        int line = 0;
        std::string key;
        for (const auto& [k, e] : entries_) {
            if (line == 0 || e.line < line) {
                line = e.line;
                key = k;
            }
        }
        fail(line, "unknown key '" + key + "'");
    }

  private:
    static double parse_double(const Entry& e, const char* key) {
        char* end = nullptr;
        const double v = std::strtod(e.value.c_str(), &end);
        if (end == e.value.c_str() || *end != '\0') {
            fail(e.line, "value for '" + std::string(key) + "' is not a number: '" + e.value + "'");
        }
        return v;
    }

    static long long parse_integer(const Entry& e, const char* key) {
        char* end = nullptr;
        const long long v = std::strtoll(e.value.c_str(), &end, 10);
        if (end == e.value.c_str() || *end != '\0') {
            fail(e.line, "value for '" + std::string(key) + "' is not an integer: '" + e.value +
                             "'");
        }
        return v;
    }

    std::map<std::string, Entry, std::less<>> entries_;
};

[[noreturn]] void out_of_range(const char* key, const std::string& requirement) {
    throw ConfigError("'" + std::string(key) + "' out of range: expected " + requirement);
}

void check(bool ok, const char* key, const std::string& requirement) {
    if (!ok) out_of_range(key, requirement);
}

void check_finite(double v, const char* key) {
    if (!std::isfinite(v)) out_of_range(key, "a finite value");
}

void check_angle(double v, const char* key, double bound) {
    check_finite(v, key);
    check(std::abs(v) <= bound + kAngleSlack, key, "an angle within +-" + std::to_string(bound));
}

}  // namespace

void validate(const Scenario& sc) {
    check_finite(sc.wavelength, "wavelength");
    check(sc.wavelength > 0.0, "wavelength", "> 0");
    check_finite(sc.rician_k, "K");
    check(sc.rician_k >= 0.0, "K", ">= 0");
    check(sc.draws >= 1, "draws", ">= 1");
    check_finite(sc.time, "time");
    check(sc.time >= 0.0, "time", ">= 0");

    check(sc.uav.count >= 1, "P", ">= 1");
    check_finite(sc.uav.spacing, "delta_T");
    check(sc.uav.spacing > 0.0, "delta_T", "> 0");
    check_angle(sc.uav.azimuth_tilt, "psi_azi_T", kPi);
    check_angle(sc.uav.vertical_tilt, "psi_ver_T", kPi);
    check_finite(sc.uav_motion.speed, "v_T");
    check(sc.uav_motion.speed >= 0.0, "v_T", ">= 0");
    check_angle(sc.uav_motion.azimuth_heading, "eta_azi_T", kPi);
    check_angle(sc.uav_motion.vertical_heading, "eta_ver_T", kPi / 2.0);
    check_finite(sc.uav_height, "H_0");
    check(sc.uav_height >= 0.0, "H_0", ">= 0");

    check(sc.vehicle.count >= 1, "Q", ">= 1");
    check_finite(sc.vehicle.spacing, "delta_R");
    check(sc.vehicle.spacing > 0.0, "delta_R", "> 0");
    check_angle(sc.vehicle.azimuth_tilt, "psi_azi_R", kPi);
    check_angle(sc.vehicle.vertical_tilt, "psi_ver_R", kPi);
    check_finite(sc.vehicle_motion.speed, "v_R");
    check(sc.vehicle_motion.speed >= 0.0, "v_R", ">= 0");
    check_angle(sc.vehicle_motion.azimuth_heading, "eta_azi_R", kPi);
    check(sc.vehicle_motion.vertical_heading == 0.0, "eta_ver_R",
          "the vehicle to stay on the ground plane");
    check_finite(sc.vehicle_distance, "D_0");
    check(sc.vehicle_distance >= 0.0, "D_0", ">= 0");

    check(sc.ris.elements_x >= 1, "M_x", ">= 1");
    check(sc.ris.elements_z >= 1, "M_z", ">= 1");
    check_finite(sc.ris.element_spacing, "d_M");
    check(sc.ris.element_spacing > 0.0, "d_M", "> 0");
    check_finite(sc.ris.center.x, "ris.x");
    check_finite(sc.ris.center.y, "ris.y");
    check_finite(sc.ris.center.z, "ris.z");
    check_finite(sc.ris_amplitude, "ris.amplitude");
    check(sc.ris_amplitude >= 0.0 && sc.ris_amplitude <= 1.0, "ris.amplitude", "within [0, 1]");
    check(sc.forced_max_side >= 0, "ris.forced_max_side", ">= 0 (0 disables the override)");

    check(sc.clusters.count >= 1, "N", ">= 1");
    check(sc.clusters.rays_per_cluster >= 1, "n_L", ">= 1");
    check_finite(sc.clusters.ray_sigma, "sigma_ray");
    check(sc.clusters.ray_sigma >= 0.0, "sigma_ray", ">= 0");
    const Box& box = sc.clusters.box;
    check_finite(box.x_min, "cluster_box.x_min");
    check_finite(box.x_max, "cluster_box.x_max");
    check_finite(box.y_min, "cluster_box.y_min");
    check_finite(box.y_max, "cluster_box.y_max");
    check_finite(box.z_min, "cluster_box.z_min");
    check_finite(box.z_max, "cluster_box.z_max");
    check(box.x_min <= box.x_max, "cluster_box.x_min", "<= cluster_box.x_max");
    check(box.y_min <= box.y_max, "cluster_box.y_min", "<= cluster_box.y_max");
    check(box.z_min <= box.z_max, "cluster_box.z_min", "<= cluster_box.z_max");
}

void apply_scenario_text(Scenario& sc, std::string_view text) {
    Applier in(text);

    // The wavelength steers the default spacings, so resolve it first.
    const bool had_wavelength = in.has("wavelength");
    in.number("wavelength", sc.wavelength);
    if (had_wavelength) {
        if (!(sc.wavelength > 0.0)) out_of_range("wavelength", "> 0");
        if (!in.has("delta_T")) sc.uav.spacing = sc.wavelength / 2.0;
        if (!in.has("delta_R")) sc.vehicle.spacing = sc.wavelength / 2.0;
        if (!in.has("d_M")) sc.ris.element_spacing = sc.wavelength / 2.0;
    }

    in.number("K", sc.rician_k);
    in.unsigned64("seed", sc.seed);
    in.integer("draws", sc.draws);
    in.number("time", sc.time);

    in.integer("P", sc.uav.count);
    in.number("delta_T", sc.uav.spacing);
    in.angle("psi_azi_T", sc.uav.azimuth_tilt);
    in.angle("psi_ver_T", sc.uav.vertical_tilt);
    in.number("v_T", sc.uav_motion.speed);
    in.angle("eta_azi_T", sc.uav_motion.azimuth_heading);
    in.angle("eta_ver_T", sc.uav_motion.vertical_heading);
    in.number("H_0", sc.uav_height);

    in.integer("Q", sc.vehicle.count);
    in.number("delta_R", sc.vehicle.spacing);
    in.angle("psi_azi_R", sc.vehicle.azimuth_tilt);
    in.angle("psi_ver_R", sc.vehicle.vertical_tilt);
    in.number("v_R", sc.vehicle_motion.speed);
    in.angle("eta_azi_R", sc.vehicle_motion.azimuth_heading);
    in.number("D_0", sc.vehicle_distance);

    in.integer("M_x", sc.ris.elements_x);
    in.integer("M_z", sc.ris.elements_z);
    in.number("d_M", sc.ris.element_spacing);
    in.number("ris.x", sc.ris.center.x);
    in.number("ris.y", sc.ris.center.y);
    in.number("ris.z", sc.ris.center.z);
    in.choice("ris.normal", sc.ris.normal,
              {{"+x", PanelNormal::PlusX},
               {"-x", PanelNormal::MinusX},
               {"+y", PanelNormal::PlusY},
               {"-y", PanelNormal::MinusY}});
    in.number("ris.amplitude", sc.ris_amplitude);
    in.choice("ris.phase_policy", sc.phase_policy,
              {{"zero", PhasePolicy::Zero},
               {"random", PhasePolicy::Random},
               {"cophase", PhasePolicy::CoPhase}});
    in.choice("ris.weighting", sc.weighting,
              {{"count", SubArrayWeighting::ElementCount},
               {"unit", SubArrayWeighting::UnitPerSubArray}});
    in.integer("ris.forced_max_side", sc.forced_max_side);

    in.integer("N", sc.clusters.count);
    in.integer("n_L", sc.clusters.rays_per_cluster);
    in.number("sigma_ray", sc.clusters.ray_sigma);
    in.number("cluster_box.x_min", sc.clusters.box.x_min);
    in.number("cluster_box.x_max", sc.clusters.box.x_max);
    in.number("cluster_box.y_min", sc.clusters.box.y_min);
    in.number("cluster_box.y_max", sc.clusters.box.y_max);
    in.number("cluster_box.z_min", sc.clusters.box.z_min);
    in.number("cluster_box.z_max", sc.clusters.box.z_max);

    in.finish();
    validate(sc);
}

Scenario parse_scenario(std::string_view text) {
    Scenario sc;
    apply_scenario_text(sc, text);
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot open scenario file: " + path.string());
    std::ostringstream body;
    body << file.rdbuf();
    return parse_scenario(body.str());
}

}  // namespace rissim
