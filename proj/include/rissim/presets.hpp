// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rissim {

/// Names of the canned studies (fig3 .. fig11).
const std::vector<std::string>& preset_names();

/// Run a canned study and write its CSV files (one per curve) into
/// out_dir.  Returns the written paths.  Unknown names raise ConfigError
/// listing the valid ones.
std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              const std::filesystem::path& out_dir);

}  // namespace rissim
