// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

namespace rissim {

/// Format a double with 17 significant digits (lossless round-trip);
/// infinities render as "inf"/"-inf".
std::string format_double(double value);

/// Minimal CSV emitter with deterministic, locale-independent formatting.
class CsvWriter {
  public:
    explicit CsvWriter(const std::filesystem::path& path);

    template <typename... Ts>
    void row(const Ts&... values) {
        bool first = true;
        (append(first, values), ...);
        out_ << '\n';
    }

    void flush() { out_.flush(); }

  private:
    void append(bool& first, double value);
    void append(bool& first, int value);
    void append(bool& first, long long value);
    void append(bool& first, std::string_view value);
    void append(bool& first, const char* value) { append(first, std::string_view(value)); }
    void append(bool& first, const std::string& value) { append(first, std::string_view(value)); }
    void separator(bool& first);

    std::ofstream out_;
};

}  // namespace rissim
