// SPDX-License-Identifier: Apache-2.0
#include "rissim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rissim {

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
}

void CsvWriter::append(bool& first, double value) {
    separator(first);
    out_ << format_double(value);
}

void CsvWriter::append(bool& first, int value) {
    separator(first);
    out_ << value;
}

void CsvWriter::append(bool& first, long long value) {
    separator(first);
    out_ << value;
}

void CsvWriter::append(bool& first, std::string_view value) {
    separator(first);
    out_ << value;
}

void CsvWriter::separator(bool& first) {
    if (!first) out_ << ',';
    first = false;
}

}  // namespace rissim
