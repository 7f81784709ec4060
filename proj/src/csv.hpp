#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ncl {

/// Splits one CSV line into fields. Double-quoted fields may contain commas
/// and doubled quotes ("" escapes a quote).
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field if it contains commas, quotes, or newlines.
std::string csv_escape(std::string_view field);

/// Reads all lines of a CSV file (LF or CRLF), split into fields.
/// Throws Errc::missing_file when the file cannot be opened.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal rendering of a double; deterministic across
/// runs so serialized matrices hash identically.
std::string format_double(double value);

double parse_double(std::string_view text);
long long parse_int(std::string_view text);

/// Writes text to path, creating parent directories. Throws Errc::io_error.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ncl
