#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ckmet {

// Formats a metric value for reports: integers without a decimal point,
// rationals with exactly six fractional digits, NaN as "nan". All writers
// go through this so identical inputs always produce identical bytes.
std::string format_value(double v, bool integral);

// Fixed six-decimal rendering ("0.333333"); NaN becomes "nan".
std::string format_fixed6(double v);

std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Parses a non-negative decimal integer; returns false on any stray byte.
bool parse_u64(std::string_view s, std::uint64_t& out);
// Parses a double, accepting "nan"; returns false on any stray byte.
bool parse_double(std::string_view s, double& out);

// Joins pieces with a separator, e.g. join({"a","b"}, ".") == "a.b".
std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace ckmet
