#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ckmet::metrics {

// Canonical metric column order, matching the report header
// version,class,loc,cbo,dac,dit,ilcom,lcom,ld,len,lod,mpc,nam,noc,nom,rfc,tcc,wmc
inline constexpr std::size_t k_metric_count = 16;

struct MetricInfo {
    const char* name;
    bool integral; // rendered without decimals; rationals get 6 places
};

inline constexpr std::array<MetricInfo, k_metric_count> k_metrics = {{
    {"loc", true},
    {"cbo", true},
    {"dac", true},
    {"dit", true},
    {"ilcom", true},
    {"lcom", true},
    {"ld", false},
    {"len", true},
    {"lod", false},
    {"mpc", true},
    {"nam", true},
    {"noc", true},
    {"nom", true},
    {"rfc", true},
    {"tcc", false},
    {"wmc", true},
}};

// Index of a metric column by name, -1 if unknown.
int metric_index(std::string_view name);

// One class's measurements for one version. Values are stored as doubles in
// canonical column order; integer metrics hold exact small integers.
struct ClassMetricsRecord {
    std::string version_id;
    std::string class_name;
    std::array<double, k_metric_count> values{};

    double value(std::size_t metric) const { return values[metric]; }
    double& value(std::size_t metric) { return values[metric]; }
};

// CSV with the exact canonical header; rows in the given order.
std::string records_to_csv(const std::vector<ClassMetricsRecord>& records);

// Strict reader for the same format. source_name prefixes diagnostics.
// Throws Error(input) on a bad header, wrong field count, or a bad number,
// naming the line.
std::vector<ClassMetricsRecord> records_from_csv(std::string_view text,
                                                 std::string_view source_name);

// JSON mirror: array of {version, class, <metric>: value...}; NaN -> null.
std::string records_to_json(const std::vector<ClassMetricsRecord>& records);

// Keeps the last record per class name (later rows win), preserving the
// order of last occurrence. Used to collapse repeated class rows when one
// CSV aggregates several snapshots.
std::vector<ClassMetricsRecord> dedupe_by_class(const std::vector<ClassMetricsRecord>& records);

} // namespace ckmet::metrics
