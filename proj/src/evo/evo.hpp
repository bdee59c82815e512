#pragma once

#include "metrics/records.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ckmet::evo {

struct ManifestVersion {
    std::string version_id;
    std::string source_path;
    std::string date; // optional ISO-8601 string, informational only
};

// Release series of one application; order drives consecutive-pair analysis.
struct VersionManifest {
    std::string application;
    std::vector<ManifestVersion> versions;
};

// JSON object {"application": ..., "versions": [{"version_id", "source_path",
// "date"?}, ...]}. Throws Error(input) on schema problems or duplicate ids.
VersionManifest manifest_from_json(std::string_view text, std::string_view source_name);

// Reads and parses the manifest; relative source paths are resolved against
// the manifest's directory.
VersionManifest load_manifest(const std::string& path);

struct VersionAggregate {
    std::string version_id;
    std::int64_t class_count = 0;
    std::int64_t total_loc = 0;
    std::array<double, metrics::k_metric_count> mean{};   // NaN when no records
    std::array<double, metrics::k_metric_count> median{}; // NaN when no records
};

// One aggregate per manifest version, in manifest order. records_per_version
// runs parallel to manifest.versions.
std::vector<VersionAggregate> aggregate_series(
    const VersionManifest& manifest,
    const std::vector<std::vector<metrics::ClassMetricsRecord>>& records_per_version);

struct VariabilityRange {
    double early_min, early_max;   // versions strictly before maturity
    double mature_min, mature_max; // maturity version and after
};

// Min/max of the per-version means, split at maturity_version. An empty side
// reports NaN. Throws Error(input) when maturity_version is not in the series.
std::array<VariabilityRange, metrics::k_metric_count> variability_ranges(
    const std::vector<VersionAggregate>& aggregates, const std::string& maturity_version);

struct DisruptionTrigger {
    std::string quantity;   // "class_count", "total_loc", or "<metric>_mean"
    double relative_change; // (new - old)/old; +inf when old was 0 and new > 0
};

struct DisruptionFlag {
    std::string from_version;
    std::string to_version;
    std::vector<DisruptionTrigger> triggers;
};

// Flags consecutive version pairs where |relative change| >= threshold in the
// class count, total LOC, or any metric mean.
std::vector<DisruptionFlag> detect_disruptions(const std::vector<VersionAggregate>& aggregates,
                                               double threshold = 0.20);

// Built-in maturity split points for the studied applications; empty string
// when the application name is not recognized.
std::string default_maturity_version(const std::string& application);

// --- serialization ---------------------------------------------------------

// CSV columns version,class_count,total_loc,<metric>_mean,<metric>_median...,
// flagged; a version is flagged when some disruption points at it.
std::string evolution_to_csv(const std::vector<VersionAggregate>& aggregates,
                             const std::vector<DisruptionFlag>& flags);
std::string evolution_to_json(const std::vector<VersionAggregate>& aggregates,
                              const std::vector<DisruptionFlag>& flags);

// CSV rows from_version,to_version,quantity,relative_change (one per trigger).
std::string disruptions_to_csv(const std::vector<DisruptionFlag>& flags);
std::string disruptions_to_json(const std::vector<DisruptionFlag>& flags);

// CSV rows metric,early_min,early_max,mature_min,mature_max.
std::string variability_to_csv(
    const std::array<VariabilityRange, metrics::k_metric_count>& ranges);
std::string variability_to_json(
    const std::array<VariabilityRange, metrics::k_metric_count>& ranges);

} // namespace ckmet::evo
