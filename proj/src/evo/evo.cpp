#include "evo/evo.hpp"

#include "stats/stats.hpp"
#include "support/csv.hpp"
#include "support/error.hpp"
#include "support/fileio.hpp"
#include "support/text.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <set>

#include <nlohmann/json.hpp>

namespace ckmet::evo {

namespace {

using nlohmann::ordered_json;

constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void manifest_error(std::string_view source, const std::string& what) {
    raise_input(std::string(source) + ": " + what);
}

} // namespace

VersionManifest manifest_from_json(std::string_view text, std::string_view source_name) {
    ordered_json root = ordered_json::parse(text, nullptr, false);
    if (root.is_discarded()) manifest_error(source_name, "manifest is not valid JSON");
    if (!root.is_object()) manifest_error(source_name, "manifest root must be an object");
    VersionManifest m;
    if (!root.contains("application") || !root["application"].is_string())
        manifest_error(source_name, "manifest needs a string \"application\" field");
    m.application = root["application"].get<std::string>();
    if (!root.contains("versions") || !root["versions"].is_array())
        manifest_error(source_name, "manifest needs a \"versions\" array");
    std::set<std::string> seen;
    for (const auto& entry : root["versions"]) {
        if (!entry.is_object() || !entry.contains("version_id") ||
            !entry["version_id"].is_string() || !entry.contains("source_path") ||
            !entry["source_path"].is_string())
            manifest_error(source_name,
                           "every version needs string \"version_id\" and \"source_path\"");
        ManifestVersion v;
        v.version_id = entry["version_id"].get<std::string>();
        v.source_path = entry["source_path"].get<std::string>();
        if (entry.contains("date")) {
            if (!entry["date"].is_string())
                manifest_error(source_name, "version \"date\" must be a string");
            v.date = entry["date"].get<std::string>();
        }
        if (!seen.insert(v.version_id).second)
            manifest_error(source_name, "duplicate version_id: " + v.version_id);
        m.versions.push_back(std::move(v));
    }
    if (m.versions.empty()) manifest_error(source_name, "manifest lists no versions");
    return m;
}

VersionManifest load_manifest(const std::string& path) {
    VersionManifest m = manifest_from_json(read_file(path), path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    for (auto& v : m.versions) {
        std::filesystem::path p(v.source_path);
        if (p.is_relative()) v.source_path = (base / p).lexically_normal().generic_string();
    }
    return m;
}

std::vector<VersionAggregate> aggregate_series(
    const VersionManifest& manifest,
    const std::vector<std::vector<metrics::ClassMetricsRecord>>& records_per_version) {
    if (records_per_version.size() != manifest.versions.size())
        raise_internal("aggregate_series: version count mismatch");
    int loc = metrics::metric_index("loc");
    std::vector<VersionAggregate> out;
    out.reserve(manifest.versions.size());
    for (std::size_t vi = 0; vi < manifest.versions.size(); ++vi) {
        const auto& records = records_per_version[vi];
        VersionAggregate agg;
        agg.version_id = manifest.versions[vi].version_id;
        agg.class_count = static_cast<std::int64_t>(records.size());
        for (const auto& r : records)
            agg.total_loc += static_cast<std::int64_t>(r.value(static_cast<std::size_t>(loc)));
        for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
            std::vector<double> column;
            column.reserve(records.size());
            for (const auto& r : records) column.push_back(r.value(m));
            agg.mean[m] = stats::mean_of(column);
            agg.median[m] = stats::median_of(column);
        }
        out.push_back(std::move(agg));
    }
    return out;
}

std::array<VariabilityRange, metrics::k_metric_count> variability_ranges(
    const std::vector<VersionAggregate>& aggregates, const std::string& maturity_version) {
    auto split = std::find_if(aggregates.begin(), aggregates.end(), [&](const auto& a) {
        return a.version_id == maturity_version;
    });
    if (split == aggregates.end())
        raise_input("maturity version not in the series: " + maturity_version);

    std::array<VariabilityRange, metrics::k_metric_count> out;
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        auto range_of = [m](auto begin, auto end) {
            double lo = k_nan;
            double hi = k_nan;
            for (auto it = begin; it != end; ++it) {
                double v = it->mean[m];
                if (std::isnan(v)) continue;
                if (std::isnan(lo) || v < lo) lo = v;
                if (std::isnan(hi) || v > hi) hi = v;
            }
            return std::pair{lo, hi};
        };
        auto [early_lo, early_hi] = range_of(aggregates.begin(), split);
        auto [mature_lo, mature_hi] = range_of(split, aggregates.end());
        out[m] = {early_lo, early_hi, mature_lo, mature_hi};
    }
    return out;
}

namespace {

// Relative growth of a non-negative quantity; +inf marks appearance from 0.
double relative_change(double old_value, double new_value) {
    if (std::isnan(old_value) || std::isnan(new_value)) return k_nan;
    if (old_value > 0) return (new_value - old_value) / old_value;
    if (new_value > 0) return std::numeric_limits<double>::infinity();
    return 0.0;
}

} // namespace

std::vector<DisruptionFlag> detect_disruptions(const std::vector<VersionAggregate>& aggregates,
                                               double threshold) {
    std::vector<DisruptionFlag> flags;
    for (std::size_t i = 1; i < aggregates.size(); ++i) {
        const auto& prev = aggregates[i - 1];
        const auto& cur = aggregates[i];
        DisruptionFlag flag;
        flag.from_version = prev.version_id;
        flag.to_version = cur.version_id;
        auto consider = [&](const std::string& quantity, double old_v, double new_v) {
            double change = relative_change(old_v, new_v);
            if (!std::isnan(change) && std::fabs(change) >= threshold)
                flag.triggers.push_back({quantity, change});
        };
        consider("class_count", static_cast<double>(prev.class_count),
                 static_cast<double>(cur.class_count));
        consider("total_loc", static_cast<double>(prev.total_loc),
                 static_cast<double>(cur.total_loc));
        for (std::size_t m = 0; m < metrics::k_metric_count; ++m)
            consider(std::string(metrics::k_metrics[m].name) + "_mean", prev.mean[m],
                     cur.mean[m]);
        if (!flag.triggers.empty()) flags.push_back(std::move(flag));
    }
    return flags;
}

std::string default_maturity_version(const std::string& application) {
    std::string name = to_lower(application);
    if (name == "freemind") return "1.0.0Alpha4";
    if (name == "jedit") return "4.0pre4";
    if (name == "tuxguitar") return "1.0rc1";
    return "";
}

// --- serialization ---------------------------------------------------------

namespace {

ordered_json json_number(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

std::set<std::string> flagged_versions(const std::vector<DisruptionFlag>& flags) {
    std::set<std::string> out;
    for (const auto& f : flags) out.insert(f.to_version);
    return out;
}

} // namespace

std::string evolution_to_csv(const std::vector<VersionAggregate>& aggregates,
                             const std::vector<DisruptionFlag>& flags) {
    auto flagged = flagged_versions(flags);
    std::string out;
    std::vector<std::string> header{"version", "class_count", "total_loc"};
    for (const auto& m : metrics::k_metrics) {
        header.push_back(std::string(m.name) + "_mean");
        header.push_back(std::string(m.name) + "_median");
    }
    header.push_back("flagged");
    csv_append_row(out, header);
    for (const auto& a : aggregates) {
        std::vector<std::string> row{a.version_id, std::to_string(a.class_count),
                                     std::to_string(a.total_loc)};
        for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
            row.push_back(format_fixed6(a.mean[m]));
            row.push_back(format_fixed6(a.median[m]));
        }
        row.push_back(flagged.count(a.version_id) ? "1" : "0");
        csv_append_row(out, row);
    }
    return out;
}

std::string evolution_to_json(const std::vector<VersionAggregate>& aggregates,
                              const std::vector<DisruptionFlag>& flags) {
    auto flagged = flagged_versions(flags);
    ordered_json root = ordered_json::array();
    for (const auto& a : aggregates) {
        ordered_json entry;
        entry["version"] = a.version_id;
        entry["class_count"] = a.class_count;
        entry["total_loc"] = a.total_loc;
        ordered_json means;
        ordered_json medians;
        for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
            means[metrics::k_metrics[m].name] = json_number(a.mean[m]);
            medians[metrics::k_metrics[m].name] = json_number(a.median[m]);
        }
        entry["mean"] = std::move(means);
        entry["median"] = std::move(medians);
        entry["flagged"] = flagged.count(a.version_id) > 0;
        root.push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string disruptions_to_csv(const std::vector<DisruptionFlag>& flags) {
    std::string out;
    csv_append_row(out, {"from_version", "to_version", "quantity", "relative_change"});
    for (const auto& f : flags)
        for (const auto& t : f.triggers)
            csv_append_row(out, {f.from_version, f.to_version, t.quantity,
                                 std::isinf(t.relative_change)
                                     ? "inf"
                                     : format_fixed6(t.relative_change)});
    return out;
}

std::string disruptions_to_json(const std::vector<DisruptionFlag>& flags) {
    ordered_json root = ordered_json::array();
    for (const auto& f : flags) {
        ordered_json entry;
        entry["from_version"] = f.from_version;
        entry["to_version"] = f.to_version;
        ordered_json triggers = ordered_json::array();
        for (const auto& t : f.triggers) {
            ordered_json trig;
            trig["quantity"] = t.quantity;
            trig["relative_change"] = json_number(t.relative_change);
            triggers.push_back(std::move(trig));
        }
        entry["triggers"] = std::move(triggers);
        root.push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string variability_to_csv(
    const std::array<VariabilityRange, metrics::k_metric_count>& ranges) {
    std::string out;
    csv_append_row(out, {"metric", "early_min", "early_max", "mature_min", "mature_max"});
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        const auto& r = ranges[m];
        csv_append_row(out, {metrics::k_metrics[m].name, format_fixed6(r.early_min),
                             format_fixed6(r.early_max), format_fixed6(r.mature_min),
                             format_fixed6(r.mature_max)});
    }
    return out;
}

std::string variability_to_json(
    const std::array<VariabilityRange, metrics::k_metric_count>& ranges) {
    ordered_json root;
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        const auto& r = ranges[m];
        ordered_json entry;
        entry["early_min"] = json_number(r.early_min);
        entry["early_max"] = json_number(r.early_max);
        entry["mature_min"] = json_number(r.mature_min);
        entry["mature_max"] = json_number(r.mature_max);
        root[metrics::k_metrics[m].name] = std::move(entry);
    }
    return root.dump(2) + "\n";
}

} // namespace ckmet::evo
