#include "pipeline/pipeline.hpp"

#include "model/extract.hpp"
#include "stats/stats.hpp"
#include "support/error.hpp"
#include "support/fileio.hpp"
#include "support/text.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>

namespace ckmet::pipeline {

namespace fs = std::filesystem;

namespace {

const char* extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

void write_matrix(const fs::path& out_dir, const std::string& stem,
                  const stats::CorrelationMatrix& matrix, OutputFormat f) {
    std::string payload =
        f == OutputFormat::csv ? stats::matrix_to_csv(matrix) : stats::matrix_to_json(matrix);
    atomic_write(out_dir / (stem + extension(f)), payload);
}

std::string sanitize_for_filename(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '.' || c == '_' || c == '-';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? std::string("unnamed") : out;
}

// Content fingerprint of the Java files a tree would contribute, independent
// of filesystem iteration order.
std::uint64_t hash_source_tree(const fs::path& root, const std::vector<std::string>& excludes) {
    std::uint64_t h = fnv1a64("ckmet-tree-v1");
    for (const auto& rel : list_files(root, {".java"}, excludes)) {
        h = fnv1a64(rel, h);
        h = fnv1a64(std::string_view("\0", 1), h);
        h = fnv1a64(read_file(root / rel), h);
        h = fnv1a64(std::string_view("\1", 1), h);
    }
    return h;
}

} // namespace

std::vector<std::string> metric_names(bool with_loc) {
    std::vector<std::string> names;
    for (const auto& m : metrics::k_metrics) {
        if (!with_loc && std::string_view(m.name) == "loc") continue;
        names.emplace_back(m.name);
    }
    return names;
}

ExtractResult extract_tree(const std::string& src_dir, const ExtractOptions& options) {
    ExtractResult result;
    model::UnresolvedTree tree =
        model::parse_source_tree(src_dir, options.excludes, options.version_id, options.jobs);
    if (tree.files.empty())
        result.warnings.push_back("no Java files found under " + src_dir);
    result.graph = model::resolve_references(tree, result.warnings);
    model::check_inheritance_acyclic(result.graph);
    result.records = metrics::compute_all(result.graph);
    return result;
}

std::vector<metrics::ClassMetricsRecord> read_record_files(const std::vector<std::string>& paths) {
    std::vector<metrics::ClassMetricsRecord> all;
    for (const auto& p : paths) {
        auto part = metrics::records_from_csv(read_file(p), p);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return all;
}

void run_analyze(const std::vector<std::string>& in_csvs, const std::string& out_dir,
                 const AnalyzeOptions& options) {
    auto records = read_record_files(in_csvs);
    if (options.dedupe) records = metrics::dedupe_by_class(records);
    auto summary = stats::summarize(records);
    fs::path out(out_dir);
    atomic_write(out / (std::string("summary") + extension(options.format)),
                 options.format == OutputFormat::csv ? stats::summary_to_csv(summary)
                                                     : stats::summary_to_json(summary));
    for (const auto& name : metric_names(true)) {
        auto hist = stats::histogram(records, name, options.bins);
        atomic_write(out / ("hist_" + name + extension(options.format)),
                     options.format == OutputFormat::csv ? stats::histogram_to_csv(hist)
                                                         : stats::histogram_to_json(hist));
    }
}

void run_correlate(const std::string& in_csv, const std::string& out_dir,
                   const CorrelateOptions& options) {
    if (!(options.threshold >= 0.0 && options.threshold <= 1.0))
        raise_usage("strong-correlation threshold must lie in [0, 1]");
    auto records = read_record_files({in_csv});
    if (options.dedupe) records = metrics::dedupe_by_class(records);
    fs::path out(out_dir);

    auto full = stats::correlation_matrix(records, metric_names(true), options.threshold);
    full.partition_label = "all";
    write_matrix(out, "matrix_all", full, options.format);

    if (!options.partition) return;
    auto parts = stats::quartile_partition(records);
    auto names = metric_names(false); // size is the stratifier, not a column
    struct {
        const char* stem;
        const char* label;
        const std::vector<metrics::ClassMetricsRecord>* records;
    } groups[] = {
        {"matrix_below_q1", "below_q1", &parts.below_q1},
        {"matrix_interquartile", "interquartile", &parts.interquartile},
        {"matrix_above_q3", "above_q3", &parts.above_q3},
    };
    for (const auto& group : groups) {
        if (group.records->empty()) {
            // An empty stratum has no correlations; emit an empty matrix so
            // the file set is stable across inputs.
            stats::CorrelationMatrix m;
            m.metric_names = names;
            m.strong_threshold = options.threshold;
            m.partition_label = group.label;
            m.rho.assign(names.size(), std::vector<double>(
                                           names.size(),
                                           std::numeric_limits<double>::quiet_NaN()));
            write_matrix(out, group.stem, m, options.format);
            continue;
        }
        auto m = stats::correlation_matrix(*group.records, names, options.threshold);
        m.partition_label = group.label;
        write_matrix(out, group.stem, m, options.format);
    }
}

void run_evolve(const std::string& manifest_path, const std::string& out_dir,
                const EvolveOptions& options) {
    if (!(options.threshold >= 0.0) || std::isinf(options.threshold))
        raise_usage("disruption threshold must be a finite non-negative number");
    evo::VersionManifest manifest = evo::load_manifest(manifest_path);
    fs::path out(out_dir);
    fs::path cache_dir = out / "cache";

    std::vector<std::vector<metrics::ClassMetricsRecord>> per_version;
    per_version.reserve(manifest.versions.size());
    for (const auto& version : manifest.versions) {
        auto started = std::chrono::steady_clock::now();
        std::uint64_t tree_hash = hash_source_tree(version.source_path, options.excludes);
        fs::path cache_file =
            cache_dir / (sanitize_for_filename(version.version_id) + "_" + to_hex(tree_hash) +
                         ".csv");
        std::vector<metrics::ClassMetricsRecord> records;
        bool cached = fs::exists(cache_file);
        if (cached) {
            records = metrics::records_from_csv(read_file(cache_file),
                                                cache_file.generic_string());
        } else {
            ExtractOptions ex;
            ex.version_id = version.version_id;
            ex.excludes = options.excludes;
            ex.jobs = options.jobs;
            ExtractResult result = extract_tree(version.source_path, ex);
            for (const auto& w : result.warnings)
                std::fprintf(stderr, "[evolve] %s: warning: %s\n", version.version_id.c_str(),
                             w.c_str());
            records = std::move(result.records);
            atomic_write(cache_file, metrics::records_to_csv(records));
        }
        auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        std::fprintf(stderr, "[evolve] %s: %s, %zu classes, %lld ms\n",
                     version.version_id.c_str(), cached ? "cache hit" : "extracted",
                     records.size(), static_cast<long long>(elapsed_ms));
        per_version.push_back(std::move(records));
    }

    auto aggregates = evo::aggregate_series(manifest, per_version);
    auto flags = evo::detect_disruptions(aggregates, options.threshold);
    atomic_write(out / (std::string("evolution") + extension(options.format)),
                 options.format == OutputFormat::csv ? evo::evolution_to_csv(aggregates, flags)
                                                     : evo::evolution_to_json(aggregates, flags));
    atomic_write(out / (std::string("disruptions") + extension(options.format)),
                 options.format == OutputFormat::csv ? evo::disruptions_to_csv(flags)
                                                     : evo::disruptions_to_json(flags));

    std::string maturity = options.maturity_version.empty()
                               ? evo::default_maturity_version(manifest.application)
                               : options.maturity_version;
    if (maturity.empty()) {
        std::fprintf(stderr,
                     "[evolve] no maturity version known for \"%s\"; skipping variability "
                     "ranges (use --maturity)\n",
                     manifest.application.c_str());
        return;
    }
    auto ranges = evo::variability_ranges(aggregates, maturity);
    atomic_write(out / (std::string("variability") + extension(options.format)),
                 options.format == OutputFormat::csv ? evo::variability_to_csv(ranges)
                                                     : evo::variability_to_json(ranges));
}

} // namespace ckmet::pipeline
