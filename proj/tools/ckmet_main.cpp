#include "ckmet/ckmet.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

// The library's status codes double as process exit codes.
int finish(ckm_status status) {
    if (status != CKM_OK) std::fprintf(stderr, "ckmet: error: %s\n", ckm_last_error());
    return static_cast<int>(status);
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
    std::vector<const char*> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(s.c_str());
    return out;
}

ckm_format parse_format(const std::string& name) {
    return name == "json" ? CKM_FORMAT_JSON : CKM_FORMAT_CSV;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"class-level code metrics: extraction, statistics, evolution"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ckm_version()));

    std::string src_dir;
    std::string out_path;
    std::string version_id = "unversioned";
    std::string graph_path;
    std::string format = "csv";
    std::string manifest_path;
    std::string maturity;
    std::vector<std::string> excludes;
    std::vector<std::string> inputs;
    double threshold = 0.0;
    int bins = 10;
    unsigned jobs = 1;
    bool partition = false;
    bool dedupe = false;

    auto* extract = app.add_subcommand("extract", "measure every class under a source tree");
    extract->add_option("--src", src_dir, "root of the Java source tree")->required();
    extract->add_option("--out", out_path, "records file to write")->required();
    extract->add_option("--exclude", excludes, "relative-path glob to skip (repeatable)");
    extract->add_option("--version-id", version_id, "version label stored in each row");
    extract->add_option("--jobs", jobs, "parser worker threads")->check(CLI::PositiveNumber);
    extract->add_option("--dump-graph", graph_path, "also write the entity graph as JSON");
    extract->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* analyze = app.add_subcommand("analyze", "descriptive statistics and histograms");
    analyze->add_option("inputs", inputs, "records CSV files (merged in order)")
        ->required()
        ->expected(-1);
    analyze->add_option("--out", out_path, "output directory")->required();
    analyze->add_option("--bins", bins, "histogram bin count")->check(CLI::PositiveNumber);
    analyze->add_flag("--dedupe", dedupe, "keep only the last row per class name");
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* correlate = app.add_subcommand("correlate", "rank-correlation matrices");
    correlate->add_option("input", inputs, "records CSV file")->required()->expected(1);
    correlate->add_option("--out", out_path, "output directory")->required();
    correlate->add_option("--threshold", threshold, "strong-correlation cutoff (default 0.8)")
        ->check(CLI::Range(0.0, 1.0));
    correlate->add_flag("--partition", partition, "also correlate within LOC quartiles");
    correlate->add_flag("--dedupe", dedupe, "keep only the last row per class name");
    correlate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* evolve = app.add_subcommand("evolve", "cross-version evolution report");
    evolve->add_option("--manifest", manifest_path, "version manifest JSON")->required();
    evolve->add_option("--out", out_path, "output directory")->required();
    evolve->add_option("--threshold", threshold, "disruption cutoff (default 0.20)")
        ->check(CLI::NonNegativeNumber);
    evolve->add_option("--maturity", maturity, "version id starting the mature era");
    evolve->add_option("--exclude", excludes, "relative-path glob to skip (repeatable)");
    evolve->add_option("--jobs", jobs, "parser worker threads")->check(CLI::PositiveNumber);
    evolve->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(CKM_ERR_USAGE);
    }

    ckm_format fmt = parse_format(format);

    if (extract->parsed()) {
        auto globs = c_strings(excludes);
        ckm_extract_options options{};
        options.version_id = version_id.c_str();
        options.exclude_globs = globs.empty() ? nullptr : globs.data();
        options.exclude_count = globs.size();
        options.jobs = jobs;
        options.graph_json_path = graph_path.empty() ? nullptr : graph_path.c_str();

        ckm_records* records = nullptr;
        ckm_status status = ckm_extract(src_dir.c_str(), &options, &records);
        if (status != CKM_OK) return finish(status);
        for (size_t i = 0; i < ckm_records_warning_count(records); ++i)
            std::fprintf(stderr, "ckmet: warning: %s\n", ckm_records_warning(records, i));
        status = ckm_records_write(records, out_path.c_str(), fmt);
        if (status == CKM_OK)
            std::fprintf(stderr, "ckmet: %zu classes -> %s\n", ckm_records_count(records),
                         out_path.c_str());
        ckm_records_free(records);
        return finish(status);
    }

    if (analyze->parsed()) {
        auto paths = c_strings(inputs);
        return finish(ckm_analyze(paths.data(), paths.size(), out_path.c_str(), bins,
                                  dedupe ? 1 : 0, fmt));
    }

    if (correlate->parsed()) {
        if (threshold == 0.0 && correlate->count("--threshold") == 0) threshold = 0.8;
        return finish(ckm_correlate(inputs.front().c_str(), out_path.c_str(), threshold,
                                    partition ? 1 : 0, dedupe ? 1 : 0, fmt));
    }

    if (evolve->parsed()) {
        if (threshold == 0.0 && evolve->count("--threshold") == 0) threshold = 0.20;
        auto globs = c_strings(excludes);
        return finish(ckm_evolve(manifest_path.c_str(), out_path.c_str(), threshold,
                                 maturity.empty() ? nullptr : maturity.c_str(),
                                 globs.empty() ? nullptr : globs.data(), globs.size(), jobs,
                                 fmt));
    }

    return static_cast<int>(CKM_ERR_USAGE);
}
