#pragma once

#include "evo/evo.hpp"
#include "metrics/compute.hpp"
#include "model/graph.hpp"

#include <string>
#include <vector>

namespace ckmet::pipeline {

enum class OutputFormat { csv, json };

struct ExtractOptions {
    std::string version_id = "unversioned";
    std::vector<std::string> excludes;
    unsigned jobs = 1;
};

struct ExtractResult {
    std::vector<metrics::ClassMetricsRecord> records; // sorted by class name
    std::vector<std::string> warnings;                // partial parses etc.
    model::CodeGraph graph;
};

// Parse + resolve + measure one source tree. Partial parses become warnings;
// an unreadable root or an inheritance cycle raises Error(input).
ExtractResult extract_tree(const std::string& src_dir, const ExtractOptions& options);

// Reads and concatenates record CSVs in the given order.
std::vector<metrics::ClassMetricsRecord> read_record_files(const std::vector<std::string>& paths);

struct AnalyzeOptions {
    int bins = 10;
    bool dedupe = false;
    OutputFormat format = OutputFormat::csv;
};

// Writes summary.<fmt> and one hist_<metric>.<fmt> per metric into out_dir.
void run_analyze(const std::vector<std::string>& in_csvs, const std::string& out_dir,
                 const AnalyzeOptions& options);

struct CorrelateOptions {
    double threshold = 0.8;
    bool partition = false;
    bool dedupe = false;
    OutputFormat format = OutputFormat::csv;
};

// Writes matrix_all.<fmt>; with partition also matrix_below_q1 /
// matrix_interquartile / matrix_above_q3 over the non-LOC metrics.
void run_correlate(const std::string& in_csv, const std::string& out_dir,
                   const CorrelateOptions& options);

struct EvolveOptions {
    double threshold = 0.20;
    std::string maturity_version; // empty -> application default, if known
    std::vector<std::string> excludes;
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::csv;
};

// Extracts every manifest version (cached under <out_dir>/cache keyed by
// version id + source tree content hash), then writes evolution.<fmt>,
// disruptions.<fmt> and, when a maturity split is known, variability.<fmt>.
// Per-version timing goes to stderr.
void run_evolve(const std::string& manifest_path, const std::string& out_dir,
                const EvolveOptions& options);

// The 16 record columns; with_loc=false drops "loc" (partitioned matrices).
std::vector<std::string> metric_names(bool with_loc);

} // namespace ckmet::pipeline
