#include "ckmet/ckmet.h"

#include "metrics/records.hpp"
#include "model/graph.hpp"
#include "pipeline/pipeline.hpp"
#include "support/error.hpp"
#include "support/fileio.hpp"

#include <cmath>
#include <string>
#include <vector>

struct ckm_records {
    std::vector<ckmet::metrics::ClassMetricsRecord> rows;
    std::vector<std::string> warnings;
};

namespace {

thread_local std::string t_last_error;

void clear_error() { t_last_error.clear(); }

ckm_status set_error(ckm_status status, std::string message) {
    t_last_error = std::move(message);
    return status;
}

ckm_status status_of(const ckmet::Error& e) {
    switch (e.kind()) {
    case ckmet::ErrorKind::usage: return CKM_ERR_USAGE;
    case ckmet::ErrorKind::input: return CKM_ERR_INPUT;
    case ckmet::ErrorKind::internal: return CKM_ERR_INTERNAL;
    }
    return CKM_ERR_INTERNAL;
}

// Runs the body and converts the library's error taxonomy to status codes.
template <typename Fn> ckm_status guarded(Fn&& fn) {
    clear_error();
    try {
        fn();
        return CKM_OK;
    } catch (const ckmet::Error& e) {
        return set_error(status_of(e), e.what());
    } catch (const std::exception& e) {
        return set_error(CKM_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CKM_ERR_INTERNAL, "unknown failure");
    }
}

std::vector<std::string> collect_strings(const char* const* items, size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (items[i] == nullptr) ckmet::raise_usage("null string in argument list");
        out.emplace_back(items[i]);
    }
    return out;
}

ckm_status require(bool ok, const char* what) {
    if (ok) return CKM_OK;
    return set_error(CKM_ERR_USAGE, std::string("invalid argument: ") + what);
}

ckmet::pipeline::OutputFormat to_format(ckm_format f) {
    return f == CKM_FORMAT_JSON ? ckmet::pipeline::OutputFormat::json
                                : ckmet::pipeline::OutputFormat::csv;
}

} // namespace

extern "C" {

const char* ckm_version(void) { return CKMET_VERSION_STRING; }

const char* ckm_last_error(void) { return t_last_error.c_str(); }

ckm_status ckm_extract(const char* src_dir, const ckm_extract_options* options,
                       ckm_records** out_records) {
    if (auto s = require(src_dir && out_records, "ckm_extract needs src_dir and out_records");
        s != CKM_OK)
        return s;
    *out_records = nullptr;
    return guarded([&] {
        ckmet::pipeline::ExtractOptions ex;
        const char* graph_path = nullptr;
        if (options) {
            if (options->version_id) ex.version_id = options->version_id;
            if (options->exclude_count > 0) {
                if (!options->exclude_globs)
                    ckmet::raise_usage("exclude_count set but exclude_globs is null");
                ex.excludes = collect_strings(options->exclude_globs, options->exclude_count);
            }
            if (options->jobs > 1) ex.jobs = options->jobs;
            graph_path = options->graph_json_path;
        }
        auto result = ckmet::pipeline::extract_tree(src_dir, ex);
        if (graph_path) ckmet::atomic_write(graph_path, ckmet::model::graph_to_json(result.graph));
        auto handle = new ckm_records{std::move(result.records), std::move(result.warnings)};
        *out_records = handle;
    });
}

ckm_status ckm_records_read_csv(const char* csv_path, ckm_records** out_records) {
    if (auto s = require(csv_path && out_records, "ckm_records_read_csv needs path and out");
        s != CKM_OK)
        return s;
    *out_records = nullptr;
    return guarded([&] {
        auto rows = ckmet::metrics::records_from_csv(ckmet::read_file(csv_path), csv_path);
        *out_records = new ckm_records{std::move(rows), {}};
    });
}

ckm_status ckm_records_merge(ckm_records* dst, const ckm_records* src) {
    if (auto s = require(dst && src, "ckm_records_merge needs two handles"); s != CKM_OK)
        return s;
    return guarded([&] {
        dst->rows.insert(dst->rows.end(), src->rows.begin(), src->rows.end());
        dst->warnings.insert(dst->warnings.end(), src->warnings.begin(), src->warnings.end());
    });
}

size_t ckm_records_count(const ckm_records* records) {
    return records ? records->rows.size() : 0;
}

const char* ckm_records_class_name(const ckm_records* records, size_t row) {
    if (!records || row >= records->rows.size()) return nullptr;
    return records->rows[row].class_name.c_str();
}

const char* ckm_records_version_id(const ckm_records* records, size_t row) {
    if (!records || row >= records->rows.size()) return nullptr;
    return records->rows[row].version_id.c_str();
}

ckm_status ckm_records_value(const ckm_records* records, size_t row, const char* metric,
                             double* out_value) {
    if (auto s = require(records && metric && out_value,
                         "ckm_records_value needs handle, metric and out_value");
        s != CKM_OK)
        return s;
    if (row >= records->rows.size())
        return set_error(CKM_ERR_USAGE, "row index out of range");
    int idx = ckmet::metrics::metric_index(metric);
    if (idx < 0) return set_error(CKM_ERR_USAGE, std::string("unknown metric: ") + metric);
    clear_error();
    *out_value = records->rows[row].value(static_cast<size_t>(idx));
    return CKM_OK;
}

size_t ckm_records_warning_count(const ckm_records* records) {
    return records ? records->warnings.size() : 0;
}

const char* ckm_records_warning(const ckm_records* records, size_t index) {
    if (!records || index >= records->warnings.size()) return nullptr;
    return records->warnings[index].c_str();
}

ckm_status ckm_records_write(const ckm_records* records, const char* out_path,
                             ckm_format format) {
    if (auto s = require(records && out_path, "ckm_records_write needs handle and path");
        s != CKM_OK)
        return s;
    return guarded([&] {
        std::string payload = format == CKM_FORMAT_JSON
                                  ? ckmet::metrics::records_to_json(records->rows)
                                  : ckmet::metrics::records_to_csv(records->rows);
        ckmet::atomic_write(out_path, payload);
    });
}

void ckm_records_free(ckm_records* records) { delete records; }

ckm_status ckm_analyze(const char* const* in_csv_paths, size_t in_count, const char* out_dir,
                       int bins, int dedupe, ckm_format format) {
    if (auto s = require(in_csv_paths && in_count > 0 && out_dir,
                         "ckm_analyze needs input CSVs and an output directory");
        s != CKM_OK)
        return s;
    return guarded([&] {
        ckmet::pipeline::AnalyzeOptions options;
        options.bins = bins;
        options.dedupe = dedupe != 0;
        options.format = to_format(format);
        ckmet::pipeline::run_analyze(collect_strings(in_csv_paths, in_count), out_dir, options);
    });
}

ckm_status ckm_correlate(const char* in_csv_path, const char* out_dir, double threshold,
                         int partition, int dedupe, ckm_format format) {
    if (auto s = require(in_csv_path && out_dir,
                         "ckm_correlate needs an input CSV and an output directory");
        s != CKM_OK)
        return s;
    return guarded([&] {
        ckmet::pipeline::CorrelateOptions options;
        options.threshold = threshold;
        options.partition = partition != 0;
        options.dedupe = dedupe != 0;
        options.format = to_format(format);
        ckmet::pipeline::run_correlate(in_csv_path, out_dir, options);
    });
}

ckm_status ckm_evolve(const char* manifest_path, const char* out_dir, double threshold,
                      const char* maturity_version, const char* const* exclude_globs,
                      size_t exclude_count, unsigned jobs, ckm_format format) {
    if (auto s = require(manifest_path && out_dir,
                         "ckm_evolve needs a manifest and an output directory");
        s != CKM_OK)
        return s;
    return guarded([&] {
        ckmet::pipeline::EvolveOptions options;
        options.threshold = threshold;
        if (maturity_version) options.maturity_version = maturity_version;
        if (exclude_count > 0) {
            if (!exclude_globs)
                ckmet::raise_usage("exclude_count set but exclude_globs is null");
            options.excludes = collect_strings(exclude_globs, exclude_count);
        }
        if (jobs > 1) options.jobs = jobs;
        options.format = to_format(format);
        ckmet::pipeline::run_evolve(manifest_path, out_dir, options);
    });
}

} // extern "C"
