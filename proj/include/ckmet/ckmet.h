#ifndef CKMET_CKMET_H
#define CKMET_CKMET_H

/*
 * ckmet - class-level code metrics extraction and analysis for Java sources.
 *
 * The library parses a source tree into an entity graph, computes a fixed
 * set of class-level metrics (size, coupling, cohesion, inheritance and
 * documentation), and offers the statistical reports built on top of them:
 * descriptive summaries, histograms, rank-correlation matrices with
 * size-quartile stratification, and cross-version evolution analysis.
 *
 * All functions are thread-compatible: distinct ckm_records handles may be
 * used from distinct threads, but a single handle must not be shared
 * without external synchronization. Failure details are reported per
 * thread via ckm_last_error().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CKM_API __declspec(dllexport)
#else
#define CKM_API __attribute__((visibility("default")))
#endif

/* Stable status codes; the command-line tool reuses them as exit codes. */
typedef enum ckm_status {
    CKM_OK = 0,
    CKM_ERR_USAGE = 1,   /* caller broke the contract (bad argument) */
    CKM_ERR_INPUT = 2,   /* unusable input data (missing dir, bad CSV) */
    CKM_ERR_INTERNAL = 3 /* bug or environmental failure */
} ckm_status;

typedef enum ckm_format { CKM_FORMAT_CSV = 0, CKM_FORMAT_JSON = 1 } ckm_format;

/* Library version as "major.minor.patch". */
CKM_API const char* ckm_version(void);

/*
 * Message describing the most recent failure on the calling thread, or an
 * empty string. Valid until the next ckmet call on the same thread.
 */
CKM_API const char* ckm_last_error(void);

/*
 * A measurement table: one row per analyzed class, one column per metric.
 * Owned by the caller; release with ckm_records_free.
 */
typedef struct ckm_records ckm_records;

typedef struct ckm_extract_options {
    const char* version_id;           /* label stored in every row; NULL -> "unversioned" */
    const char* const* exclude_globs; /* shell-style relative-path globs; may be NULL */
    size_t exclude_count;
    unsigned jobs;                    /* parser worker threads; 0 or 1 -> serial */
    const char* graph_json_path;      /* when set, dump the entity graph as JSON */
} ckm_extract_options;

/*
 * Parse every .java file under src_dir, resolve cross-class references and
 * compute all metrics. Unparseable files degrade to warnings on the handle;
 * the call fails only for unusable roots or an inheritance cycle.
 * options may be NULL for defaults.
 */
CKM_API ckm_status ckm_extract(const char* src_dir, const ckm_extract_options* options,
                               ckm_records** out_records);

/* Load a records CSV previously produced by this library. */
CKM_API ckm_status ckm_records_read_csv(const char* csv_path, ckm_records** out_records);

/* Append a copy of src's rows (and warnings) to dst. */
CKM_API ckm_status ckm_records_merge(ckm_records* dst, const ckm_records* src);

CKM_API size_t ckm_records_count(const ckm_records* records);

/* Row accessors; strings are valid while the handle lives. NULL on bad row. */
CKM_API const char* ckm_records_class_name(const ckm_records* records, size_t row);
CKM_API const char* ckm_records_version_id(const ckm_records* records, size_t row);

/*
 * Fetch one cell by metric column name ("loc", "cbo", "dac", "dit", "ilcom",
 * "lcom", "ld", "len", "lod", "mpc", "nam", "noc", "nom", "rfc", "tcc",
 * "wmc"). Rational metrics may be NaN-free by construction, but values read
 * from CSV can be NaN.
 */
CKM_API ckm_status ckm_records_value(const ckm_records* records, size_t row,
                                     const char* metric, double* out_value);

CKM_API size_t ckm_records_warning_count(const ckm_records* records);
CKM_API const char* ckm_records_warning(const ckm_records* records, size_t index);

/* Write the table to out_path (atomically) in the chosen format. */
CKM_API ckm_status ckm_records_write(const ckm_records* records, const char* out_path,
                                     ckm_format format);

CKM_API void ckm_records_free(ckm_records* records);

/*
 * Descriptive statistics + histograms over one or more record CSVs, merged
 * in the given order. Writes summary.<fmt> and hist_<metric>.<fmt> files
 * into out_dir. dedupe != 0 keeps only the last row per class name.
 */
CKM_API ckm_status ckm_analyze(const char* const* in_csv_paths, size_t in_count,
                               const char* out_dir, int bins, int dedupe, ckm_format format);

/*
 * Spearman correlation matrix over all metric columns (matrix_all.<fmt>),
 * plus, when partition != 0, the three LOC-quartile strata matrices without
 * the LOC column itself. Cells with |rho| >= threshold are flagged strong.
 */
CKM_API ckm_status ckm_correlate(const char* in_csv_path, const char* out_dir,
                                 double threshold, int partition, int dedupe,
                                 ckm_format format);

/*
 * Extract every version listed in a JSON manifest ({"application": ...,
 * "versions": [{"version_id", "source_path", "date"?}, ...]}), reusing
 * cached per-version results under <out_dir>/cache. Writes evolution.<fmt>,
 * disruptions.<fmt> and variability.<fmt>. maturity_version may be NULL to
 * use the built-in split for known application names; consecutive version
 * pairs whose aggregates move by at least `threshold` (relative) are
 * flagged as disruptions.
 */
CKM_API ckm_status ckm_evolve(const char* manifest_path, const char* out_dir,
                              double threshold, const char* maturity_version,
                              const char* const* exclude_globs, size_t exclude_count,
                              unsigned jobs, ckm_format format);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CKMET_CKMET_H */
