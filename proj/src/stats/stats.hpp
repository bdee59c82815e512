#pragma once

#include "metrics/records.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ckmet::stats {

// Basic helpers shared by the descriptive and longitudinal reports. All of
// them ignore NaN inputs; an all-NaN (or empty) column yields NaN.
double mean_of(const std::vector<double>& values);
double median_of(std::vector<double> values); // midpoint of central pair for even n
double modus_of(std::vector<double> values);  // most frequent; ties -> smallest
// Linear interpolation between order statistics at position (n-1)*p.
// Requires sorted non-empty input; p in [0,1].
double quantile_linear(const std::vector<double>& sorted_values, double p);

struct MetricSummary {
    double min = 0;
    double mean = 0;
    double max = 0;
    double median = 0;
    double modus = 0;
};

struct DescriptiveSummary {
    std::size_t count = 0; // record rows summarized
    std::array<MetricSummary, metrics::k_metric_count> per_metric{};
};

// Five descriptive statistics for every metric column.
// Throws Error(input) when records is empty.
DescriptiveSummary summarize(const std::vector<metrics::ClassMetricsRecord>& records);

struct Histogram {
    std::string metric;
    std::vector<double> bin_edges;    // ascending; counts.size() + 1 entries
    std::vector<std::int64_t> counts; // right-open bins, last bin right-closed
};

// Equal-width bins over [min, max]; a constant column collapses to a single
// bin [v, v+1). Throws Error(usage) for bins < 1, Error(input) for empty
// records or an unknown metric name.
Histogram histogram(const std::vector<metrics::ClassMetricsRecord>& records,
                    const std::string& metric, int bins);

// Caller-chosen ascending edges; they must cover the sample range.
Histogram histogram_with_edges(const std::vector<metrics::ClassMetricsRecord>& records,
                               const std::string& metric, std::vector<double> edges);

// Spearman rank correlation: fractional (tie-averaged) ranks, then the
// Pearson product-moment correlation of the rank vectors. A constant input
// leaves the coefficient undefined -> NaN. Throws Error(usage) on length
// mismatch or fewer than two observations.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct CorrelationMatrix {
    std::vector<std::string> metric_names;
    std::vector<std::vector<double>> rho; // symmetric; NaN where undefined
    double strong_threshold = 0.8;
    std::string partition_label = "all";

    bool strong(std::size_t i, std::size_t j) const;
};

// Pairwise Spearman over the chosen metric columns. Rows where either
// column is NaN are dropped pairwise; cells left with fewer than two
// complete observations are NaN. Throws Error(input) for unknown metric
// names or empty records.
CorrelationMatrix correlation_matrix(const std::vector<metrics::ClassMetricsRecord>& records,
                                     const std::vector<std::string>& metric_names,
                                     double threshold);

struct QuartilePartition {
    double q1 = 0;
    double q3 = 0;
    std::vector<metrics::ClassMetricsRecord> below_q1;      // loc < Q1
    std::vector<metrics::ClassMetricsRecord> interquartile; // Q1 <= loc <= Q3
    std::vector<metrics::ClassMetricsRecord> above_q3;      // loc > Q3
};

// Splits records into size groups by the LOC quartiles; boundary ties stay
// in the middle group. Throws Error(input) for fewer than four records.
QuartilePartition quartile_partition(const std::vector<metrics::ClassMetricsRecord>& records);

// --- serialization ---------------------------------------------------------

// CSV rows `metric,count,min,mean,max,median,modus`, 6-decimal values.
std::string summary_to_csv(const DescriptiveSummary& summary);
std::string summary_to_json(const DescriptiveSummary& summary);

// CSV rows `bin_low,bin_high,count`.
std::string histogram_to_csv(const Histogram& histogram);
std::string histogram_to_json(const Histogram& histogram);

// CSV lower-triangle rows `metric_a,metric_b,rho,strong` (strong as 1/0).
std::string matrix_to_csv(const CorrelationMatrix& matrix);
std::string matrix_to_json(const CorrelationMatrix& matrix);

} // namespace ckmet::stats
