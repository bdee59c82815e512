#include "stats/stats.hpp"

#include "support/csv.hpp"
#include "support/text.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace ckmet::stats {

namespace {

using ordered_json = nlohmann::ordered_json;

// NaN has no JSON literal; undefined statistics appear as null.
ordered_json json_number(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

} // namespace

std::string summary_to_csv(const DescriptiveSummary& summary) {
    std::string out;
    csv_append_row(out, {"metric", "count", "min", "mean", "max", "median", "modus"});
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        const auto& s = summary.per_metric[m];
        csv_append_row(out, {metrics::k_metrics[m].name, std::to_string(summary.count),
                             format_fixed6(s.min), format_fixed6(s.mean), format_fixed6(s.max),
                             format_fixed6(s.median), format_fixed6(s.modus)});
    }
    return out;
}

std::string summary_to_json(const DescriptiveSummary& summary) {
    ordered_json root;
    root["count"] = summary.count;
    ordered_json per_metric;
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        const auto& s = summary.per_metric[m];
        ordered_json entry;
        entry["min"] = json_number(s.min);
        entry["mean"] = json_number(s.mean);
        entry["max"] = json_number(s.max);
        entry["median"] = json_number(s.median);
        entry["modus"] = json_number(s.modus);
        per_metric[metrics::k_metrics[m].name] = std::move(entry);
    }
    root["metrics"] = std::move(per_metric);
    return root.dump(2) + "\n";
}

std::string histogram_to_csv(const Histogram& histogram) {
    std::string out;
    csv_append_row(out, {"bin_low", "bin_high", "count"});
    for (std::size_t i = 0; i < histogram.counts.size(); ++i)
        csv_append_row(out, {format_fixed6(histogram.bin_edges[i]),
                             format_fixed6(histogram.bin_edges[i + 1]),
                             std::to_string(histogram.counts[i])});
    return out;
}

std::string histogram_to_json(const Histogram& histogram) {
    ordered_json root;
    root["metric"] = histogram.metric;
    root["edges"] = histogram.bin_edges;
    root["counts"] = histogram.counts;
    return root.dump(2) + "\n";
}

std::string matrix_to_csv(const CorrelationMatrix& matrix) {
    std::string out;
    csv_append_row(out, {"metric_a", "metric_b", "rho", "strong"});
    for (std::size_t i = 1; i < matrix.metric_names.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            csv_append_row(out, {matrix.metric_names[i], matrix.metric_names[j],
                                 format_fixed6(matrix.rho[i][j]),
                                 matrix.strong(i, j) ? "1" : "0"});
    return out;
}

std::string matrix_to_json(const CorrelationMatrix& matrix) {
    ordered_json root;
    root["partition"] = matrix.partition_label;
    root["threshold"] = matrix.strong_threshold;
    root["metrics"] = matrix.metric_names;
    ordered_json rho = ordered_json::array();
    ordered_json strong = ordered_json::array();
    for (std::size_t i = 0; i < matrix.metric_names.size(); ++i) {
        ordered_json rho_row = ordered_json::array();
        ordered_json strong_row = ordered_json::array();
        for (std::size_t j = 0; j < matrix.metric_names.size(); ++j) {
            rho_row.push_back(json_number(matrix.rho[i][j]));
            strong_row.push_back(matrix.strong(i, j));
        }
        rho.push_back(std::move(rho_row));
        strong.push_back(std::move(strong_row));
    }
    root["rho"] = std::move(rho);
    root["strong"] = std::move(strong);
    return root.dump(2) + "\n";
}

} // namespace ckmet::stats
