#include "stats/stats.hpp"

#include "support/error.hpp"
#include "support/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ckmet::stats {

namespace {

constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

// Drops NaNs; statistics are defined over the observed values only.
std::vector<double> finite_only(const std::vector<double>& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values)
        if (!std::isnan(v)) out.push_back(v);
    return out;
}

std::vector<double> column_of(const std::vector<metrics::ClassMetricsRecord>& records,
                              int metric) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.value(static_cast<std::size_t>(metric)));
    return out;
}

int metric_or_raise(const std::string& name) {
    int idx = metrics::metric_index(name);
    if (idx < 0) raise_input("unknown metric name: " + name);
    return idx;
}

// Tie-averaged (fractional) ranks, 1-based.
std::vector<double> fractional_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0;
    double sxx = 0;
    double syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return k_nan;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

double mean_of(const std::vector<double>& values) {
    auto v = finite_only(values);
    if (v.empty()) return k_nan;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median_of(std::vector<double> values) {
    auto v = finite_only(values);
    if (v.empty()) return k_nan;
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

double modus_of(std::vector<double> values) {
    auto v = finite_only(values);
    if (v.empty()) return k_nan;
    std::sort(v.begin(), v.end());
    double best = v[0];
    std::size_t best_count = 0;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
        std::size_t count = j - i + 1;
        if (count > best_count) { // strict: ties keep the earlier (smaller) value
            best_count = count;
            best = v[i];
        }
        i = j + 1;
    }
    return best;
}

double quantile_linear(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) return k_nan;
    double pos = p * static_cast<double>(sorted_values.size() - 1);
    auto lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, sorted_values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] + (sorted_values[hi] - sorted_values[lo]) * frac;
}

DescriptiveSummary summarize(const std::vector<metrics::ClassMetricsRecord>& records) {
    if (records.empty()) raise_input("cannot summarize an empty record set");
    DescriptiveSummary out;
    out.count = records.size();
    for (std::size_t m = 0; m < metrics::k_metric_count; ++m) {
        auto v = finite_only(column_of(records, static_cast<int>(m)));
        auto& s = out.per_metric[m];
        if (v.empty()) {
            s = {k_nan, k_nan, k_nan, k_nan, k_nan};
            continue;
        }
        auto [mn, mx] = std::minmax_element(v.begin(), v.end());
        s.min = *mn;
        s.max = *mx;
        s.mean = mean_of(v);
        s.median = median_of(v);
        s.modus = modus_of(v);
    }
    return out;
}

namespace {

Histogram fill_histogram(std::string metric, std::vector<double> values,
                         std::vector<double> edges) {
    Histogram h;
    h.metric = std::move(metric);
    h.bin_edges = std::move(edges);
    h.counts.assign(h.bin_edges.size() - 1, 0);
    for (double v : values) {
        // Last bin is right-closed so the maximum lands inside the range.
        auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), v);
        std::size_t idx = it == h.bin_edges.begin()
                              ? 0
                              : static_cast<std::size_t>(it - h.bin_edges.begin()) - 1;
        if (idx >= h.counts.size()) idx = h.counts.size() - 1;
        ++h.counts[idx];
    }
    return h;
}

std::vector<double> histogram_values(const std::vector<metrics::ClassMetricsRecord>& records,
                                     const std::string& metric) {
    if (records.empty()) raise_input("cannot build a histogram from an empty record set");
    auto v = finite_only(column_of(records, metric_or_raise(metric)));
    if (v.empty()) raise_input("metric column holds no values: " + metric);
    return v;
}

} // namespace

Histogram histogram(const std::vector<metrics::ClassMetricsRecord>& records,
                    const std::string& metric, int bins) {
    if (bins < 1) raise_usage("histogram bin count must be positive");
    auto v = histogram_values(records, metric);
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    double lo = *mn;
    double hi = *mx;
    if (lo == hi) return fill_histogram(metric, std::move(v), {lo, lo + 1.0});
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    edges.back() = hi; // exact upper edge, independent of rounding
    return fill_histogram(metric, std::move(v), std::move(edges));
}

Histogram histogram_with_edges(const std::vector<metrics::ClassMetricsRecord>& records,
                               const std::string& metric, std::vector<double> edges) {
    if (edges.size() < 2) raise_input("histogram needs at least two bin edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            raise_input("histogram bin edges must be strictly ascending");
    auto v = histogram_values(records, metric);
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    if (*mn < edges.front() || *mx > edges.back())
        raise_input("histogram bin edges do not cover the value range");
    return fill_histogram(metric, std::move(v), std::move(edges));
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        raise_usage("correlation inputs differ in length");
    if (x.size() < 2)
        raise_usage("correlation needs at least two observations");
    return pearson(fractional_ranks(x), fractional_ranks(y));
}

bool CorrelationMatrix::strong(std::size_t i, std::size_t j) const {
    double v = rho[i][j];
    return !std::isnan(v) && std::fabs(v) >= strong_threshold;
}

CorrelationMatrix correlation_matrix(const std::vector<metrics::ClassMetricsRecord>& records,
                                     const std::vector<std::string>& metric_names,
                                     double threshold) {
    if (records.empty()) raise_input("cannot correlate an empty record set");
    CorrelationMatrix m;
    m.metric_names = metric_names;
    m.strong_threshold = threshold;
    std::vector<std::vector<double>> cols;
    cols.reserve(metric_names.size());
    for (const auto& name : metric_names) cols.push_back(column_of(records, metric_or_raise(name)));

    std::size_t n = metric_names.size();
    m.rho.assign(n, std::vector<double>(n, k_nan));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            // Pairwise-complete observations: drop rows where either side is NaN.
            std::vector<double> xs;
            std::vector<double> ys;
            for (std::size_t r = 0; r < records.size(); ++r) {
                if (std::isnan(cols[i][r]) || std::isnan(cols[j][r])) continue;
                xs.push_back(cols[i][r]);
                ys.push_back(cols[j][r]);
            }
            double rho = xs.size() < 2 ? k_nan : spearman(xs, ys);
            m.rho[i][j] = rho;
            m.rho[j][i] = rho;
        }
    }
    return m;
}

QuartilePartition quartile_partition(const std::vector<metrics::ClassMetricsRecord>& records) {
    if (records.size() < 4)
        raise_input("quartile partitioning needs at least four records");
    int loc = metrics::metric_index("loc");
    auto values = column_of(records, loc);
    std::sort(values.begin(), values.end());
    QuartilePartition p;
    p.q1 = quantile_linear(values, 0.25);
    p.q3 = quantile_linear(values, 0.75);
    for (const auto& r : records) {
        double v = r.value(static_cast<std::size_t>(loc));
        if (v < p.q1)
            p.below_q1.push_back(r);
        else if (v > p.q3)
            p.above_q3.push_back(r);
        else
            p.interquartile.push_back(r);
    }
    return p;
}

} // namespace ckmet::stats
