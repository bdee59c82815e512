#include "metrics/records.hpp"

#include "support/csv.hpp"
#include "support/error.hpp"
#include "support/text.hpp"

#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

namespace ckmet::metrics {

int metric_index(std::string_view name) {
    for (std::size_t i = 0; i < k_metrics.size(); ++i) {
        if (name == k_metrics[i].name) return static_cast<int>(i);
    }
    return -1;
}

std::string records_to_csv(const std::vector<ClassMetricsRecord>& records) {
    std::string out = "version,class";
    for (const MetricInfo& m : k_metrics) {
        out.push_back(',');
        out.append(m.name);
    }
    out.push_back('\n');
    std::vector<std::string> row;
    for (const ClassMetricsRecord& r : records) {
        row.clear();
        row.push_back(r.version_id);
        row.push_back(r.class_name);
        for (std::size_t i = 0; i < k_metric_count; ++i) {
            row.push_back(format_value(r.values[i], k_metrics[i].integral));
        }
        csv_append_row(out, row);
    }
    return out;
}

std::vector<ClassMetricsRecord> records_from_csv(std::string_view text,
                                                 std::string_view source_name) {
    auto rows = csv_parse(text);
    std::string where(source_name);
    if (rows.empty()) raise_input(where + ": empty metrics file");

    std::vector<std::string> expected = {"version", "class"};
    for (const MetricInfo& m : k_metrics) expected.emplace_back(m.name);
    if (rows[0].size() != expected.size()) {
        raise_input(where + ":1: bad header (expected " + std::to_string(expected.size()) +
                    " columns, got " + std::to_string(rows[0].size()) + ")");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (rows[0][i] != expected[i]) {
            raise_input(where + ":1: bad header column '" + rows[0][i] + "' (expected '" +
                        expected[i] + "')");
        }
    }

    std::vector<ClassMetricsRecord> out;
    out.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::string line = std::to_string(r + 1);
        if (row.size() != expected.size()) {
            raise_input(where + ":" + line + ": expected " + std::to_string(expected.size()) +
                        " fields, got " + std::to_string(row.size()));
        }
        ClassMetricsRecord rec;
        rec.version_id = row[0];
        rec.class_name = row[1];
        for (std::size_t i = 0; i < k_metric_count; ++i) {
            double v;
            if (!parse_double(row[i + 2], v)) {
                raise_input(where + ":" + line + ": bad numeric value '" + row[i + 2] +
                            "' in column " + k_metrics[i].name);
            }
            rec.values[i] = v;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string records_to_json(const std::vector<ClassMetricsRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ClassMetricsRecord& r : records) {
        nlohmann::ordered_json jr;
        jr["version"] = r.version_id;
        jr["class"] = r.class_name;
        for (std::size_t i = 0; i < k_metric_count; ++i) {
            double v = r.values[i];
            if (std::isnan(v)) {
                jr[k_metrics[i].name] = nullptr;
            } else if (k_metrics[i].integral) {
                jr[k_metrics[i].name] = static_cast<long long>(std::llround(v));
            } else {
                jr[k_metrics[i].name] = v;
            }
        }
        arr.push_back(std::move(jr));
    }
    return arr.dump(2) + "\n";
}

std::vector<ClassMetricsRecord> dedupe_by_class(const std::vector<ClassMetricsRecord>& records) {
    std::map<std::string, std::size_t> last;
    for (std::size_t i = 0; i < records.size(); ++i) last[records[i].class_name] = i;
    std::vector<std::size_t> keep;
    keep.reserve(last.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (last[records[i].class_name] == i) keep.push_back(i);
    }
    std::vector<ClassMetricsRecord> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(records[i]);
    return out;
}

} // namespace ckmet::metrics
