#include <doctest.h>

#include "helpers.hpp"
#include "metrics/records.hpp"
#include "model/extract.hpp"
#include "pipeline/pipeline.hpp"
#include "support/csv.hpp"
#include "support/error.hpp"

#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

using namespace ckmet;
using metrics::ClassMetricsRecord;

namespace {

ClassMetricsRecord sample(const std::string& cls, double loc, double tcc) {
    ClassMetricsRecord r;
    r.version_id = "1.0";
    r.class_name = cls;
    r.value(static_cast<std::size_t>(metrics::metric_index("loc"))) = loc;
    r.value(static_cast<std::size_t>(metrics::metric_index("tcc"))) = tcc;
    return r;
}

} // namespace

TEST_CASE("io: records survive a CSV round-trip including undefined values") {
    auto nan_v = std::numeric_limits<double>::quiet_NaN();
    std::vector<ClassMetricsRecord> rs{sample("a.A", 12, 1.0 / 3.0), sample("a.B", 3, nan_v)};
    auto csv = metrics::records_to_csv(rs);

    // Exact canonical header, integers without decimals, rationals with six,
    // NaN spelled out.
    auto rows = csv_parse(csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == "version");
    CHECK(rows[0][1] == "class");
    CHECK(rows[0][2] == "loc");
    CHECK(rows[1][2] == "12");
    CHECK(rows[1][rows[0].size() - 2] == "0.333333");
    CHECK(rows[2][rows[0].size() - 2] == "nan");

    auto back = metrics::records_from_csv(csv, "mem");
    REQUIRE(back.size() == 2);
    CHECK(back[0].class_name == "a.A");
    CHECK(back[0].value(static_cast<std::size_t>(metrics::metric_index("loc"))) == 12.0);
    CHECK(std::isnan(back[1].value(static_cast<std::size_t>(metrics::metric_index("tcc")))));
}

TEST_CASE("io: the strict reader names the file and line of every defect") {
    auto good = metrics::records_to_csv({sample("a.A", 1, 0)});

    CHECK_THROWS_WITH_AS(metrics::records_from_csv("", "r.csv"), doctest::Contains("r.csv"),
                         Error);
    CHECK_THROWS_WITH_AS(metrics::records_from_csv("version,class,loc\n", "r.csv"),
                         doctest::Contains("r.csv:1"), Error);

    std::string swapped = good;
    auto pos = swapped.find("loc");
    swapped.replace(pos, 3, "LOC");
    CHECK_THROWS_WITH_AS(metrics::records_from_csv(swapped, "r.csv"),
                         doctest::Contains("bad header column"), Error);

    std::string short_row = good + "1.0,a.B,1,2\n";
    CHECK_THROWS_WITH_AS(metrics::records_from_csv(short_row, "r.csv"),
                         doctest::Contains("r.csv:3"), Error);

    std::string bad_number = good;
    bad_number.replace(bad_number.rfind(",0.000000,"), 10, ",zero,");
    CHECK_THROWS_WITH_AS(metrics::records_from_csv(bad_number, "r.csv"),
                         doctest::Contains("bad numeric value"), Error);
}

TEST_CASE("io: JSON records render undefined as null and integers as integers") {
    auto nan_v = std::numeric_limits<double>::quiet_NaN();
    auto text = metrics::records_to_json({sample("a.A", 7, nan_v)});
    auto json = nlohmann::json::parse(text);
    REQUIRE(json.size() == 1);
    CHECK(json[0]["version"] == "1.0");
    CHECK(json[0]["class"] == "a.A");
    CHECK(json[0]["loc"].is_number_integer());
    CHECK(json[0]["loc"] == 7);
    CHECK(json[0]["tcc"].is_null());
}

TEST_CASE("io: class-level dedupe keeps the last row in last-seen order") {
    std::vector<ClassMetricsRecord> rs{sample("a.A", 1, 0), sample("a.B", 2, 0),
                                       sample("a.A", 3, 0), sample("a.C", 4, 0)};
    auto out = metrics::dedupe_by_class(rs);
    REQUIRE(out.size() == 3);
    CHECK(out[0].class_name == "a.B");
    CHECK(out[1].class_name == "a.A");
    CHECK(out[1].value(static_cast<std::size_t>(metrics::metric_index("loc"))) == 3.0);
    CHECK(out[2].class_name == "a.C");
}

TEST_CASE("io: record files concatenate in argument order") {
    testutil::TempDir dir;
    testutil::write_file(dir / "one.csv", metrics::records_to_csv({sample("a.A", 1, 0)}));
    testutil::write_file(dir / "two.csv", metrics::records_to_csv({sample("b.B", 2, 0)}));
    auto rs = pipeline::read_record_files({(dir / "two.csv").string(), (dir / "one.csv").string()});
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].class_name == "b.B");
    CHECK(rs[1].class_name == "a.A");
    CHECK_THROWS_AS(pipeline::read_record_files({(dir / "missing.csv").string()}), Error);
}

TEST_CASE("io: the graph dump is deterministic, including under parallel parsing") {
    std::vector<std::string> w1, w2;
    auto t1 = model::parse_source_tree(testutil::fixture_corpus(), {}, "fixture", 1);
    auto g1 = model::resolve_references(t1, w1);
    auto t2 = model::parse_source_tree(testutil::fixture_corpus(), {}, "fixture", 3);
    auto g2 = model::resolve_references(t2, w2);
    CHECK(w1.empty());
    CHECK(w2.empty());
    auto j1 = model::graph_to_json(g1);
    auto j2 = model::graph_to_json(g2);
    CHECK(j1 == j2);
    CHECK(j1.find("\"classes\"") != std::string::npos);

    // The metric records derived from both parses are identical too.
    CHECK(metrics::records_to_csv(metrics::compute_all(g1)) ==
          metrics::records_to_csv(metrics::compute_all(g2)));
}
