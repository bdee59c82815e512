#include <doctest.h>

#include "helpers.hpp"

#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the installed command-line binary with stdout/stderr captured.
RunResult run_cli(const std::string& args) {
    testutil::TempDir scratch;
    auto out_path = scratch / "stdout";
    auto err_path = scratch / "stderr";
    std::string cmd = std::string(CKMET_CLI_PATH) + " " + args + " >" + out_path.string() +
                      " 2>" + err_path.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::error_code ec;
    if (std::filesystem::exists(out_path, ec)) r.out = testutil::slurp(out_path);
    if (std::filesystem::exists(err_path, ec)) r.err = testutil::slurp(err_path);
    return r;
}

} // namespace

TEST_CASE("cli: --version reports the library version") {
    auto r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find('.') != std::string::npos);
}

TEST_CASE("cli: misuse exits with the usage code") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("extract").exit_code == 1);          // missing required options
    CHECK(run_cli("bogus-subcommand").exit_code == 1);
    CHECK(run_cli("extract --src x --out y --format xml").exit_code == 1);
}

TEST_CASE("cli: extract writes the frozen record table byte for byte") {
    testutil::TempDir dir;
    auto out = (dir / "records.csv").string();
    auto r = run_cli("extract --src " + testutil::fixture_corpus().string() +
                     " --version-id fixture --out " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("49 classes") != std::string::npos);
    CHECK(testutil::slurp(out) == testutil::slurp(testutil::expected_metrics_csv()));

    // A second run produces the identical byte stream.
    auto out2 = (dir / "records2.csv").string();
    auto r2 = run_cli("extract --src " + testutil::fixture_corpus().string() +
                      " --version-id fixture --jobs 2 --out " + out2);
    REQUIRE(r2.exit_code == 0);
    CHECK(testutil::slurp(out2) == testutil::slurp(out));
}

TEST_CASE("cli: unreadable source roots exit with the input code") {
    auto r = run_cli("extract --src /nonexistent/tree --out /tmp/never.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("cli: a broken file degrades to a warning") {
    testutil::TempDir dir;
    auto out = (dir / "records.csv").string();
    auto r = run_cli("extract --src " + testutil::fixture_error_corpus().string() + " --out " +
                     out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.err.find("Broken.java") != std::string::npos);
    CHECK(r.err.find("3 classes") != std::string::npos);
}

TEST_CASE("cli: analyze and correlate write their report files") {
    testutil::TempDir dir;
    auto records = (dir / "records.csv").string();
    REQUIRE(run_cli("extract --src " + testutil::fixture_corpus().string() +
                    " --version-id fixture --out " + records)
                .exit_code == 0);

    auto adir = (dir / "analysis").string();
    auto ra = run_cli("analyze " + records + " --out " + adir + " --bins 8");
    REQUIRE(ra.exit_code == 0);
    CHECK(std::filesystem::exists(adir + "/summary.csv"));
    CHECK(std::filesystem::exists(adir + "/hist_tcc.csv"));

    CHECK(run_cli("analyze " + records + " --out " + adir + " --bins 0").exit_code == 1);

    auto cdir = (dir / "correlation").string();
    auto rc = run_cli("correlate " + records + " --out " + cdir + " --partition");
    REQUIRE(rc.exit_code == 0);
    CHECK(std::filesystem::exists(cdir + "/matrix_all.csv"));
    CHECK(std::filesystem::exists(cdir + "/matrix_below_q1.csv"));
    CHECK(std::filesystem::exists(cdir + "/matrix_interquartile.csv"));
    CHECK(std::filesystem::exists(cdir + "/matrix_above_q3.csv"));

    CHECK(run_cli("correlate " + records + " --out " + cdir + " --threshold 1.5").exit_code ==
          1);
}

TEST_CASE("cli: json output is accepted everywhere") {
    testutil::TempDir dir;
    auto records = (dir / "records.json").string();
    auto r = run_cli("extract --src " + testutil::fixture_corpus().string() +
                     " --format json --out " + records);
    REQUIRE(r.exit_code == 0);
    auto text = testutil::slurp(records);
    CHECK(text.find("\"class\": \"fix.cohesion.AllShare\"") != std::string::npos);
    CHECK(text.find("\"tcc\": 1.0") != std::string::npos);
}

TEST_CASE("cli: evolve reuses its per-version extraction cache") {
    testutil::TempDir dir;
    testutil::write_file(dir / "v1/p/A.java",
                         "package p;\n\npublic class A {\n    void a() {}\n}\n");
    testutil::write_file(dir / "v2/p/A.java",
                         "package p;\n\npublic class A {\n    void a() {}\n\n    void b() {}\n}\n");
    testutil::write_file(dir / "v2/p/B.java", "package p;\n\npublic class B {\n    int x;\n}\n");
    testutil::write_file(dir / "series.json", R"({
  "application": "demo",
  "versions": [
    {"version_id": "v1", "source_path": "v1"},
    {"version_id": "v2", "source_path": "v2"}
  ]
})");
    auto out = (dir / "evo").string();
    auto base = "evolve --manifest " + (dir / "series.json").string() + " --out " + out +
                " --maturity v2";

    auto first = run_cli(base);
    REQUIRE(first.exit_code == 0);
    CHECK(first.err.find("extracted") != std::string::npos);
    CHECK(first.err.find("cache hit") == std::string::npos);
    CHECK(std::filesystem::exists(out + "/evolution.csv"));
    CHECK(std::filesystem::exists(out + "/disruptions.csv"));
    CHECK(std::filesystem::exists(out + "/variability.csv"));

    auto again = run_cli(base);
    REQUIRE(again.exit_code == 0);
    CHECK(again.err.find("cache hit") != std::string::npos);
    CHECK(again.err.find("extracted") == std::string::npos);

    // Touching a source tree invalidates only that version's cache entry.
    testutil::write_file(dir / "v2/p/B.java",
                         "package p;\n\npublic class B {\n    int x;\n    int y;\n}\n");
    auto third = run_cli(base);
    REQUIRE(third.exit_code == 0);
    CHECK(third.err.find("v1: cache hit") != std::string::npos);
    CHECK(third.err.find("v2: extracted") != std::string::npos);

    CHECK(run_cli("evolve --manifest " + (dir / "missing.json").string() + " --out " + out)
              .exit_code == 2);
}
