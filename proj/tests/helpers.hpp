#pragma once

#include "model/extract.hpp"
#include "model/graph.hpp"
#include "support/fileio.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace testutil {

inline std::filesystem::path tests_dir() {
    return std::filesystem::path(CKMET_TESTS_DIR);
}

inline std::filesystem::path fixture_corpus() {
    return tests_dir() / "fixtures" / "corpus" / "src";
}

inline std::filesystem::path fixture_error_corpus() {
    return tests_dir() / "fixtures" / "corpus_error" / "src";
}

inline std::filesystem::path expected_metrics_csv() {
    return tests_dir() / "fixtures" / "expected_metrics.csv";
}

// Self-deleting scratch directory; every test gets a fresh one.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("ckmet_test_" + std::to_string(::rand()) + "_" +
                                     std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create a scratch directory");
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    TempDir(TempDir&& other) noexcept : path(std::move(other.path)) { other.path.clear(); }

    ~TempDir() {
        if (path.empty()) return;
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    std::string str() const { return path.string(); }
    std::filesystem::path operator/(const std::string& rel) const { return path / rel; }
};

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

inline std::string slurp(const std::filesystem::path& p) {
    return ckmet::read_file(p);
}

// Parses an ad-hoc set of sources (relative path -> content) into a resolved
// graph; collects resolution warnings for assertions.
struct ParsedTree {
    TempDir dir;
    ckmet::model::CodeGraph graph;
    std::vector<std::string> warnings;
};

inline ParsedTree parse_sources(const std::map<std::string, std::string>& sources,
                                const std::string& version = "test") {
    ParsedTree result;
    for (const auto& [rel, text] : sources) write_file(result.dir.path / rel, text);
    auto tree = ckmet::model::parse_source_tree(result.dir.path, {}, version);
    result.graph = ckmet::model::resolve_references(tree, result.warnings);
    return result;
}

inline std::int32_t class_index(const ckmet::model::CodeGraph& g, const std::string& qname) {
    auto it = g.class_by_name.find(qname);
    return it == g.class_by_name.end() ? -1 : it->second;
}

inline const ckmet::model::ClassEntity* find_class(const ckmet::model::CodeGraph& g,
                                                   const std::string& qname) {
    auto idx = class_index(g, qname);
    return idx < 0 ? nullptr : &g.classes[static_cast<std::size_t>(idx)];
}

inline const ckmet::model::MethodEntity* find_method(const ckmet::model::CodeGraph& g,
                                                     const std::string& qname,
                                                     const std::string& method) {
    const auto* cls = find_class(g, qname);
    if (!cls) return nullptr;
    for (auto mid : cls->methods) {
        const auto& m = g.methods[static_cast<std::size_t>(mid)];
        if (m.name == method) return &m;
    }
    return nullptr;
}

} // namespace testutil
