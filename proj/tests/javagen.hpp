#pragma once

// Deterministic generator for a realistic multi-package Java source tree.
// Class sizes follow a skewed latent scale; coupling, calls, inheritance and
// documentation all derive from it the way they do in grown codebases, so
// extracted metrics show natural variance instead of degenerate columns.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

struct JavaGenStats {
    int classes = 0;
    long long total_lines = 0;
};

inline JavaGenStats generate_java_project(const std::filesystem::path& root, std::uint64_t seed,
                                          int n_classes) {
    static const char* k_prefix[] = {"Data",   "File",  "Node",   "View",   "Task",   "Event",
                                     "Cache",  "Parse", "Index",  "Layout", "Audio",  "Buffer",
                                     "Config", "Render", "Search", "Model",  "Panel",  "Stream",
                                     "Filter", "Widget", "Shape",  "Route",  "Token",  "Store",
                                     "Graph",  "Sound",  "Input",  "Print",  "Batch",  "Theme"};
    static const char* k_suffix[] = {"Manager", "Handler", "Service", "Builder", "Helper",
                                     "Adapter", "Writer",  "Reader",  "Context", "Entry",
                                     "Engine",  "Factory", "Worker",  "Monitor", "Tracker",
                                     "Mapper",  "Queue",   "Registry", "Scanner", "State"};
    static const char* k_packages[] = {"app.core", "app.model", "app.ui", "app.util",
                                       "app.io"};
    static const char* k_verbs[] = {"update", "load", "flush", "resolve", "apply",
                                    "merge",  "scan",  "emit",  "reset",   "bind"};

    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
    };
    auto chance = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    struct ClassPlan {
        std::string name;
        std::string pkg;
        double scale = 1.0;
        int parent = -1;
        int n_fields = 0;
        int n_methods = 0;
        std::vector<int> deps; // indices of collaborator classes
    };

    std::vector<ClassPlan> plan(static_cast<std::size_t>(n_classes));
    std::set<std::string> used_names;
    // Real class sizes are heavily skewed (a few god classes, many small
    // ones); the wide latent spread is what lets every size-driven metric
    // rank classes consistently.
    std::normal_distribution<double> latent(0.0, 1.1);

    // Identity and size first; parents point backwards so inheritance stays
    // acyclic (collaboration, unlike inheritance, may form cycles).
    for (int i = 0; i < n_classes; ++i) {
        ClassPlan& c = plan[static_cast<std::size_t>(i)];
        do {
            c.name = std::string(k_prefix[pick(0, 29)]) + k_suffix[pick(0, 19)];
        } while (!used_names.insert(c.name).second);
        c.pkg = k_packages[pick(0, 4)];
        c.scale = std::exp(latent(rng)); // skewed class-size factor
        c.n_methods = std::clamp(static_cast<int>(1 + c.scale * pick(1, 5)), 1, 40);
        c.n_fields = std::clamp(static_cast<int>(c.scale * pick(0, 3)), 0, 12);
        if (i > 0 && chance(0.3)) c.parent = pick(0, i - 1);
    }

    // Collaborators are drawn from the whole population with weight
    // proportional to the target's method count: grown codebases concentrate
    // usage on their central service classes, which couples a class's fan-in
    // to its own size.
    long long weight_total = 0;
    for (const auto& c : plan) weight_total += c.n_methods;
    auto pick_collaborator = [&] {
        long long roll = std::uniform_int_distribution<long long>(0, weight_total - 1)(rng);
        for (int d = 0; d < n_classes; ++d) {
            roll -= plan[static_cast<std::size_t>(d)].n_methods;
            if (roll < 0) return d;
        }
        return n_classes - 1;
    };
    for (int i = 0; i < n_classes; ++i) {
        ClassPlan& c = plan[static_cast<std::size_t>(i)];
        int want_deps = std::min(n_classes - 1,
                                 std::clamp(static_cast<int>(c.scale * pick(1, 4)), 1, 16));
        std::set<int> deps;
        int attempts = 0;
        while (static_cast<int>(deps.size()) < want_deps && ++attempts < 96) {
            int d = pick_collaborator();
            if (d != i) deps.insert(d);
        }
        c.deps.assign(deps.begin(), deps.end());
    }

    JavaGenStats stats;
    stats.classes = n_classes;

    for (int i = 0; i < n_classes; ++i) {
        const ClassPlan& c = plan[static_cast<std::size_t>(i)];
        std::string src;
        src += "package " + c.pkg + ";\n\n";

        std::set<std::string> imports;
        if (c.parent >= 0) {
            const ClassPlan& p = plan[static_cast<std::size_t>(c.parent)];
            if (p.pkg != c.pkg) imports.insert(p.pkg + "." + p.name);
        }
        for (int d : c.deps) {
            const ClassPlan& p = plan[static_cast<std::size_t>(d)];
            if (p.pkg != c.pkg) imports.insert(p.pkg + "." + p.name);
        }
        for (const auto& imp : imports) src += "import " + imp + ";\n";
        if (!imports.empty()) src += "\n";

        if (chance(0.35)) src += "/** Coordinates " + c.name + " duties. */\n";
        src += "public class " + c.name;
        if (c.parent >= 0) src += " extends " + plan[static_cast<std::size_t>(c.parent)].name;
        src += " {\n";

        for (int f = 0; f < c.n_fields; ++f) {
            static const char* types[] = {"int", "long", "boolean", "String"};
            src += "    private " + std::string(types[pick(0, 3)]) + " item" +
                   std::to_string(f) + ";\n";
        }
        for (std::size_t d = 0; d < c.deps.size(); ++d) {
            src += "    private " + plan[static_cast<std::size_t>(c.deps[d])].name + " dep" +
                   std::to_string(d) + ";\n";
        }
        if (c.n_fields + static_cast<int>(c.deps.size()) > 0) src += "\n";

        for (int m = 0; m < c.n_methods; ++m) {
            std::string mname = std::string(k_verbs[m % 10]) + std::to_string(m / 10);
            if (chance(0.2)) src += "    /** Performs the " + mname + " step. */\n";
            bool returns = chance(0.4);
            src += "    public " + std::string(returns ? "int " : "void ") + mname + "(int n) {\n";
            // A class calls every collaborator it holds; an untouched field
            // would not survive review in a real codebase.
            for (std::size_t d = m; d < c.deps.size();
                 d += static_cast<std::size_t>(c.n_methods)) {
                const ClassPlan& t = plan[static_cast<std::size_t>(c.deps[d])];
                int mi = pick(0, t.n_methods - 1);
                src += "        dep" + std::to_string(d) + "." +
                       k_verbs[mi % 10] + std::to_string(mi / 10) + "(n);\n";
            }
            // Call density per method is roughly constant in grown code, so
            // the class-wide call volume follows the method count.
            int extra = c.deps.empty() ? 0 : pick(1, 3);
            for (int e = 0; e < extra; ++e) {
                std::size_t d =
                    static_cast<std::size_t>(pick(0, static_cast<int>(c.deps.size()) - 1));
                const ClassPlan& t = plan[static_cast<std::size_t>(c.deps[d])];
                int mi = pick(0, t.n_methods - 1);
                src += "        dep" + std::to_string(d) + "." +
                       k_verbs[mi % 10] + std::to_string(mi / 10) + "(n);\n";
            }
            int statements = pick(1, 4);
            for (int s = 0; s < statements; ++s) {
                int kind = pick(0, 3);
                if (kind == 0 && c.n_fields > 0) {
                    std::string fld = "item" + std::to_string(pick(0, c.n_fields - 1));
                    src += "        if (n > " + std::to_string(pick(0, 9)) + ") {\n";
                    src += "            " + fld + " = " + fld + ";\n";
                    src += "        }\n";
                } else if (kind == 1 && !c.deps.empty()) {
                    std::size_t d = static_cast<std::size_t>(
                        pick(0, static_cast<int>(c.deps.size()) - 1));
                    const ClassPlan& t = plan[static_cast<std::size_t>(c.deps[d])];
                    int mi = pick(0, t.n_methods - 1);
                    std::string target =
                        std::string(k_verbs[mi % 10]) + std::to_string(mi / 10);
                    src += "        dep" + std::to_string(d) + "." + target + "(n);\n";
                } else if (kind == 2) {
                    src += "        for (int i = 0; i < n; i++) {\n";
                    src += "            n = n - 1;\n";
                    src += "        }\n";
                } else {
                    src += "        n = n + " + std::to_string(pick(1, 99)) + ";\n";
                }
            }
            src += returns ? "        return n;\n    }\n" : "    }\n";
            if (m + 1 < c.n_methods) src += "\n";
        }
        src += "}\n";

        std::filesystem::path dir = root;
        std::string rest = c.pkg;
        std::size_t at;
        while ((at = rest.find('.')) != std::string::npos) {
            dir /= rest.substr(0, at);
            rest = rest.substr(at + 1);
        }
        dir /= rest;
        std::filesystem::create_directories(dir);
        std::ofstream out(dir / (c.name + ".java"), std::ios::binary);
        out << src;
        stats.total_lines +=
            static_cast<long long>(std::count(src.begin(), src.end(), '\n'));
    }
    return stats;
}

} // namespace testutil
