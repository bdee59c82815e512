#pragma once

// Seeded random in-memory code graphs with independently recorded ground
// truth, used to sweep structural invariants over the metric computations.

#include "model/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

struct SynthGraph {
    ckmet::model::CodeGraph graph;
    // Ground truth recorded while generating, kept independent of the graph
    // representation so the checks do not mirror the implementation.
    std::vector<std::vector<std::int32_t>> corpus_parents_of; // per corpus class, distinct
    std::vector<int> local_field_count;                       // per corpus class
    std::vector<int> counted_method_count;  // non-ctor, non-synthetic local methods
    std::vector<int> bodied_method_count;   // local methods with a body (any kind)
    std::vector<std::int64_t> code_line_sum; // effective code lines in the class span
    std::int64_t corpus_edge_count = 0;      // distinct corpus inheritance edges
    std::int32_t corpus_class_count = 0;
};

inline SynthGraph make_synth_graph(std::uint64_t seed) {
    using namespace ckmet::model;
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
    };
    auto chance = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    SynthGraph out;
    CodeGraph& g = out.graph;
    g.version_id = "synth";

    const int corpus = pick(3, 40);
    const int externals = pick(0, 4);
    out.corpus_class_count = corpus;

    // Classes: corpus first, then external stubs.
    for (int i = 0; i < corpus; ++i) {
        ClassEntity c;
        c.simple_name = "C" + std::to_string(i);
        c.qualified_name = "syn." + c.simple_name;
        c.kind = chance(0.15) ? ClassKind::interface_decl : ClassKind::class_decl;
        c.has_comment = chance(0.3);
        g.class_by_name[c.qualified_name] = static_cast<std::int32_t>(g.classes.size());
        g.classes.push_back(std::move(c));
    }
    for (int i = 0; i < externals; ++i) {
        ClassEntity c;
        c.simple_name = "X" + std::to_string(i);
        c.qualified_name = "ext." + c.simple_name;
        c.is_external = true;
        g.class_by_name[c.qualified_name] = static_cast<std::int32_t>(g.classes.size());
        g.classes.push_back(std::move(c));
    }

    // Inheritance: only edges towards lower indices, so the corpus stays acyclic.
    out.corpus_parents_of.assign(static_cast<std::size_t>(corpus), {});
    for (int i = 0; i < corpus; ++i) {
        std::set<std::int32_t> parents;
        if (i > 0 && chance(0.55)) {
            std::int32_t p = static_cast<std::int32_t>(pick(0, i - 1));
            g.classes[static_cast<std::size_t>(i)].super_class = p;
            parents.insert(p);
        } else if (externals > 0 && chance(0.3)) {
            g.classes[static_cast<std::size_t>(i)].super_class =
                static_cast<std::int32_t>(corpus + pick(0, externals - 1));
        }
        int ifaces = pick(0, 2);
        for (int k = 0; k < ifaces && i > 0; ++k) {
            std::int32_t p = static_cast<std::int32_t>(pick(0, i - 1));
            g.classes[static_cast<std::size_t>(i)].interfaces.push_back(p);
            parents.insert(p);
        }
        out.corpus_parents_of[static_cast<std::size_t>(i)].assign(parents.begin(),
                                                                  parents.end());
        out.corpus_edge_count += static_cast<std::int64_t>(parents.size());
    }

    // Fields.
    out.local_field_count.assign(static_cast<std::size_t>(corpus), 0);
    for (int i = 0; i < corpus; ++i) {
        int nfields = pick(0, 6);
        out.local_field_count[static_cast<std::size_t>(i)] = nfields;
        for (int k = 0; k < nfields; ++k) {
            FieldEntity f;
            f.owner = i;
            f.name = "f" + std::to_string(k);
            f.is_public = chance(0.4);
            f.is_static = chance(0.2);
            if (chance(0.35))
                f.declared_type = static_cast<std::int32_t>(pick(0, corpus + externals - 1));
            auto fid = static_cast<std::int32_t>(g.fields.size());
            g.fields.push_back(f);
            g.classes[static_cast<std::size_t>(i)].fields.push_back(fid);
        }
    }

    // Methods: bodies, complexity, and cross-class call/access edges.
    out.counted_method_count.assign(static_cast<std::size_t>(corpus), 0);
    out.bodied_method_count.assign(static_cast<std::size_t>(corpus), 0);
    for (int i = 0; i < corpus; ++i) {
        int nmethods = pick(0, 8);
        bool with_ctor = chance(0.4);
        bool with_synth = chance(0.2);
        for (int k = 0; k < nmethods + (with_ctor ? 1 : 0) + (with_synth ? 1 : 0); ++k) {
            MethodEntity m;
            m.owner = i;
            if (with_ctor && k == nmethods) {
                m.name = "<init>";
                m.is_constructor = true;
                m.has_body = true;
            } else if (k >= nmethods) {
                m.name = "<clinit>";
                m.is_synthetic = true;
                m.is_static = true;
                m.has_body = true;
            } else {
                m.name = "m" + std::to_string(k);
                m.is_public = chance(0.5);
                m.is_static = chance(0.15);
                m.has_body = !chance(0.15);
                ++out.counted_method_count[static_cast<std::size_t>(i)];
            }
            m.arity = static_cast<std::uint16_t>(pick(0, 3));
            m.has_comment = chance(0.25);
            if (m.has_body) {
                m.cyclomatic_complexity = static_cast<std::uint32_t>(1 + pick(0, 6));
                ++out.bodied_method_count[static_cast<std::size_t>(i)];
            }
            auto mid = static_cast<std::int32_t>(g.methods.size());
            g.methods.push_back(std::move(m));
            g.classes[static_cast<std::size_t>(i)].methods.push_back(mid);
        }
    }

    // External method/field stubs to exercise the platform-class exclusions.
    std::vector<std::int32_t> external_methods;
    std::vector<std::int32_t> external_fields;
    for (int i = 0; i < externals; ++i) {
        MethodEntity m;
        m.owner = corpus + i;
        m.name = "xm";
        m.is_external = true;
        auto mid = static_cast<std::int32_t>(g.methods.size());
        g.methods.push_back(std::move(m));
        g.classes[static_cast<std::size_t>(corpus + i)].methods.push_back(mid);
        external_methods.push_back(mid);

        FieldEntity f;
        f.owner = corpus + i;
        f.name = "xf";
        f.is_external = true;
        auto fid = static_cast<std::int32_t>(g.fields.size());
        g.fields.push_back(f);
        g.classes[static_cast<std::size_t>(corpus + i)].fields.push_back(fid);
        external_fields.push_back(fid);
    }

    // Wire call sites and field accesses from bodied methods.
    for (int i = 0; i < corpus; ++i) {
        for (auto mid : g.classes[static_cast<std::size_t>(i)].methods) {
            MethodEntity& m = g.methods[static_cast<std::size_t>(mid)];
            if (!m.has_body) continue;
            int ncalls = pick(0, 5);
            for (int k = 0; k < ncalls; ++k) {
                double roll = std::uniform_real_distribution<double>(0, 1)(rng);
                if (roll < 0.25 && !external_methods.empty()) {
                    m.invoked_methods.push_back(
                        external_methods[static_cast<std::size_t>(
                            pick(0, static_cast<int>(external_methods.size()) - 1))]);
                } else {
                    std::int32_t target = static_cast<std::int32_t>(pick(0, corpus - 1));
                    const auto& tm = g.classes[static_cast<std::size_t>(target)].methods;
                    if (!tm.empty())
                        m.invoked_methods.push_back(
                            tm[static_cast<std::size_t>(pick(0, static_cast<int>(tm.size()) - 1))]);
                }
            }
            std::set<std::int32_t> touched;
            int naccess = pick(0, 5);
            for (int k = 0; k < naccess; ++k) {
                double roll = std::uniform_real_distribution<double>(0, 1)(rng);
                if (roll < 0.2 && !external_fields.empty()) {
                    touched.insert(external_fields[static_cast<std::size_t>(
                        pick(0, static_cast<int>(external_fields.size()) - 1))]);
                } else {
                    std::int32_t target = static_cast<std::int32_t>(pick(0, corpus - 1));
                    const auto& tf = g.classes[static_cast<std::size_t>(target)].fields;
                    if (!tf.empty())
                        touched.insert(
                            tf[static_cast<std::size_t>(pick(0, static_cast<int>(tf.size()) - 1))]);
                }
            }
            m.accessed_fields.assign(touched.begin(), touched.end());
        }
    }

    // Implementation type usage.
    for (int i = 0; i < corpus; ++i) {
        std::set<std::int32_t> used;
        int nused = pick(0, 4);
        for (int k = 0; k < nused; ++k)
            used.insert(static_cast<std::int32_t>(pick(0, corpus + externals - 1)));
        auto& cls = g.classes[static_cast<std::size_t>(i)];
        cls.used_types.assign(used.begin(), used.end());
    }

    // One synthetic source unit per corpus class with a known code-line count.
    out.code_line_sum.assign(static_cast<std::size_t>(corpus), 0);
    for (int i = 0; i < corpus; ++i) {
        SourceUnit u;
        u.path = "syn/C" + std::to_string(i) + ".java";
        u.version_id = g.version_id;
        int span = pick(1, 60);
        u.line_count = static_cast<std::uint32_t>(span + 2);
        u.line_has_code.assign(static_cast<std::size_t>(u.line_count) + 1, false);
        std::int64_t sum = 0;
        for (int line = 2; line < 2 + span; ++line) {
            bool code = chance(0.8);
            u.line_has_code[static_cast<std::size_t>(line)] = code;
            if (code) ++sum;
        }
        out.code_line_sum[static_cast<std::size_t>(i)] = sum;
        auto& cls = g.classes[static_cast<std::size_t>(i)];
        cls.unit = static_cast<std::int32_t>(g.units.size());
        cls.body_start_line = 2;
        cls.body_end_line = static_cast<std::uint32_t>(1 + span);
        g.units.push_back(std::move(u));
    }

    return out;
}

} // namespace testutil
