#include <doctest.h>

#include "helpers.hpp"
#include "model/graph.hpp"

using namespace ckmet;
using testutil::find_class;
using testutil::find_method;
using testutil::parse_sources;

TEST_CASE("parser: nested, anonymous and local classes get javac-style names") {
    auto t = parse_sources({{"p/Outer.java", R"(package p;

public class Outer {
    class Inner {}

    Runnable r = new Runnable() {
        public void run() {}
    };

    void m() {
        class Local {}
        new Runnable() {
            public void run() {}
        };
    }
}
)"}});
    CHECK(find_class(t.graph, "p.Outer") != nullptr);
    CHECK(find_class(t.graph, "p.Outer$Inner") != nullptr);
    // Anonymous and local classes share one per-outer counter, in source
    // order: the field-initializer anonymous, then Local, then the anonymous
    // inside m().
    CHECK(find_class(t.graph, "p.Outer$1") != nullptr);
    CHECK(find_class(t.graph, "p.Outer$3") != nullptr);
    const auto* local = find_class(t.graph, "p.Outer$2Local");
    REQUIRE(local != nullptr);
    CHECK(local->simple_name == "Local");
}

TEST_CASE("parser: enum constants become public static self-typed fields") {
    auto t = parse_sources({{"p/Mode.java", R"(package p;

public enum Mode {
    ON,
    OFF;

    public boolean flag() {
        return true;
    }
}
)"}});
    const auto* mode = find_class(t.graph, "p.Mode");
    REQUIRE(mode != nullptr);
    CHECK(mode->kind == model::ClassKind::enum_decl);
    REQUIRE(mode->fields.size() == 2);
    auto idx = testutil::class_index(t.graph, "p.Mode");
    for (auto fid : mode->fields) {
        const auto& f = t.graph.fields[static_cast<std::size_t>(fid)];
        CHECK(f.is_public);
        CHECK(f.is_static);
        CHECK(f.declared_type == idx);
    }
    // No initializer work -> no synthetic initializer method.
    for (auto mid : mode->methods)
        CHECK_FALSE(t.graph.methods[static_cast<std::size_t>(mid)].is_synthetic);
}

TEST_CASE("parser: enum constant arguments feed the static initializer") {
    // Literal-only arguments carry no observable work, so no synthetic
    // appears; an argument that calls a method materializes <clinit> with
    // that call recorded.
    auto plain = parse_sources({{"p/Level.java", R"(package p;

public enum Level {
    LOW(1),
    HIGH(2);

    Level(int v) {}
}
)"}});
    const auto* level = find_class(plain.graph, "p.Level");
    REQUIRE(level != nullptr);
    for (auto mid : level->methods)
        CHECK_FALSE(plain.graph.methods[static_cast<std::size_t>(mid)].is_synthetic);

    auto working = parse_sources({{"p/Level.java", R"(package p;

public enum Level {
    LOW(base()),
    HIGH(2);

    Level(int v) {}

    static int base() {
        return 1;
    }
}
)"}});
    const auto* clinit = find_method(working.graph, "p.Level", "<clinit>");
    REQUIRE(clinit != nullptr);
    CHECK(clinit->is_synthetic);
    CHECK(clinit->is_static);
    REQUIRE(clinit->invoked_methods.size() == 1);
    const auto& callee =
        working.graph.methods[static_cast<std::size_t>(clinit->invoked_methods[0])];
    CHECK(callee.name == "base");
}

TEST_CASE("parser: comment attachment needs adjacency") {
    auto t = parse_sources({{"p/Doc.java", R"(package p;

/** Attached to the class. */
public class Doc {
    /** Attached. */
    void near() {}

    /** Detached by the blank line. */

    void far() {}

    // line comments attach too
    void liner() {}
}
)"}});
    CHECK(find_class(t.graph, "p.Doc")->has_comment);
    CHECK(find_method(t.graph, "p.Doc", "near")->has_comment);
    CHECK_FALSE(find_method(t.graph, "p.Doc", "far")->has_comment);
    CHECK(find_method(t.graph, "p.Doc", "liner")->has_comment);
}

TEST_CASE("parser: literals with braces or comment markers stay literal") {
    auto t = parse_sources({{"p/Lit.java", R"(package p;

public class Lit {
    String a = "not // a comment {";
    char b = '{';
    String c = "escaped \" quote }";

    void m() {}
}
)"}});
    const auto* lit = find_class(t.graph, "p.Lit");
    REQUIRE(lit != nullptr);
    CHECK(lit->fields.size() == 3);
    CHECK(lit->methods.size() >= 1);
    CHECK(find_method(t.graph, "p.Lit", "m") != nullptr);
    // Closing brace still found at the right line.
    CHECK(lit->body_end_line == 9);
}

TEST_CASE("parser: do-while counts one decision; else counts none") {
    auto t = parse_sources({{"p/Loops.java", R"(package p;

public class Loops {
    void spin(int n) {
        do {
            n--;
        } while (n > 0);
        if (n == 0) {
            n = 1;
        } else {
            n = 2;
        }
    }
}
)"}});
    const auto* spin = find_method(t.graph, "p.Loops", "spin");
    REQUIRE(spin != nullptr);
    CHECK(spin->cyclomatic_complexity == 3); // 1 + do-while + if
}

TEST_CASE("parser: generics do not masquerade as comparisons or vice versa") {
    auto t = parse_sources({{"p/Gen.java", R"(package p;

import java.util.Map;
import java.util.List;

public class Gen {
    Map<String, List<Integer>> table;

    int cmp(int a, int b) {
        if (a < b) {
            return -1;
        }
        return a > b ? 1 : 0;
    }
}
)"}});
    const auto* gen = find_class(t.graph, "p.Gen");
    REQUIRE(gen != nullptr);
    CHECK(gen->fields.size() == 1);
    const auto* cmp = find_method(t.graph, "p.Gen", "cmp");
    REQUIRE(cmp != nullptr);
    CHECK(cmp->cyclomatic_complexity == 3); // 1 + if + ternary
}

TEST_CASE("parser: annotations, varargs and interface members") {
    auto t = parse_sources({{"p/Api.java", R"(package p;

public interface Api {
    void touch();

    int count(String... names);
}
)"},
                            {"p/Impl.java", R"(package p;

public class Impl implements Api {
    @Override
    public void touch() {}

    @Override
    public int count(String... names) {
        return 0;
    }
}
)"}});
    const auto* touch = find_method(t.graph, "p.Api", "touch");
    REQUIRE(touch != nullptr);
    CHECK(touch->is_public); // interface members are implicitly public
    CHECK_FALSE(touch->has_body);
    CHECK(touch->cyclomatic_complexity == 0);
    const auto* count = find_method(t.graph, "p.Impl", "count");
    REQUIRE(count != nullptr);
    CHECK(count->arity == 1);
    CHECK(count->has_body);
}

TEST_CASE("parser: a broken file fails alone, siblings survive") {
    auto tree = model::parse_source_tree(testutil::fixture_error_corpus(), {}, "err");
    std::vector<std::string> warnings;
    auto g = model::resolve_references(tree, warnings);
    int corpus = 0;
    for (const auto& c : g.classes)
        if (!c.is_external) ++corpus;
    CHECK(corpus == 3);
    bool failed_unit = false;
    for (const auto& u : g.units)
        failed_unit |= u.parse_status != model::ParseStatus::ok;
    CHECK(failed_unit);
}

TEST_CASE("parser: effective line classification skips blanks and pure comments") {
    auto t = parse_sources({{"p/L.java", R"(package p;

public class L {

    // pure comment line

    int v; // trailing comment still code

    /* block
       spanning
       lines */
    void m() {}
}
)"}});
    auto idx = testutil::class_index(t.graph, "p.L");
    REQUIRE(idx >= 0);
    // decl(3) + field(7) + method(12) + closing(13)
    CHECK(model::count_effective_loc(t.graph, idx) == 4);
}
