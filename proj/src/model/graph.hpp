#pragma once

#include "model/raw.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ckmet::model {

enum class ClassKind : std::uint8_t { class_decl, interface_decl, enum_decl, annotation_decl };

struct ClassEntity {
    std::string qualified_name;
    std::string simple_name;
    ClassKind kind = ClassKind::class_decl;
    bool is_external = false;
    bool has_comment = false;
    std::int32_t super_class = -1;        // class index, -1 = none
    std::vector<std::int32_t> interfaces; // class indices
    std::vector<std::int32_t> methods;    // MethodEntity ids (declaration order)
    std::vector<std::int32_t> fields;     // FieldEntity ids (declaration order)
    std::vector<std::int32_t> used_types; // sorted unique class ids used by the
                                          // implementation (locals, new, catch,
                                          // generic arguments)
    std::int32_t unit = -1;               // source unit index, -1 for externals
    std::int32_t enclosing = -1;          // lexically enclosing class
    std::uint32_t body_start_line = 0;    // first line of the declaration
    std::uint32_t body_end_line = 0;      // line of the closing brace
};

struct MethodEntity {
    std::int32_t owner = -1;
    std::string name;
    std::uint16_t arity = 0;
    bool is_public = false;
    bool is_static = false;
    bool is_constructor = false;
    bool is_synthetic = false; // merged initializer body (<clinit>/<init-block>)
    bool is_external = false;  // stub for an unresolved or platform method
    bool has_body = false;
    bool has_comment = false;
    std::uint32_t cyclomatic_complexity = 0; // 0 for bodiless methods
    std::vector<std::int32_t> accessed_fields; // sorted unique FieldEntity ids
    std::vector<std::int32_t> invoked_methods; // call sites in order; duplicates kept
};

struct FieldEntity {
    std::int32_t owner = -1;
    std::string name;
    std::int32_t declared_type = -1; // class index, -1 for primitives/unknown
    bool is_public = false;
    bool is_static = false;
    bool is_external = false; // stub for a confidently-typed foreign field
};

struct SourceUnit {
    std::string path;
    std::string version_id;
    std::uint32_t line_count = 0;
    ParseStatus parse_status = ParseStatus::ok;
    std::string error;
    std::vector<bool> line_has_code; // index 0 unused
};

// Resolved entity graph of one application version. Immutable once built.
struct CodeGraph {
    std::string version_id;
    std::vector<ClassEntity> classes;
    std::vector<MethodEntity> methods;
    std::vector<FieldEntity> fields;
    std::vector<SourceUnit> units;
    std::unordered_map<std::string, std::int32_t> class_by_name; // qualified -> index

    bool is_corpus(std::int32_t cls) const {
        return cls >= 0 && !classes[static_cast<std::size_t>(cls)].is_external;
    }
};

// Per-file parse results plus their units, before cross-file resolution.
struct UnresolvedTree {
    std::string version_id;
    std::vector<RawFile> files;
};

// Merges per-file parses into a resolved graph: type names resolved through
// enclosing scopes, the file, single imports, the package, then wildcard
// imports; unresolved names become external stubs. Calls resolve by
// (receiver type, name, arity) with a name-only fallback inside the corpus
// hierarchy. Appends human-readable diagnostics to warnings.
CodeGraph resolve_references(const UnresolvedTree& tree, std::vector<std::string>& warnings);

// Throws Error(input) naming the cycle when corpus inheritance edges are
// cyclic (resolution error per the graph invariant).
void check_inheritance_acyclic(const CodeGraph& graph);

// Non-blank, non-comment-only lines between the class's declaration line
// and its closing brace, inclusive.
std::int64_t count_effective_loc(const CodeGraph& graph, std::int32_t cls);

// Canonical JSON dump with stable ordering (classes sorted by name).
std::string graph_to_json(const CodeGraph& graph);

} // namespace ckmet::model
