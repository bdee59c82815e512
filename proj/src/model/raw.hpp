#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckmet::model {

// Unresolved per-file parse results. Names are raw source text; the
// resolver turns them into graph indices later.

enum class TypeKind : std::uint8_t { class_decl, interface_decl, enum_decl, annotation_decl };

// One call site: receiver is "" (bare), "this", "super", a single name, a
// dotted name, or "<expr>" when the receiver is a computed expression.
struct RawCall {
    std::string receiver;
    std::string name;
    std::uint16_t arity = 0;
};

// One name that may denote a field read/write. Same receiver encoding.
struct RawAccess {
    std::string receiver;
    std::string name;
};

struct RawBody {
    std::uint32_t decisions = 0; // branch points seen while scanning
    std::vector<RawCall> calls;
    std::vector<RawAccess> accesses;
    std::vector<std::string> used_types; // local var / new / catch / generic arg types
    bool present = false;                // true once any statement scan ran
};

struct RawMethod {
    std::string name;
    std::uint16_t arity = 0;
    bool is_public = false;
    bool is_static = false;
    bool is_ctor = false;
    bool is_synthetic = false; // merged field-initializer body, not user-declared
    bool has_body = false;
    bool has_comment = false;
    RawBody body;
    std::vector<std::pair<std::string, std::string>> params; // name -> raw type ("" = primitive)
    std::map<std::string, std::string> locals;               // name -> raw type ("" = primitive)
};

struct RawField {
    std::string name;
    std::string type_name; // raw dotted name, "" for primitives
    bool is_public = false;
    bool is_static = false;
};

struct RawClass {
    std::string simple_name;    // declared name; "$k" for anonymous classes
    std::string qualified_name; // pkg.Outer$Inner / pkg.Outer$k
    TypeKind kind = TypeKind::class_decl;
    bool has_comment = false;
    std::string super_name;                  // raw, "" if none
    std::vector<std::string> interface_names; // raw
    std::vector<RawMethod> methods;
    std::vector<RawField> fields;
    std::vector<std::string> class_used_types; // from field initializers etc.
    std::uint32_t decl_line = 0; // first line of the declaration (modifiers included)
    std::uint32_t end_line = 0;  // line of the closing brace
    int parent = -1;             // enclosing RawClass index within the file, -1 if top level
    std::uint32_t anon_counter = 0;
};

enum class ParseStatus : std::uint8_t { ok, partial, failed };

struct RawFile {
    std::string path; // relative to the tree root
    std::string package;
    std::map<std::string, std::string> single_imports; // simple name -> qualified
    std::vector<std::string> wildcard_imports;         // package prefixes
    std::vector<RawClass> classes;                     // flat; parent links give nesting
    std::vector<bool> line_has_code;
    std::uint32_t line_count = 0;
    ParseStatus status = ParseStatus::ok;
    std::string error; // diagnostic when status != ok
};

// Parses one Java source file. Never throws for malformed source: on an
// unrecoverable construct the file keeps the top-level types completed so
// far and is marked partial (or failed if none completed).
RawFile parse_java(std::string path, std::string_view source);

} // namespace ckmet::model
