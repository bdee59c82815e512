#include "model/graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace ckmet::model {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(ClassKind k) {
    switch (k) {
    case ClassKind::class_decl: return "class";
    case ClassKind::interface_decl: return "interface";
    case ClassKind::enum_decl: return "enum";
    case ClassKind::annotation_decl: return "annotation";
    }
    return "class";
}

const char* status_name(ParseStatus s) {
    switch (s) {
    case ParseStatus::ok: return "ok";
    case ParseStatus::partial: return "partial";
    case ParseStatus::failed: return "failed";
    }
    return "ok";
}

std::string method_key(const CodeGraph& g, std::int32_t id) {
    const MethodEntity& m = g.methods[id];
    std::string owner = m.owner >= 0 ? g.classes[m.owner].qualified_name : "?";
    return owner + "#" + m.name + "/" + std::to_string(m.arity);
}

std::string field_key(const CodeGraph& g, std::int32_t id) {
    const FieldEntity& f = g.fields[id];
    std::string owner = f.owner >= 0 ? g.classes[f.owner].qualified_name : "?";
    return owner + "#" + f.name;
}

} // namespace

std::string graph_to_json(const CodeGraph& g) {
    ordered_json root;
    root["version"] = g.version_id;

    ordered_json units = ordered_json::array();
    for (const SourceUnit& u : g.units) {
        ordered_json ju;
        ju["path"] = u.path;
        ju["lines"] = u.line_count;
        ju["status"] = status_name(u.parse_status);
        if (!u.error.empty()) ju["error"] = u.error;
        units.push_back(std::move(ju));
    }
    root["units"] = std::move(units);

    std::vector<std::int32_t> order;
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
        if (!g.classes[i].is_external) order.push_back(static_cast<std::int32_t>(i));
    }
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return g.classes[a].qualified_name < g.classes[b].qualified_name;
    });

    ordered_json classes = ordered_json::array();
    for (std::int32_t ci : order) {
        const ClassEntity& c = g.classes[ci];
        ordered_json jc;
        jc["name"] = c.qualified_name;
        jc["simple"] = c.simple_name;
        jc["kind"] = kind_name(c.kind);
        jc["super"] =
            c.super_class >= 0 ? ordered_json(g.classes[c.super_class].qualified_name)
                               : ordered_json(nullptr);
        ordered_json ifaces = ordered_json::array();
        for (std::int32_t i : c.interfaces) {
            if (i >= 0) ifaces.push_back(g.classes[i].qualified_name);
        }
        jc["interfaces"] = std::move(ifaces);
        jc["enclosing"] = c.enclosing >= 0
                              ? ordered_json(g.classes[c.enclosing].qualified_name)
                              : ordered_json(nullptr);
        jc["unit"] = c.unit >= 0 ? ordered_json(g.units[c.unit].path) : ordered_json(nullptr);
        jc["decl_line"] = c.body_start_line;
        jc["end_line"] = c.body_end_line;
        jc["comment"] = c.has_comment;
        jc["loc"] = count_effective_loc(g, ci);

        ordered_json used = ordered_json::array();
        std::vector<std::string> used_names;
        for (std::int32_t t : c.used_types) used_names.push_back(g.classes[t].qualified_name);
        std::sort(used_names.begin(), used_names.end());
        for (std::string& n : used_names) used.push_back(std::move(n));
        jc["used_types"] = std::move(used);

        ordered_json fields = ordered_json::array();
        for (std::int32_t fi : c.fields) {
            const FieldEntity& f = g.fields[fi];
            ordered_json jf;
            jf["name"] = f.name;
            jf["type"] = f.declared_type >= 0
                             ? ordered_json(g.classes[f.declared_type].qualified_name)
                             : ordered_json(nullptr);
            jf["public"] = f.is_public;
            jf["static"] = f.is_static;
            fields.push_back(std::move(jf));
        }
        jc["fields"] = std::move(fields);

        ordered_json methods = ordered_json::array();
        for (std::int32_t mi : c.methods) {
            const MethodEntity& m = g.methods[mi];
            ordered_json jm;
            jm["name"] = m.name;
            jm["arity"] = m.arity;
            jm["public"] = m.is_public;
            jm["static"] = m.is_static;
            jm["constructor"] = m.is_constructor;
            jm["synthetic"] = m.is_synthetic;
            jm["body"] = m.has_body;
            jm["comment"] = m.has_comment;
            jm["complexity"] = m.cyclomatic_complexity;
            ordered_json calls = ordered_json::array();
            for (std::int32_t t : m.invoked_methods) calls.push_back(method_key(g, t));
            jm["calls"] = std::move(calls);
            ordered_json reads = ordered_json::array();
            std::vector<std::string> read_names;
            for (std::int32_t t : m.accessed_fields) read_names.push_back(field_key(g, t));
            std::sort(read_names.begin(), read_names.end());
            for (std::string& n : read_names) reads.push_back(std::move(n));
            jm["reads"] = std::move(reads);
            methods.push_back(std::move(jm));
        }
        jc["methods"] = std::move(methods);
        classes.push_back(std::move(jc));
    }
    root["classes"] = std::move(classes);
    return root.dump(2) + "\n";
}

} // namespace ckmet::model
