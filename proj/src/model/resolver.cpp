#include "model/graph.hpp"

#include "support/error.hpp"
#include "support/text.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace ckmet::model {

namespace {

constexpr std::int32_t k_unknown = -1;

class Resolver {
public:
    Resolver(const UnresolvedTree& tree, std::vector<std::string>& warnings)
        : tree_(tree), warnings_(warnings) {}

    CodeGraph run() {
        g_.version_id = tree_.version_id;
        create_units();
        create_classes();
        resolve_supertypes_and_members();
        resolve_bodies();
        return std::move(g_);
    }

private:
    const UnresolvedTree& tree_;
    std::vector<std::string>& warnings_;
    CodeGraph g_;

    std::vector<std::vector<std::int32_t>> file_class_idx_; // per file, per raw class
    std::vector<std::map<std::string, std::int32_t>> children_; // per class: simple -> idx
    std::map<std::string, std::map<std::string, std::int32_t>> package_scope_;
    std::map<std::string, std::int32_t> externals_;
    std::map<std::tuple<std::int32_t, std::string, std::uint16_t>, std::int32_t> stub_methods_;
    std::map<std::pair<std::int32_t, std::string>, std::int32_t> stub_fields_;
    // per corpus class: member lookup tables
    std::vector<std::map<std::string, std::vector<std::int32_t>>> methods_by_name_;
    std::vector<std::map<std::string, std::int32_t>> fields_by_name_;
    // memoized linearizations
    std::vector<std::vector<std::int32_t>> chain_cache_;
    std::vector<std::int32_t> ext_ancestor_cache_;
    std::int32_t unresolved_class_ = -1;

    const RawClass& raw_of(std::size_t f, std::size_t k) const { return tree_.files[f].classes[k]; }

    // --- construction ------------------------------------------------------

    void create_units() {
        g_.units.reserve(tree_.files.size());
        for (const RawFile& f : tree_.files) {
            SourceUnit u;
            u.path = f.path;
            u.version_id = tree_.version_id;
            u.line_count = f.line_count;
            u.parse_status = f.status;
            u.error = f.error;
            u.line_has_code = f.line_has_code;
            if (f.status != ParseStatus::ok) {
                warnings_.push_back(f.path + ": " +
                                    (f.status == ParseStatus::failed ? "parse failed"
                                                                     : "partial parse") +
                                    (f.error.empty() ? "" : " (" + f.error + ")"));
            }
            g_.units.push_back(std::move(u));
        }
    }

    void create_classes() {
        file_class_idx_.resize(tree_.files.size());
        for (std::size_t f = 0; f < tree_.files.size(); ++f) {
            const RawFile& file = tree_.files[f];
            file_class_idx_[f].assign(file.classes.size(), -1);
            if (file.status == ParseStatus::failed) continue;
            for (std::size_t k = 0; k < file.classes.size(); ++k) {
                const RawClass& rc = file.classes[k];
                ClassEntity c;
                c.qualified_name = rc.qualified_name;
                c.simple_name = rc.simple_name;
                switch (rc.kind) {
                case TypeKind::class_decl: c.kind = ClassKind::class_decl; break;
                case TypeKind::interface_decl: c.kind = ClassKind::interface_decl; break;
                case TypeKind::enum_decl: c.kind = ClassKind::enum_decl; break;
                case TypeKind::annotation_decl: c.kind = ClassKind::annotation_decl; break;
                }
                c.has_comment = rc.has_comment;
                c.unit = static_cast<std::int32_t>(f);
                c.body_start_line = rc.decl_line;
                c.body_end_line = rc.end_line;
                std::int32_t idx = static_cast<std::int32_t>(g_.classes.size());
                file_class_idx_[f][k] = idx;
                g_.classes.push_back(std::move(c));
                children_.emplace_back();

                auto [it, fresh] = g_.class_by_name.emplace(rc.qualified_name, idx);
                if (!fresh) {
                    warnings_.push_back("duplicate class name " + rc.qualified_name + " (" +
                                        g_.units[g_.classes[it->second].unit].path + ", " +
                                        file.path + ")");
                }
                if (rc.parent < 0 && fresh) {
                    package_scope_[file.package].emplace(rc.simple_name, idx);
                }
            }
            // enclosing links + children maps (second sweep, indices known)
            for (std::size_t k = 0; k < file.classes.size(); ++k) {
                const RawClass& rc = file.classes[k];
                std::int32_t idx = file_class_idx_[f][k];
                if (rc.parent >= 0) {
                    std::int32_t p = file_class_idx_[f][static_cast<std::size_t>(rc.parent)];
                    g_.classes[idx].enclosing = p;
                    children_[p].emplace(rc.simple_name, idx);
                }
            }
        }
    }

    std::int32_t intern_external(const std::string& name) {
        auto it = externals_.find(name);
        if (it != externals_.end()) return it->second;
        ClassEntity c;
        c.qualified_name = name;
        auto dot = name.rfind('.');
        c.simple_name = dot == std::string::npos ? name : name.substr(dot + 1);
        c.is_external = true;
        std::int32_t idx = static_cast<std::int32_t>(g_.classes.size());
        g_.classes.push_back(std::move(c));
        children_.emplace_back();
        externals_[name] = idx;
        return idx;
    }

    std::int32_t unresolved_class() {
        if (unresolved_class_ < 0) unresolved_class_ = intern_external("<unresolved>");
        return unresolved_class_;
    }

    std::int32_t stub_method(std::int32_t owner, const std::string& name, std::uint16_t arity) {
        auto key = std::make_tuple(owner, name, arity);
        auto it = stub_methods_.find(key);
        if (it != stub_methods_.end()) return it->second;
        MethodEntity m;
        m.owner = owner;
        m.name = name;
        m.arity = arity;
        m.is_external = true;
        std::int32_t id = static_cast<std::int32_t>(g_.methods.size());
        g_.methods.push_back(std::move(m));
        stub_methods_[key] = id;
        return id;
    }

    std::int32_t stub_field(std::int32_t owner, const std::string& name) {
        auto key = std::make_pair(owner, name);
        auto it = stub_fields_.find(key);
        if (it != stub_fields_.end()) return it->second;
        FieldEntity f;
        f.owner = owner;
        f.name = name;
        f.is_external = true;
        std::int32_t id = static_cast<std::int32_t>(g_.fields.size());
        g_.fields.push_back(std::move(f));
        stub_fields_[key] = id;
        return id;
    }

    // --- type name resolution -----------------------------------------------

    // Resolves a simple name through: the enclosing class chain (own simple
    // name, then nested types), same-file top-level types, single imports,
    // the file's package, wildcard imports. Falls back to an external stub.
    std::int32_t resolve_simple(const std::string& s, std::size_t file, std::int32_t scope) {
        for (std::int32_t c = scope; c >= 0; c = g_.classes[c].enclosing) {
            if (g_.classes[c].simple_name == s) return c;
            auto it = children_[c].find(s);
            if (it != children_[c].end()) return it->second;
        }
        const RawFile& rf = tree_.files[file];
        for (std::size_t k = 0; k < rf.classes.size(); ++k) {
            if (rf.classes[k].parent < 0 && rf.classes[k].simple_name == s) {
                std::int32_t idx = file_class_idx_[file][k];
                if (idx >= 0) return idx;
            }
        }
        auto imp = rf.single_imports.find(s);
        if (imp != rf.single_imports.end()) {
            auto hit = g_.class_by_name.find(imp->second);
            if (hit != g_.class_by_name.end()) return hit->second;
            return intern_external(imp->second);
        }
        auto pkg = package_scope_.find(rf.package);
        if (pkg != package_scope_.end()) {
            auto hit = pkg->second.find(s);
            if (hit != pkg->second.end()) return hit->second;
        }
        for (const std::string& w : rf.wildcard_imports) {
            auto ps = package_scope_.find(w);
            if (ps != package_scope_.end()) {
                auto hit = ps->second.find(s);
                if (hit != ps->second.end()) return hit->second;
            }
            // wildcard over a corpus type imports its nested types
            auto outer = g_.class_by_name.find(w);
            if (outer != g_.class_by_name.end()) {
                auto hit = children_[outer->second].find(s);
                if (hit != children_[outer->second].end()) return hit->second;
            }
        }
        return intern_external(s);
    }

    std::int32_t descend_nested(std::int32_t base, const std::vector<std::string_view>& segs,
                                std::size_t from) const {
        std::int32_t cur = base;
        for (std::size_t i = from; i < segs.size(); ++i) {
            auto it = children_[cur].find(std::string(segs[i]));
            if (it == children_[cur].end()) return k_unknown;
            cur = it->second;
        }
        return cur;
    }

    std::int32_t resolve_type_name(const std::string& raw, std::size_t file,
                                   std::int32_t scope) {
        if (raw.empty()) return k_unknown;
        auto segs = split(raw, '.');
        if (segs.size() == 1) return resolve_simple(raw, file, scope);

        // pkg.Class, possibly with nested segments after the top-level type
        for (std::size_t i = segs.size(); i >= 1; --i) {
            std::string prefix;
            for (std::size_t j = 0; j < i; ++j) {
                if (j) prefix.push_back('.');
                prefix.append(segs[j]);
            }
            auto hit = g_.class_by_name.find(prefix);
            if (hit != g_.class_by_name.end()) {
                std::int32_t r = descend_nested(hit->second, segs, i);
                if (r >= 0) return r;
            }
            if (i < segs.size()) {
                auto ps = package_scope_.find(prefix);
                if (ps != package_scope_.end()) {
                    auto top = ps->second.find(std::string(segs[i]));
                    if (top != ps->second.end()) {
                        std::int32_t r = descend_nested(top->second, segs, i + 1);
                        if (r >= 0) return r;
                    }
                }
            }
        }
        // Outer.Inner relative to the current scope
        std::int32_t root = resolve_simple_no_fallback(std::string(segs[0]), file, scope);
        if (root >= 0) {
            std::int32_t r = descend_nested(root, segs, 1);
            if (r >= 0) return r;
        }
        return intern_external(raw);
    }

    // Like resolve_simple but returns -1 instead of creating a stub.
    std::int32_t resolve_simple_no_fallback(const std::string& s, std::size_t file,
                                            std::int32_t scope) {
        for (std::int32_t c = scope; c >= 0; c = g_.classes[c].enclosing) {
            if (g_.classes[c].simple_name == s) return c;
            auto it = children_[c].find(s);
            if (it != children_[c].end()) return it->second;
        }
        const RawFile& rf = tree_.files[file];
        for (std::size_t k = 0; k < rf.classes.size(); ++k) {
            if (rf.classes[k].parent < 0 && rf.classes[k].simple_name == s) {
                std::int32_t idx = file_class_idx_[file][k];
                if (idx >= 0) return idx;
            }
        }
        auto pkg = package_scope_.find(rf.package);
        if (pkg != package_scope_.end()) {
            auto hit = pkg->second.find(s);
            if (hit != pkg->second.end()) return hit->second;
        }
        return k_unknown;
    }

    // --- members -------------------------------------------------------------

    void resolve_supertypes_and_members() {
        methods_by_name_.resize(g_.classes.size());
        fields_by_name_.resize(g_.classes.size());
        for (std::size_t f = 0; f < tree_.files.size(); ++f) {
            const RawFile& file = tree_.files[f];
            for (std::size_t k = 0; k < file.classes.size(); ++k) {
                std::int32_t idx = file_class_idx_[f][k];
                if (idx < 0) continue;
                const RawClass& rc = file.classes[k];

                if (!rc.super_name.empty()) {
                    std::int32_t s = resolve_type_name(rc.super_name, f, idx);
                    // An anonymous body over an interface is an implements edge.
                    if (s >= 0 && !g_.classes[s].is_external &&
                        (g_.classes[s].kind == ClassKind::interface_decl ||
                         g_.classes[s].kind == ClassKind::annotation_decl)) {
                        g_.classes[idx].interfaces.push_back(s);
                    } else {
                        g_.classes[idx].super_class = s;
                    }
                }
                for (const std::string& iname : rc.interface_names) {
                    g_.classes[idx].interfaces.push_back(resolve_type_name(iname, f, idx));
                }

                grow_tables();
                for (const RawField& rf2 : rc.fields) {
                    FieldEntity fe;
                    fe.owner = idx;
                    fe.name = rf2.name;
                    fe.is_public = rf2.is_public;
                    fe.is_static = rf2.is_static;
                    fe.declared_type =
                        rf2.type_name.empty() ? k_unknown : resolve_type_name(rf2.type_name, f, idx);
                    std::int32_t id = static_cast<std::int32_t>(g_.fields.size());
                    g_.fields.push_back(std::move(fe));
                    g_.classes[idx].fields.push_back(id);
                    grow_tables();
                    fields_by_name_[idx].emplace(rf2.name, id);
                }
                for (const RawMethod& rm : rc.methods) {
                    MethodEntity me;
                    me.owner = idx;
                    me.name = rm.name;
                    me.arity = rm.arity;
                    me.is_public = rm.is_public;
                    me.is_static = rm.is_static;
                    me.is_constructor = rm.is_ctor;
                    me.is_synthetic = rm.is_synthetic;
                    me.has_body = rm.has_body;
                    me.has_comment = rm.has_comment;
                    me.cyclomatic_complexity = rm.has_body ? 1 + rm.body.decisions : 0;
                    std::int32_t id = static_cast<std::int32_t>(g_.methods.size());
                    g_.methods.push_back(std::move(me));
                    g_.classes[idx].methods.push_back(id);
                    methods_by_name_[idx][rm.name].push_back(id);
                }
            }
        }
    }

    // External classes are appended while resolving, so the lookup tables
    // must grow alongside g_.classes.
    void grow_tables() {
        methods_by_name_.resize(g_.classes.size());
        fields_by_name_.resize(g_.classes.size());
        if (children_.size() < g_.classes.size()) children_.resize(g_.classes.size());
    }

    // --- hierarchy walks ------------------------------------------------------

    // Corpus ancestor chain including the class itself, breadth-first
    // (superclass before interfaces), cycle-safe.
    const std::vector<std::int32_t>& corpus_chain(std::int32_t c) {
        chain_cache_.resize(std::max(chain_cache_.size(), g_.classes.size()));
        auto& cached = chain_cache_[c];
        if (!cached.empty()) return cached;
        std::vector<std::int32_t> out;
        std::set<std::int32_t> seen;
        std::deque<std::int32_t> work{c};
        while (!work.empty()) {
            std::int32_t cur = work.front();
            work.pop_front();
            if (cur < 0 || g_.classes[cur].is_external || !seen.insert(cur).second) continue;
            out.push_back(cur);
            work.push_back(g_.classes[cur].super_class);
            for (std::int32_t i : g_.classes[cur].interfaces) work.push_back(i);
        }
        cached = std::move(out);
        return cached;
    }

    // First external ancestor in breadth-first order, -1 if none.
    std::int32_t first_external_ancestor(std::int32_t c) {
        ext_ancestor_cache_.resize(std::max(ext_ancestor_cache_.size(), g_.classes.size()), -2);
        if (ext_ancestor_cache_[c] != -2) return ext_ancestor_cache_[c];
        std::int32_t result = -1;
        std::set<std::int32_t> seen;
        std::deque<std::int32_t> work{c};
        bool self = true;
        while (!work.empty()) {
            std::int32_t cur = work.front();
            work.pop_front();
            if (cur < 0 || !seen.insert(cur).second) continue;
            if (g_.classes[cur].is_external && !(self && cur == c)) {
                result = cur;
                break;
            }
            self = false;
            if (g_.classes[cur].is_external) break;
            work.push_back(g_.classes[cur].super_class);
            for (std::int32_t i : g_.classes[cur].interfaces) work.push_back(i);
        }
        ext_ancestor_cache_[c] = result;
        return result;
    }

    // Looks for a callable (non-constructor, non-synthetic) method through
    // the corpus hierarchy of start; exact (name, arity) first when exact.
    std::int32_t find_method(std::int32_t start, const std::string& name, std::uint16_t arity,
                             bool exact) {
        if (start < 0 || g_.classes[start].is_external) return -1;
        for (std::int32_t c : corpus_chain(start)) {
            auto it = methods_by_name_[c].find(name);
            if (it == methods_by_name_[c].end()) continue;
            for (std::int32_t id : it->second) {
                const MethodEntity& m = g_.methods[id];
                if (m.is_constructor || m.is_synthetic) continue;
                if (!exact || m.arity == arity) return id;
            }
        }
        return -1;
    }

    std::int32_t find_method_2pass(std::int32_t start, const std::string& name,
                                   std::uint16_t arity) {
        std::int32_t hit = find_method(start, name, arity, true);
        return hit >= 0 ? hit : find_method(start, name, arity, false);
    }

    std::int32_t find_field(std::int32_t start, const std::string& name) {
        if (start < 0 || g_.classes[start].is_external) return -1;
        for (std::int32_t c : corpus_chain(start)) {
            auto it = fields_by_name_[c].find(name);
            if (it != fields_by_name_[c].end()) return it->second;
        }
        return -1;
    }

    // --- receiver chains --------------------------------------------------------

    struct ChainType {
        std::int32_t cls = k_unknown; // -1 = unknown
        bool typed_route = false;     // reached through declared types, not a guessed class name
    };

    ChainType root_type(const std::string& seg, std::int32_t c, const RawMethod& rm,
                        std::size_t file) {
        for (const auto& p : rm.params) {
            if (p.first == seg) {
                if (p.second.empty()) return {k_unknown, true};
                return {resolve_type_name(p.second, file, c), true};
            }
        }
        auto lv = rm.locals.find(seg);
        if (lv != rm.locals.end()) {
            if (lv->second.empty()) return {k_unknown, true};
            return {resolve_type_name(lv->second, file, c), true};
        }
        for (std::int32_t scope = c; scope >= 0; scope = g_.classes[scope].enclosing) {
            std::int32_t fid = find_field(scope, seg);
            if (fid >= 0) return {g_.fields[fid].declared_type, true};
        }
        return {resolve_simple(seg, file, c), false};
    }

    // Walks receiver segments to a static type. rooted: 0 plain, 1 this, 2 super.
    ChainType chain_type(const std::vector<std::string_view>& segs, int rooted, std::int32_t c,
                         const RawMethod& rm, std::size_t file) {
        ChainType cur;
        std::size_t i = 0;
        if (rooted == 1 || rooted == 2) {
            if (segs.empty()) return {c, true}; // bare this/super handled elsewhere
            std::int32_t base = c;
            if (rooted == 2) {
                base = g_.classes[c].super_class;
                if (base < 0 || g_.classes[base].is_external) return {k_unknown, true};
            }
            std::int32_t fid = find_field(base, std::string(segs[0]));
            if (fid < 0) return {k_unknown, true};
            cur = {g_.fields[fid].declared_type, true};
            i = 1;
        } else {
            cur = root_type(std::string(segs[0]), c, rm, file);
            i = 1;
        }
        for (; i < segs.size(); ++i) {
            if (cur.cls < 0 || g_.classes[cur.cls].is_external) return {k_unknown, cur.typed_route};
            std::string seg(segs[i]);
            std::int32_t fid = find_field(cur.cls, seg);
            if (fid >= 0) {
                cur = {g_.fields[fid].declared_type, true};
                continue;
            }
            auto ch = children_[cur.cls].find(seg);
            if (ch != children_[cur.cls].end()) {
                cur = {ch->second, cur.typed_route};
                continue;
            }
            return {k_unknown, cur.typed_route};
        }
        return cur;
    }

    // --- body resolution -----------------------------------------------------

    void resolve_bodies() {
        for (std::size_t f = 0; f < tree_.files.size(); ++f) {
            const RawFile& file = tree_.files[f];
            for (std::size_t k = 0; k < file.classes.size(); ++k) {
                std::int32_t idx = file_class_idx_[f][k];
                if (idx < 0) continue;
                const RawClass& rc = file.classes[k];

                std::set<std::int32_t> used;
                for (const std::string& u : rc.class_used_types) {
                    std::int32_t t = resolve_type_name(u, f, idx);
                    if (t >= 0) used.insert(t);
                }
                for (std::size_t mi = 0; mi < rc.methods.size(); ++mi) {
                    const RawMethod& rm = rc.methods[mi];
                    std::int32_t mid = g_.classes[idx].methods[mi];
                    for (const std::string& u : rm.body.used_types) {
                        std::int32_t t = resolve_type_name(u, f, idx);
                        if (t >= 0) used.insert(t);
                    }
                    resolve_method_body(idx, mid, rm, f);
                }
                g_.classes[idx].used_types.assign(used.begin(), used.end());
            }
        }
    }

    void resolve_method_body(std::int32_t c, std::int32_t mid, const RawMethod& rm,
                             std::size_t file) {
        std::vector<std::int32_t> invoked;
        std::set<std::int32_t> accessed;
        invoked.reserve(rm.body.calls.size());

        for (const RawCall& call : rm.body.calls) {
            invoked.push_back(resolve_call(c, rm, call, file));
        }
        for (const RawAccess& acc : rm.body.accesses) {
            std::int32_t fid = resolve_access(c, rm, acc, file);
            if (fid >= 0) accessed.insert(fid);
        }
        g_.methods[mid].invoked_methods = std::move(invoked);
        g_.methods[mid].accessed_fields.assign(accessed.begin(), accessed.end());
    }

    std::int32_t resolve_call(std::int32_t c, const RawMethod& rm, const RawCall& call,
                              std::size_t file) {
        const std::string& name = call.name;
        std::uint16_t arity = call.arity;

        if (call.receiver.empty()) {
            for (std::int32_t scope = c; scope >= 0; scope = g_.classes[scope].enclosing) {
                std::int32_t hit = find_method(scope, name, arity, true);
                if (hit >= 0) return hit;
            }
            for (std::int32_t scope = c; scope >= 0; scope = g_.classes[scope].enclosing) {
                std::int32_t hit = find_method(scope, name, arity, false);
                if (hit >= 0) return hit;
            }
            auto imp = tree_.files[file].single_imports.find(name);
            if (imp != tree_.files[file].single_imports.end()) {
                auto dot = imp->second.rfind('.');
                if (dot != std::string::npos) {
                    return stub_method(intern_external(imp->second.substr(0, dot)), name, arity);
                }
            }
            std::int32_t ext = first_external_ancestor(c);
            return stub_method(ext >= 0 ? ext : unresolved_class(), name, arity);
        }
        if (call.receiver == "<expr>") return stub_method(unresolved_class(), name, arity);
        if (call.receiver == "this") {
            std::int32_t hit = find_method_2pass(c, name, arity);
            if (hit >= 0) return hit;
            std::int32_t ext = first_external_ancestor(c);
            return stub_method(ext >= 0 ? ext : unresolved_class(), name, arity);
        }
        if (call.receiver == "super") {
            std::int32_t sup = g_.classes[c].super_class;
            if (sup >= 0 && !g_.classes[sup].is_external) {
                std::int32_t hit = find_method_2pass(sup, name, arity);
                if (hit >= 0) return hit;
            }
            for (std::int32_t i : g_.classes[c].interfaces) {
                if (i >= 0 && !g_.classes[i].is_external) {
                    std::int32_t hit = find_method_2pass(i, name, arity);
                    if (hit >= 0) return hit;
                }
            }
            if (sup >= 0 && g_.classes[sup].is_external) return stub_method(sup, name, arity);
            std::int32_t ext = first_external_ancestor(c);
            return stub_method(ext >= 0 ? ext : unresolved_class(), name, arity);
        }

        auto segs = split(call.receiver, '.');
        int rooted = 0;
        if (segs[0] == "this") rooted = 1;
        else if (segs[0] == "super") rooted = 2;
        if (rooted) segs.erase(segs.begin());
        if (segs.empty()) return stub_method(unresolved_class(), name, arity);
        for (std::string_view s : segs) {
            if (s == "this" || s == "super") return stub_method(unresolved_class(), name, arity);
        }

        ChainType t = chain_type(segs, rooted, c, rm, file);
        if (t.cls < 0) return stub_method(unresolved_class(), name, arity);
        if (g_.classes[t.cls].is_external) return stub_method(t.cls, name, arity);
        std::int32_t hit = find_method_2pass(t.cls, name, arity);
        if (hit >= 0) return hit;
        std::int32_t ext = first_external_ancestor(t.cls);
        return stub_method(ext >= 0 ? ext : unresolved_class(), name, arity);
    }

    std::int32_t resolve_access(std::int32_t c, const RawMethod& rm, const RawAccess& acc,
                                std::size_t file) {
        const std::string& name = acc.name;
        if (acc.receiver.empty()) {
            for (const auto& p : rm.params)
                if (p.first == name) return -1;
            if (rm.locals.count(name)) return -1;
            for (std::int32_t scope = c; scope >= 0; scope = g_.classes[scope].enclosing) {
                std::int32_t fid = find_field(scope, name);
                if (fid >= 0) return fid;
            }
            return -1; // unknown bare names are not recorded
        }
        if (acc.receiver == "<expr>") return -1;
        if (acc.receiver == "this") return find_field(c, name);
        if (acc.receiver == "super") {
            std::int32_t sup = g_.classes[c].super_class;
            if (sup >= 0 && !g_.classes[sup].is_external) {
                std::int32_t fid = find_field(sup, name);
                if (fid >= 0) return fid;
            }
            for (std::int32_t i : g_.classes[c].interfaces) {
                if (i >= 0 && !g_.classes[i].is_external) {
                    std::int32_t fid = find_field(i, name);
                    if (fid >= 0) return fid;
                }
            }
            return -1;
        }

        auto segs = split(acc.receiver, '.');
        int rooted = 0;
        if (segs[0] == "this") rooted = 1;
        else if (segs[0] == "super") rooted = 2;
        if (rooted) segs.erase(segs.begin());
        if (segs.empty()) return -1;
        for (std::string_view s : segs) {
            if (s == "this" || s == "super") return -1;
        }

        ChainType t = chain_type(segs, rooted, c, rm, file);
        if (t.cls < 0) return -1;
        if (g_.classes[t.cls].is_external) {
            // Only record foreign-field stubs reached through declared types;
            // a guessed class name may just as well be a package or nested type.
            return t.typed_route ? stub_field(t.cls, name) : -1;
        }
        return find_field(t.cls, name);
    }
};

} // namespace

CodeGraph resolve_references(const UnresolvedTree& tree, std::vector<std::string>& warnings) {
    Resolver r(tree, warnings);
    return r.run();
}

void check_inheritance_acyclic(const CodeGraph& g) {
    enum class Color : std::uint8_t { white, grey, black };
    std::vector<Color> color(g.classes.size(), Color::white);
    std::vector<std::int32_t> stack;

    // Iterative DFS, grey = on the current path.
    for (std::size_t start = 0; start < g.classes.size(); ++start) {
        if (g.classes[start].is_external || color[start] != Color::white) continue;
        std::vector<std::pair<std::int32_t, std::size_t>> frames;
        frames.emplace_back(static_cast<std::int32_t>(start), 0);
        color[start] = Color::grey;
        stack.push_back(static_cast<std::int32_t>(start));
        while (!frames.empty()) {
            auto& [cls, edge] = frames.back();
            std::vector<std::int32_t> supers;
            if (g.classes[cls].super_class >= 0) supers.push_back(g.classes[cls].super_class);
            supers.insert(supers.end(), g.classes[cls].interfaces.begin(),
                          g.classes[cls].interfaces.end());
            if (edge >= supers.size()) {
                color[cls] = Color::black;
                stack.pop_back();
                frames.pop_back();
                continue;
            }
            std::int32_t next = supers[edge++];
            if (next < 0 || g.classes[next].is_external) continue;
            if (color[next] == Color::grey) {
                std::string path;
                auto it = std::find(stack.begin(), stack.end(), next);
                for (; it != stack.end(); ++it) {
                    path += g.classes[*it].qualified_name;
                    path += " -> ";
                }
                path += g.classes[next].qualified_name;
                raise_input("inheritance cycle among classes: " + path);
            }
            if (color[next] == Color::white) {
                color[next] = Color::grey;
                stack.push_back(next);
                frames.emplace_back(next, 0);
            }
        }
    }
}

std::int64_t count_effective_loc(const CodeGraph& g, std::int32_t cls) {
    const ClassEntity& c = g.classes[cls];
    if (c.is_external || c.unit < 0) return 0;
    const SourceUnit& u = g.units[c.unit];
    std::int64_t n = 0;
    for (std::uint32_t line = c.body_start_line;
         line <= c.body_end_line && line < u.line_has_code.size(); ++line) {
        if (u.line_has_code[line]) ++n;
    }
    return n;
}

} // namespace ckmet::model
