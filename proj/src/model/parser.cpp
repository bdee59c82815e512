#include "model/raw.hpp"
#include "model/token.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ckmet::model {

namespace {

// Internal control-flow exception: a construct the parser cannot align on.
// Always caught inside this translation unit; recovery keeps whatever
// parsed cleanly.
struct ParseBail {
    std::string msg;
};

bool is_primitive_kw(const Token& t) {
    if (t.kind != TokKind::keyword) return false;
    return t.text == "boolean" || t.text == "byte" || t.text == "short" || t.text == "int" ||
           t.text == "long" || t.text == "char" || t.text == "float" || t.text == "double";
}

bool is_modifier_kw(const Token& t) {
    if (t.kind != TokKind::keyword) return false;
    return t.text == "public" || t.text == "protected" || t.text == "private" ||
           t.text == "static" || t.text == "final" || t.text == "abstract" ||
           t.text == "native" || t.text == "synchronized" || t.text == "transient" ||
           t.text == "volatile" || t.text == "strictfp" || t.text == "default";
}

struct ParsedType {
    std::string name;              // dotted, "" for primitives
    std::vector<std::string> args; // flattened generic argument type names
    bool primitive = false;
    bool valid = false;
};

struct Mods {
    bool explicit_public = false;
    bool explicit_nonpublic = false; // private or protected seen
    bool is_static = false;
};

class Parser {
public:
    Parser(std::string path, std::string_view src) : src_(src) { file_.path = std::move(path); }

    RawFile run() {
        lx_ = lex(src_);
        file_.line_has_code = std::move(lx_.line_has_code);
        file_.line_count = lx_.line_count;
        parse_unit();
        if (!file_.error.empty()) {
            file_.status = file_.classes.empty() ? ParseStatus::failed : ParseStatus::partial;
        }
        return std::move(file_);
    }

private:
    std::string_view src_;
    RawFile file_;
    LexOutput lx_;
    std::size_t pos_ = 0;

    // Field-initializer and initializer-block statements, merged per class
    // until the class body closes. Keyed by class index because the class
    // vector reallocates while nested types are appended.
    struct InitAccum {
        RawMethod stat;
        RawMethod inst;
        bool stat_block = false;
        bool inst_block = false;
    };
    std::map<int, InitAccum> accum_;

    enum class Mode { block, args, expr };

    // --- token cursor -----------------------------------------------------

    const Token& tok(std::size_t k = 0) const {
        std::size_t j = pos_ + k;
        return j < lx_.tokens.size() ? lx_.tokens[j] : lx_.tokens.back();
    }
    const Token& tok_at(std::size_t j) const {
        return j < lx_.tokens.size() ? lx_.tokens[j] : lx_.tokens.back();
    }
    bool at_eof() const { return tok().kind == TokKind::eof; }
    void adv() {
        if (pos_ + 1 < lx_.tokens.size()) ++pos_;
    }
    [[noreturn]] void bail(std::string msg) const {
        throw ParseBail{file_.path + ":" + std::to_string(tok().line) + ": " + std::move(msg)};
    }

    // --- small parsers ----------------------------------------------------

    std::string dotted_name() {
        if (!tok().is_ident()) return {};
        std::string out(tok().text);
        adv();
        while (tok().is_punct(".") && tok(1).is_ident()) {
            out.push_back('.');
            out.append(tok(1).text);
            adv();
            adv();
        }
        return out;
    }

    // Skips "@Name" / "@a.b.Name(...)"; assumes tok() == '@'.
    void skip_annotation() {
        adv(); // '@'
        if (!tok().is_ident()) return;
        dotted_name();
        if (tok().is_punct("(")) skip_balanced("(", ")");
    }

    void skip_balanced(std::string_view open, std::string_view close) {
        if (!tok().is_punct(open)) bail("expected '" + std::string(open) + "'");
        int depth = 0;
        while (!at_eof()) {
            if (tok().is_punct(open)) ++depth;
            else if (tok().is_punct(close)) {
                --depth;
                if (depth == 0) {
                    adv();
                    return;
                }
            }
            adv();
        }
        bail("unbalanced '" + std::string(open) + "'");
    }

    // Skips a type-parameter section "<T extends Foo<? super T>, U>".
    void skip_type_params() {
        assert(tok().is_punct("<"));
        int depth = 0;
        std::size_t steps = 0;
        while (!at_eof()) {
            if (tok().is_punct("<")) ++depth;
            else if (tok().is_punct(">")) {
                --depth;
                if (depth == 0) {
                    adv();
                    return;
                }
            }
            adv();
            if (++steps > 4000) bail("runaway type parameter section");
        }
        bail("unbalanced type parameter section");
    }

    Mods parse_modifiers() {
        Mods m;
        while (true) {
            const Token& t = tok();
            if (t.is_punct("@") && !tok(1).is_kw("interface")) {
                skip_annotation();
                continue;
            }
            if (is_modifier_kw(t)) {
                if (t.text == "public") m.explicit_public = true;
                if (t.text == "private" || t.text == "protected") m.explicit_nonpublic = true;
                if (t.text == "static") m.is_static = true;
                adv();
                continue;
            }
            break;
        }
        return m;
    }

    // Attempts to parse a type at the cursor; restores the cursor on
    // failure. Collects flattened generic-argument names.
    ParsedType try_type(bool allow_void) {
        ParsedType out;
        std::size_t save = pos_;
        while (tok().is_punct("@") && tok(1).is_ident()) skip_annotation();
        if (is_primitive_kw(tok()) || (allow_void && tok().is_kw("void"))) {
            out.primitive = true;
            adv();
        } else if (tok().is_ident()) {
            out.name = std::string(tok().text);
            adv();
            if (tok().is_punct("<") && !scan_type_args(out.args)) {
                pos_ = save;
                return out;
            }
            while (tok().is_punct(".") && tok(1).is_ident()) {
                out.name.push_back('.');
                out.name.append(tok(1).text);
                adv();
                adv();
                if (tok().is_punct("<") && !scan_type_args(out.args)) {
                    pos_ = save;
                    return out;
                }
            }
        } else {
            return out; // invalid, cursor untouched (nothing consumed yet)
        }
        // Array dimensions on the type itself.
        while (tok().is_punct("[") && tok(1).is_punct("]")) {
            adv();
            adv();
        }
        out.valid = true;
        return out;
    }

    // Consumes "<...>" collecting dotted type names. Returns false (cursor
    // unspecified; caller restores) when the region cannot be a type
    // argument list, which is how "a < b" expressions are rejected.
    bool scan_type_args(std::vector<std::string>& args) {
        assert(tok().is_punct("<"));
        adv();
        int depth = 1;
        std::size_t steps = 0;
        while (depth > 0) {
            if (at_eof() || ++steps > 400) return false;
            const Token& t = tok();
            if (t.is_punct("<")) {
                ++depth;
                adv();
            } else if (t.is_punct(">")) {
                --depth;
                adv();
            } else if (t.is_ident()) {
                args.push_back(dotted_name());
            } else if (t.is_kw("extends") || t.is_kw("super") || is_primitive_kw(t) ||
                       t.is_punct("?") || t.is_punct(",") || t.is_punct("&") ||
                       t.is_punct("[") || t.is_punct("]")) {
                adv();
            } else if (t.is_punct("@") && tok(1).is_ident()) {
                skip_annotation();
            } else {
                return false;
            }
        }
        return true;
    }

    // --- comments ----------------------------------------------------------

    // A declaration is documented when a comment ends on the line directly
    // above its first token, or earlier on the same line.
    bool comment_attached(std::size_t decl_tok_index) const {
        const Token& t = tok_at(decl_tok_index);
        for (const Comment& c : lx_.comments) {
            if (c.end_line + 1 == t.line) return true;
            if (c.end_line == t.line && c.start_col < t.col && c.start_line <= c.end_line &&
                c.start_line == t.line)
                return true;
            if (c.end_line > t.line) break;
        }
        return false;
    }

    // --- compilation unit ---------------------------------------------------

    void parse_unit() {
        while (tok().is_punct("@") && !tok(1).is_kw("interface")) skip_annotation();
        if (tok().is_kw("package")) {
            adv();
            file_.package = dotted_name();
            if (tok().is_punct(";")) adv();
        }
        while (tok().is_kw("import")) {
            adv();
            if (tok().is_kw("static")) adv();
            std::string name;
            bool wildcard = false;
            if (tok().is_ident()) {
                name = std::string(tok().text);
                adv();
                while (tok().is_punct(".")) {
                    if (tok(1).is_ident()) {
                        name.push_back('.');
                        name.append(tok(1).text);
                        adv();
                        adv();
                    } else if (tok(1).is_punct("*")) {
                        wildcard = true;
                        adv();
                        adv();
                        break;
                    } else {
                        break;
                    }
                }
            }
            while (!at_eof() && !tok().is_punct(";")) adv();
            if (tok().is_punct(";")) adv();
            if (name.empty()) continue;
            if (wildcard) {
                file_.wildcard_imports.push_back(name);
            } else {
                auto dot = name.rfind('.');
                std::string simple = dot == std::string::npos ? name : name.substr(dot + 1);
                file_.single_imports.emplace(simple, name);
            }
        }

        while (!at_eof()) {
            if (tok().is_punct(";")) {
                adv();
                continue;
            }
            std::size_t top_start = pos_;
            std::size_t classes_before = file_.classes.size();
            try {
                parse_modifiers();
                if (tok().is_kw("class") || tok().is_kw("interface") || tok().is_kw("enum") ||
                    (tok().is_punct("@") && tok(1).is_kw("interface"))) {
                    parse_type_decl(-1, false, top_start);
                } else {
                    bail("unexpected token at top level");
                }
            } catch (const ParseBail& b) {
                if (file_.error.empty()) file_.error = b.msg;
                rollback_classes(classes_before);
                recover_top_level(top_start);
            }
        }
    }

    void rollback_classes(std::size_t keep) {
        file_.classes.resize(keep);
        for (auto it = accum_.begin(); it != accum_.end();) {
            if (it->first >= static_cast<int>(keep)) it = accum_.erase(it);
            else ++it;
        }
    }

    // After a failed top-level declaration, skip its braced body (located
    // from the declaration start) so following siblings still parse.
    void recover_top_level(std::size_t top_start) {
        std::size_t j = top_start;
        while (!tok_at(j).is_punct("{") && tok_at(j).kind != TokKind::eof) ++j;
        if (tok_at(j).kind == TokKind::eof) {
            pos_ = lx_.tokens.size() - 1;
            return;
        }
        int depth = 0;
        while (tok_at(j).kind != TokKind::eof) {
            if (tok_at(j).is_punct("{")) ++depth;
            else if (tok_at(j).is_punct("}")) {
                --depth;
                if (depth == 0) {
                    ++j;
                    break;
                }
            }
            ++j;
        }
        pos_ = std::max(pos_, std::min(j, lx_.tokens.size() - 1));
        if (pos_ <= top_start) pos_ = std::min(top_start + 1, lx_.tokens.size() - 1);
    }

    // --- type declarations --------------------------------------------------

    int parse_type_decl(int parent, bool is_local, std::size_t decl_start) {
        TypeKind kind;
        if (tok().is_punct("@") && tok(1).is_kw("interface")) {
            kind = TypeKind::annotation_decl;
            adv();
            adv();
        } else if (tok().is_kw("class")) {
            kind = TypeKind::class_decl;
            adv();
        } else if (tok().is_kw("interface")) {
            kind = TypeKind::interface_decl;
            adv();
        } else if (tok().is_kw("enum")) {
            kind = TypeKind::enum_decl;
            adv();
        } else {
            bail("expected a type declaration");
        }
        if (!tok().is_ident()) bail("expected a type name");
        std::string name(tok().text);
        adv();

        RawClass rc;
        rc.kind = kind;
        rc.simple_name = name;
        rc.parent = parent;
        rc.decl_line = tok_at(decl_start).line;
        rc.has_comment = comment_attached(decl_start);
        if (parent < 0) {
            rc.qualified_name = file_.package.empty() ? name : file_.package + "." + name;
        } else if (is_local) {
            // javac-style: Enclosing$<n><Name>, sharing the anonymous counter.
            std::uint32_t k = ++file_.classes[parent].anon_counter;
            rc.qualified_name =
                file_.classes[parent].qualified_name + "$" + std::to_string(k) + name;
        } else {
            rc.qualified_name = file_.classes[parent].qualified_name + "$" + name;
        }

        if (tok().is_punct("<")) skip_type_params();

        if (kind == TypeKind::class_decl) {
            if (tok().is_kw("extends")) {
                adv();
                ParsedType t = try_type(false);
                if (!t.valid) bail("malformed extends clause");
                rc.super_name = t.name;
            }
            if (tok().is_kw("implements")) {
                adv();
                parse_type_list(rc.interface_names);
            }
        } else if (kind == TypeKind::interface_decl) {
            if (tok().is_kw("extends")) {
                adv();
                parse_type_list(rc.interface_names);
            }
        } else if (kind == TypeKind::enum_decl) {
            if (tok().is_kw("implements")) {
                adv();
                parse_type_list(rc.interface_names);
            }
        }

        if (!tok().is_punct("{")) bail("expected '{' to open type body");
        int idx = static_cast<int>(file_.classes.size());
        file_.classes.push_back(std::move(rc));
        parse_class_body(idx);
        return idx;
    }

    void parse_type_list(std::vector<std::string>& out) {
        while (true) {
            ParsedType t = try_type(false);
            if (!t.valid) bail("malformed supertype list");
            out.push_back(t.name);
            if (tok().is_punct(",")) {
                adv();
                continue;
            }
            break;
        }
    }

    void parse_class_body(int idx) {
        if (!tok().is_punct("{")) bail("expected '{'");
        adv();
        if (file_.classes[idx].kind == TypeKind::enum_decl) parse_enum_constants(idx);
        while (true) {
            if (at_eof()) bail("unterminated type body");
            if (tok().is_punct("}")) {
                file_.classes[idx].end_line = tok().line;
                adv();
                materialize_synthetics(idx);
                return;
            }
            if (tok().is_punct(";")) {
                adv();
                continue;
            }
            std::size_t member_start = pos_;
            std::size_t classes_before = file_.classes.size();
            try {
                parse_member(idx);
            } catch (const ParseBail& b) {
                if (file_.error.empty()) file_.error = b.msg;
                if (file_.status == ParseStatus::ok) file_.status = ParseStatus::partial;
                rollback_classes(classes_before);
                recover_member(member_start);
            }
        }
    }

    // Skips to the end of an unparseable member: past a balanced braced
    // body, or past the next ';' at member depth.
    void recover_member(std::size_t member_start) {
        pos_ = std::max(pos_, member_start);
        if (pos_ == member_start) adv();
        int depth = 0;
        while (!at_eof()) {
            const Token& t = tok();
            if (t.is_punct("{") || t.is_punct("(") || t.is_punct("[")) {
                ++depth;
            } else if (t.is_punct(")") || t.is_punct("]")) {
                if (depth > 0) --depth;
            } else if (t.is_punct("}")) {
                if (depth == 0) return; // class's own closing brace
                --depth;
                if (depth == 0) {
                    adv();
                    return;
                }
            } else if (t.is_punct(";") && depth == 0) {
                adv();
                return;
            }
            adv();
        }
        bail("unterminated type body");
    }

    void parse_enum_constants(int idx) {
        while (true) {
            if (at_eof()) bail("unterminated enum body");
            if (tok().is_punct(";")) {
                adv();
                return;
            }
            if (tok().is_punct("}")) return; // caller consumes
            while (tok().is_punct("@") && tok(1).is_ident()) skip_annotation();
            if (!tok().is_ident()) bail("expected an enum constant");
            RawField f;
            f.name = std::string(tok().text);
            f.type_name = file_.classes[idx].simple_name;
            f.is_public = true;
            f.is_static = true;
            adv();
            file_.classes[idx].fields.push_back(std::move(f));
            if (tok().is_punct("(")) {
                adv();
                scan_region(idx, accum_[idx].stat, Mode::args);
            }
            if (tok().is_punct("{")) parse_anonymous(idx, file_.classes[idx].simple_name);
            if (tok().is_punct(",")) adv();
        }
    }

    void parse_member(int idx) {
        std::size_t member_start = pos_;
        Mods mods = parse_modifiers();

        if (tok().is_kw("class") || tok().is_kw("interface") || tok().is_kw("enum") ||
            (tok().is_punct("@") && tok(1).is_kw("interface"))) {
            parse_type_decl(idx, false, member_start);
            return;
        }
        if (tok().is_punct("{")) {
            InitAccum& a = accum_[idx];
            RawMethod& target = mods.is_static ? a.stat : a.inst;
            (mods.is_static ? a.stat_block : a.inst_block) = true;
            adv();
            scan_region(idx, target, Mode::block);
            return;
        }
        if (tok().is_punct("<")) skip_type_params();

        ParsedType t = try_type(true);
        if (!t.valid) bail("unparseable member");

        if (tok().is_punct("(") && !t.primitive && t.name.find('.') == std::string::npos &&
            t.name == file_.classes[idx].simple_name) {
            parse_method_rest(idx, t.name, true, mods, member_start);
            return;
        }
        if (tok().is_ident()) {
            std::string name(tok().text);
            adv();
            if (tok().is_punct("(")) {
                parse_method_rest(idx, name, false, mods, member_start);
            } else {
                parse_fields_rest(idx, t, name, mods);
            }
            return;
        }
        bail("unparseable member");
    }

    bool owner_members_public(int idx) const {
        TypeKind k = file_.classes[idx].kind;
        return k == TypeKind::interface_decl || k == TypeKind::annotation_decl;
    }

    void parse_method_rest(int idx, std::string name, bool is_ctor, const Mods& mods,
                           std::size_t member_start) {
        RawMethod m;
        m.name = std::move(name);
        m.is_ctor = is_ctor;
        m.is_static = mods.is_static;
        m.is_public = mods.explicit_public ||
                      (!mods.explicit_nonpublic && owner_members_public(idx));
        m.has_comment = comment_attached(member_start);

        // Parameters.
        adv(); // '('
        while (!tok().is_punct(")")) {
            if (at_eof()) bail("unterminated parameter list");
            while (tok().is_punct("@") && tok(1).is_ident()) skip_annotation();
            if (tok().is_kw("final")) {
                adv();
                continue;
            }
            ParsedType pt = try_type(false);
            if (!pt.valid) bail("malformed parameter");
            if (tok().is_punct("...")) adv();
            if (tok().is_kw("this")) {
                adv(); // receiver parameter; not a real parameter
            } else if (tok().is_ident()) {
                std::string pname(tok().text);
                adv();
                while (tok().is_punct("[") && tok(1).is_punct("]")) {
                    adv();
                    adv();
                }
                m.params.emplace_back(std::move(pname), pt.primitive ? "" : pt.name);
            } else {
                bail("malformed parameter");
            }
            if (tok().is_punct(",")) adv();
        }
        adv(); // ')'
        m.arity = static_cast<std::uint16_t>(m.params.size());

        while (tok().is_punct("[") && tok(1).is_punct("]")) {
            adv();
            adv();
        }
        if (tok().is_kw("throws")) {
            adv();
            while (true) {
                if (!tok().is_ident()) break;
                dotted_name();
                if (tok().is_punct(",")) {
                    adv();
                    continue;
                }
                break;
            }
        }

        if (tok().is_punct("{")) {
            m.has_body = true;
            adv();
            scan_region(idx, m, Mode::block);
        } else if (tok().is_punct(";")) {
            adv();
        } else if (tok().is_kw("default")) {
            // Annotation member default value: skip to ';'.
            adv();
            int depth = 0;
            while (!at_eof()) {
                if (tok().is_punct("{") || tok().is_punct("(")) ++depth;
                else if (tok().is_punct("}") || tok().is_punct(")")) --depth;
                else if (tok().is_punct(";") && depth == 0) break;
                adv();
            }
            if (tok().is_punct(";")) adv();
        } else {
            bail("expected a method body or ';'");
        }
        file_.classes[idx].methods.push_back(std::move(m));
    }

    void parse_fields_rest(int idx, const ParsedType& type, std::string first_name,
                           const Mods& mods) {
        bool owner_iface = owner_members_public(idx);
        bool is_public =
            mods.explicit_public || (!mods.explicit_nonpublic && owner_iface);
        bool is_static = mods.is_static || owner_iface;
        for (const std::string& arg : type.args)
            file_.classes[idx].class_used_types.push_back(arg);

        std::string name = std::move(first_name);
        while (true) {
            while (tok().is_punct("[") && tok(1).is_punct("]")) {
                adv();
                adv();
            }
            RawField f;
            f.name = std::move(name);
            f.type_name = type.primitive ? "" : type.name;
            f.is_public = is_public;
            f.is_static = is_static;
            file_.classes[idx].fields.push_back(std::move(f));

            if (tok().is_punct("=")) {
                adv();
                InitAccum& a = accum_[idx];
                scan_region(idx, is_static ? a.stat : a.inst, Mode::expr);
            }
            if (tok().is_punct(",")) {
                adv();
                if (!tok().is_ident()) bail("malformed field declarator");
                name = std::string(tok().text);
                adv();
                continue;
            }
            if (tok().is_punct(";")) {
                adv();
                return;
            }
            bail("malformed field declaration");
        }
    }

    int parse_anonymous(int owner_idx, const std::string& super_raw) {
        std::uint32_t k = ++file_.classes[owner_idx].anon_counter;
        RawClass rc;
        rc.kind = TypeKind::class_decl;
        rc.simple_name = "$" + std::to_string(k);
        rc.qualified_name = file_.classes[owner_idx].qualified_name + "$" + std::to_string(k);
        rc.super_name = super_raw;
        rc.parent = owner_idx;
        rc.decl_line = tok().line;
        int idx = static_cast<int>(file_.classes.size());
        file_.classes.push_back(std::move(rc));
        parse_class_body(idx);
        return idx;
    }

    // When the class body closes, pending initializer statements become one
    // merged synthetic member per kind -- but only when they do real work
    // (a call, a field access, or a branch). Plain value initializers only
    // contribute their types to the class.
    void materialize_synthetics(int idx) {
        auto it = accum_.find(idx);
        if (it == accum_.end()) return;
        auto finish = [&](RawMethod& m, bool had_block, const char* name, bool is_static) {
            bool keep = had_block || !m.body.calls.empty() || !m.body.accesses.empty() ||
                        m.body.decisions > 0;
            if (keep) {
                m.name = name;
                m.is_synthetic = true;
                m.is_static = is_static;
                m.has_body = true;
                file_.classes[idx].methods.push_back(std::move(m));
            } else {
                for (std::string& u : m.body.used_types)
                    file_.classes[idx].class_used_types.push_back(std::move(u));
            }
        };
        finish(it->second.stat, it->second.stat_block, "<clinit>", true);
        finish(it->second.inst, it->second.inst_block, "<init-block>", false);
        accum_.erase(it);
    }

    // --- statement/expression scanning ---------------------------------------

    void record_used_type(RawMethod& m, const ParsedType& t) {
        if (!t.primitive && !t.name.empty()) m.body.used_types.push_back(t.name);
        for (const std::string& a : t.args) m.body.used_types.push_back(a);
    }

    // Receiver of the identifier at token index j, by looking back through
    // a dotted chain. "" = bare; "this"/"super" rooted chains keep their
    // root; "<expr>" = computed receiver.
    std::string receiver_of(std::size_t j) const {
        if (j == 0 || !tok_at(j - 1).is_punct(".")) return "";
        std::vector<std::string> parts;
        std::size_t k = j - 2;
        while (true) {
            const Token& t = tok_at(k);
            if (t.is_ident()) {
                parts.emplace_back(t.text);
                if (k >= 2 && tok_at(k - 1).is_punct(".")) {
                    k -= 2;
                    continue;
                }
                break;
            }
            if (t.is_kw("this") || t.is_kw("super")) {
                parts.emplace_back(t.text);
                break;
            }
            return "<expr>";
        }
        std::reverse(parts.begin(), parts.end());
        std::string out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            out.push_back('.');
            out.append(parts[i]);
        }
        return out;
    }

    // Number of arguments of the call whose '(' is at token index open.
    std::uint16_t call_arity(std::size_t open) const {
        if (tok_at(open + 1).is_punct(")")) return 0;
        int paren = 1, other = 0;
        std::uint16_t commas = 0;
        for (std::size_t j = open + 1; j < lx_.tokens.size(); ++j) {
            const Token& t = tok_at(j);
            if (t.kind == TokKind::eof) break;
            if (t.is_punct("(")) ++paren;
            else if (t.is_punct(")")) {
                --paren;
                if (paren == 0) break;
            } else if (t.is_punct("{") || t.is_punct("[")) {
                ++other;
            } else if (t.is_punct("}") || t.is_punct("]")) {
                --other;
            } else if (t.is_punct(",") && paren == 1 && other == 0) {
                ++commas;
            }
        }
        return static_cast<std::uint16_t>(commas + 1);
    }

    // Parses catch headers: "catch (final A | B e)".
    void scan_catch_header(int cls_idx, RawMethod& m) {
        if (!tok().is_punct("(")) return;
        adv();
        while (tok().is_kw("final") || (tok().is_punct("@") && tok(1).is_ident())) {
            if (tok().is_kw("final")) adv();
            else skip_annotation();
        }
        ParsedType t = try_type(false);
        if (!t.valid) { // fall back: treat as a plain paren region
            scan_region(cls_idx, m, Mode::args);
            return;
        }
        record_used_type(m, t);
        while (tok().is_punct("|")) {
            adv();
            ParsedType u = try_type(false);
            if (!u.valid) break;
            record_used_type(m, u);
        }
        if (tok().is_ident()) {
            m.locals[std::string(tok().text)] = t.name;
            adv();
        }
        if (tok().is_punct(")")) adv();
    }

    // Tries a local variable declaration (or local type declaration) at the
    // cursor. Returns true when fully consumed.
    bool try_local_decl(int cls_idx, RawMethod& m) {
        std::size_t save = pos_;
        while (true) {
            if (tok().is_kw("final") || tok().is_kw("abstract") || tok().is_kw("static") ||
                tok().is_kw("strictfp")) {
                adv();
                continue;
            }
            if (tok().is_punct("@") && tok(1).is_ident() && !tok(1).is_kw("interface")) {
                skip_annotation();
                continue;
            }
            break;
        }
        if (tok().is_kw("class") || tok().is_kw("interface") || tok().is_kw("enum")) {
            parse_type_decl(cls_idx, true, save);
            return true;
        }

        ParsedType t = try_type(false);
        if (!t.valid) {
            pos_ = save;
            return false;
        }
        if (!tok().is_ident()) {
            pos_ = save;
            return false;
        }
        // Look past the name and C-style dims for a declarator follower.
        std::size_t j = pos_ + 1;
        while (tok_at(j).is_punct("[") && tok_at(j + 1).is_punct("]")) j += 2;
        const Token& follow = tok_at(j);
        if (!(follow.is_punct("=") || follow.is_punct(";") || follow.is_punct(",") ||
              follow.is_punct(":"))) {
            pos_ = save;
            return false;
        }

        record_used_type(m, t);
        std::string name(tok().text);
        adv();
        while (tok().is_punct("[") && tok(1).is_punct("]")) {
            adv();
            adv();
        }
        m.locals[name] = t.primitive ? "" : t.name;

        while (true) {
            if (tok().is_punct("=")) {
                adv();
                scan_region(cls_idx, m, Mode::expr);
                continue;
            }
            if (tok().is_punct(",")) {
                adv();
                if (!tok().is_ident()) return true; // odd; let the walker cope
                std::string n2(tok().text);
                adv();
                while (tok().is_punct("[") && tok(1).is_punct("]")) {
                    adv();
                    adv();
                }
                m.locals[n2] = t.primitive ? "" : t.name;
                continue;
            }
            return true; // ';' ':' ')' handled by the walker
        }
    }

    // The statement walker. Entered after '{' (block), after '(' (args), or
    // at an expression (expr: stops unconsumed at top-level ',' or ';' or a
    // closing token). Records calls, accesses, locals, used types, and
    // decision points into m.
    void scan_region(int cls_idx, RawMethod& m, Mode mode) {
        m.body.present = true;
        int depth = 0;
        int pending_ternary = 0;
        bool stmt_start = (mode == Mode::block);
        bool next_paren_decl = false;
        std::vector<std::pair<int, std::string>> anon_pending; // depth, supertype
        std::vector<int> decl_regions;                         // paren depths allowing decls

        auto in_decl_region = [&] {
            return !decl_regions.empty() && decl_regions.back() == depth;
        };

        while (true) {
            if (at_eof()) {
                if (mode == Mode::expr) return;
                bail("unterminated block");
            }
            const Token& t = tok();

            // Declarations are legal at statement starts and inside
            // for/try-resource headers.
            if ((stmt_start || in_decl_region()) &&
                (t.is_ident() || is_primitive_kw(t) || t.is_kw("final") || t.is_kw("class") ||
                 t.is_kw("interface") || t.is_kw("enum") || t.is_kw("abstract") ||
                 t.is_kw("static") || t.is_kw("strictfp") ||
                 (t.is_punct("@") && tok(1).is_ident() && !tok(1).is_kw("interface")))) {
                if (try_local_decl(cls_idx, m)) {
                    // A plain declaration stops at ';'/','/':' (still pending), a
                    // local type declaration swallows its whole body; either way
                    // the walker is back at a statement boundary.
                    stmt_start = true;
                    continue;
                }
            }

            if (t.kind == TokKind::punct) {
                std::string_view p = t.text;
                if (p == "{") {
                    ++depth;
                    adv();
                    stmt_start = true;
                    pending_ternary = 0;
                    continue;
                }
                if (p == "}") {
                    if (depth == 0) {
                        if (mode == Mode::block) {
                            adv();
                            return;
                        }
                        return; // expr/args: unconsumed; caller's problem
                    }
                    --depth;
                    adv();
                    stmt_start = true;
                    pending_ternary = 0;
                    continue;
                }
                if (p == "(") {
                    ++depth;
                    if (next_paren_decl) {
                        decl_regions.push_back(depth);
                        next_paren_decl = false;
                    }
                    adv();
                    stmt_start = false;
                    continue;
                }
                if (p == ")") {
                    if (depth == 0) {
                        if (mode == Mode::args) {
                            adv();
                            return;
                        }
                        return; // expr: unconsumed
                    }
                    --depth;
                    while (!decl_regions.empty() && decl_regions.back() > depth)
                        decl_regions.pop_back();
                    adv();
                    if (!anon_pending.empty() && anon_pending.back().first == depth) {
                        std::string super = std::move(anon_pending.back().second);
                        anon_pending.pop_back();
                        if (tok().is_punct("{")) parse_anonymous(cls_idx, super);
                    }
                    stmt_start = false;
                    continue;
                }
                if (p == "[") {
                    ++depth;
                    adv();
                    stmt_start = false;
                    continue;
                }
                if (p == "]") {
                    if (depth == 0) return; // expr: unconsumed (or malformed)
                    --depth;
                    adv();
                    stmt_start = false;
                    continue;
                }
                if (p == ";") {
                    if (depth == 0 && mode == Mode::expr) return;
                    adv();
                    stmt_start = true;
                    pending_ternary = 0;
                    continue;
                }
                if (p == ",") {
                    if (depth == 0 && mode == Mode::expr) return;
                    adv();
                    stmt_start = false;
                    continue;
                }
                if (p == "?") {
                    if (tok(1).is_kw("extends") || tok(1).is_kw("super") ||
                        tok(1).is_punct(">") || tok(1).is_punct(",")) {
                        adv(); // generic wildcard
                    } else {
                        ++m.body.decisions;
                        ++pending_ternary;
                        adv();
                    }
                    stmt_start = false;
                    continue;
                }
                if (p == ":") {
                    adv();
                    if (pending_ternary > 0) {
                        --pending_ternary;
                        stmt_start = false;
                    } else {
                        stmt_start = true; // after a label / case / assert message
                    }
                    continue;
                }
                if (p == "&&" || p == "||") {
                    ++m.body.decisions;
                    adv();
                    stmt_start = false;
                    continue;
                }
                if (p == "@") {
                    if (tok(1).is_ident()) skip_annotation();
                    else adv();
                    continue;
                }
                adv();
                stmt_start = false;
                continue;
            }

            if (t.kind == TokKind::keyword) {
                std::string_view k = t.text;
                if (k == "if" || k == "while") {
                    ++m.body.decisions;
                    adv();
                } else if (k == "for") {
                    ++m.body.decisions;
                    next_paren_decl = true;
                    adv();
                } else if (k == "try") {
                    next_paren_decl = true;
                    adv();
                } else if (k == "catch") {
                    ++m.body.decisions;
                    adv();
                    scan_catch_header(cls_idx, m);
                } else if (k == "case") {
                    ++m.body.decisions;
                    adv();
                    // Skip the label; its constants are not accesses.
                    while (!at_eof() && !tok().is_punct(":") && !tok().is_punct("->") &&
                           !tok().is_punct(";") && !tok().is_punct("{") && !tok().is_punct("}"))
                        adv();
                    if (tok().is_punct("->")) adv();
                    pending_ternary = 0;
                } else if (k == "new") {
                    adv();
                    while (tok().is_punct("@") && tok(1).is_ident()) skip_annotation();
                    ParsedType nt = try_type(false);
                    if (nt.valid) {
                        record_used_type(m, nt);
                        if (tok().is_punct("(") && !nt.primitive)
                            anon_pending.emplace_back(depth, nt.name);
                    }
                    stmt_start = false;
                } else if (k == "instanceof") {
                    adv();
                    try_type(false); // not an implementation usage
                    stmt_start = false;
                } else if (k == "class" || k == "interface" || k == "enum") {
                    parse_type_decl(cls_idx, true, pos_);
                    stmt_start = true;
                } else if (k == "do" || k == "else" || k == "finally" || k == "switch" ||
                           k == "synchronized" || k == "return" || k == "throw" ||
                           k == "assert" || k == "break" || k == "continue" ||
                           k == "default" || k == "this" || k == "super" || k == "throws") {
                    adv();
                    stmt_start = false;
                } else {
                    adv();
                    stmt_start = false;
                }
                continue;
            }

            if (t.kind == TokKind::identifier) {
                if (tok(1).is_punct("(")) {
                    RawCall call;
                    call.receiver = receiver_of(pos_);
                    call.name = std::string(t.text);
                    call.arity = call_arity(pos_ + 1);
                    m.body.calls.push_back(std::move(call));
                } else if (pos_ > 0 && tok_at(pos_ - 1).is_punct("::")) {
                    // method reference target; not a direct access
                } else if (tok(1).is_punct("->")) {
                    // single lambda parameter
                } else if (tok(1).is_punct(":") && pending_ternary == 0) {
                    // statement label (or assert/for-each boundary)
                } else {
                    RawAccess a;
                    a.receiver = receiver_of(pos_);
                    a.name = std::string(t.text);
                    m.body.accesses.push_back(std::move(a));
                }
                adv();
                stmt_start = false;
                continue;
            }

            // literals
            adv();
            stmt_start = false;
        }
    }
};

} // namespace

RawFile parse_java(std::string path, std::string_view source) {
    Parser p(std::move(path), source);
    return p.run();
}

} // namespace ckmet::model
