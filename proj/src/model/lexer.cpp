#include "model/token.hpp"

#include <array>
#include <string_view>
#include <unordered_set>

namespace ckmet::model {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
    static const std::unordered_set<std::string_view> kw = {
        "abstract", "assert",   "boolean",  "break",      "byte",    "case",
        "catch",    "char",     "class",    "const",      "continue", "default",
        "do",       "double",   "else",     "enum",       "extends", "final",
        "finally",  "float",    "for",      "goto",       "if",      "implements",
        "import",   "instanceof", "int",    "interface",  "long",    "native",
        "new",      "package",  "private",  "protected",  "public",  "return",
        "short",    "static",   "strictfp", "super",      "switch",  "synchronized",
        "this",     "throw",    "throws",   "transient",  "try",     "void",
        "volatile", "while",    "true",     "false",      "null",
    };
    return kw;
}

// Multi-character punctuation that must stay fused. '<' and '>' are never
// fused with themselves so generic argument lists keep their bracket
// structure (a '>>' closing two levels arrives as two '>' tokens).
constexpr std::array<std::string_view, 19> multi_punct = {
    "...", "::", "->", "==", "!=", "<=", ">=", "&&", "||",
    "++",  "--", "+=", "-=", "*=", "/=", "%=", "&=", "^=", "|=",
};

bool ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' ||
           c >= 0x80;
}
bool ident_cont(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

} // namespace

LexOutput lex(std::string_view src) {
    LexOutput out;
    out.tokens.reserve(src.size() / 4 + 8);
    std::uint32_t line = 1, col = 1;
    std::size_t i = 0;
    const std::size_t n = src.size();

    auto ensure_line = [&](std::uint32_t l) {
        if (out.line_has_code.size() <= l) out.line_has_code.resize(l + 1, false);
    };
    auto mark_code = [&](std::uint32_t l) {
        ensure_line(l);
        out.line_has_code[l] = true;
    };
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count && i < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](TokKind kind, std::size_t start, std::uint32_t tline, std::uint32_t tcol) {
        out.tokens.push_back({kind, src.substr(start, i - start), tline, tcol});
        mark_code(tline);
    };

    while (i < n) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == 0x0b) {
            advance(1);
            continue;
        }
        std::uint32_t tline = line, tcol = col;
        std::size_t start = i;

        // Comments.
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            advance(2);
            while (i < n && src[i] != '\n') advance(1);
            out.comments.push_back({tline, tline, tcol, false});
            ensure_line(tline);
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            advance(2);
            while (i < n && !(src[i] == '*' && i + 1 < n && src[i + 1] == '/')) advance(1);
            advance(2); // closing */ (no-op at eof)
            out.comments.push_back({tline, line, tcol, true});
            ensure_line(line);
            continue;
        }

        // String literals, including text blocks.
        if (c == '"') {
            if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
                advance(3);
                while (i < n && !(src[i] == '"' && i + 1 < n && src[i + 1] == '"' &&
                                  i + 2 < n && src[i + 2] == '"')) {
                    advance(1);
                }
                advance(3);
                push(TokKind::string, start, tline, tcol);
                for (std::uint32_t l = tline; l <= line; ++l) mark_code(l);
                continue;
            }
            advance(1);
            while (i < n && src[i] != '"' && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < n) advance(1);
                advance(1);
            }
            if (i < n && src[i] == '"') advance(1);
            push(TokKind::string, start, tline, tcol);
            continue;
        }

        // Character literals.
        if (c == '\'') {
            advance(1);
            while (i < n && src[i] != '\'' && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < n) advance(1);
                advance(1);
            }
            if (i < n && src[i] == '\'') advance(1);
            push(TokKind::chr, start, tline, tcol);
            continue;
        }

        // Numbers. A loose scan: structure does not depend on their value.
        if (digit(c) || (c == '.' && i + 1 < n && digit(static_cast<unsigned char>(src[i + 1])))) {
            advance(1);
            while (i < n) {
                unsigned char d = static_cast<unsigned char>(src[i]);
                if (ident_cont(d) || d == '.') {
                    advance(1);
                } else if ((d == '+' || d == '-') && i > start) {
                    unsigned char prev = static_cast<unsigned char>(src[i - 1]);
                    if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
                        advance(1);
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
            push(TokKind::number, start, tline, tcol);
            continue;
        }

        // Identifiers and keywords.
        if (ident_start(c)) {
            advance(1);
            while (i < n && ident_cont(static_cast<unsigned char>(src[i]))) advance(1);
            std::string_view text = src.substr(start, i - start);
            push(keyword_set().count(text) ? TokKind::keyword : TokKind::identifier, start,
                 tline, tcol);
            continue;
        }

        // Punctuation: longest fused form first.
        bool matched = false;
        for (std::string_view mp : multi_punct) {
            if (src.compare(i, mp.size(), mp) == 0) {
                advance(mp.size());
                push(TokKind::punct, start, tline, tcol);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        advance(1);
        push(TokKind::punct, start, tline, tcol);
    }

    out.line_count = (n == 0) ? 0 : (src.back() == '\n' ? line - 1 : line);
    ensure_line(out.line_count);
    out.tokens.push_back({TokKind::eof, std::string_view(), line, col});
    return out;
}

} // namespace ckmet::model
