#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ckmet::model {

enum class TokKind : std::uint8_t {
    identifier,
    keyword,
    punct,   // operators and separators, possibly multi-character
    string,  // string or text-block literal
    chr,     // character literal
    number,
    eof,
};

struct Token {
    TokKind kind = TokKind::eof;
    std::string_view text;     // view into the source buffer
    std::uint32_t line = 0;    // 1-based
    std::uint32_t col = 0;     // 1-based byte column

    bool is(TokKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_kw(std::string_view t) const { return is(TokKind::keyword, t); }
    bool is_punct(std::string_view t) const { return is(TokKind::punct, t); }
    bool is_ident() const { return kind == TokKind::identifier; }
};

struct Comment {
    std::uint32_t start_line = 0;
    std::uint32_t end_line = 0;
    std::uint32_t start_col = 0;
    bool block = false; // true for /* */ and /** */
};

struct LexOutput {
    std::vector<Token> tokens;     // terminated by one eof token
    std::vector<Comment> comments; // in source order
    std::vector<bool> line_has_code; // index 0 unused; true if line holds any token
    std::uint32_t line_count = 0;
};

// Tokenizes Java source. Byte-based and tolerant: unknown bytes become
// one-character punctuation, non-ASCII bytes are treated as identifier
// characters, unterminated literals end at end of line/file.
LexOutput lex(std::string_view source);

} // namespace ckmet::model
