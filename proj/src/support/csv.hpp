#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ckmet {

// Minimal RFC-4180-style CSV support: comma separator, double-quote
// escaping, LF line endings on output, CR/CRLF tolerated on input.

// Quotes a field only when necessary.
std::string csv_quote(std::string_view field);

// Appends one row (already formatted fields) to out, followed by '\n'.
void csv_append_row(std::string& out, const std::vector<std::string>& fields);

// Parses full CSV text into rows of fields. Empty trailing line is ignored.
// Throws Error(input) on unterminated quotes.
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

} // namespace ckmet
