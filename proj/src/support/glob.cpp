#include "support/glob.hpp"

#include "support/text.hpp"

namespace ckmet {

namespace {

bool match_here(std::string_view pat, std::string_view str) {
    // Recursive wildcard match; each star tries every span it could absorb,
    // so an early '**' can still re-expand after a later wildcard fails.
    // Patterns are short user-supplied excludes, so the worst case is cheap.
    if (pat.empty()) return str.empty();
    if (pat[0] == '*') {
        bool crosses = pat.size() > 1 && pat[1] == '*';
        auto rest = pat.substr(crosses ? 2 : 1);
        for (std::size_t take = 0;; ++take) {
            if (match_here(rest, str.substr(take))) return true;
            if (take == str.size()) return false;
            if (!crosses && str[take] == '/') return false;
        }
    }
    if (str.empty()) return false;
    if (pat[0] != str[0] && !(pat[0] == '?' && str[0] != '/')) return false;
    return match_here(pat.substr(1), str.substr(1));
}

} // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
    if (match_here(pattern, path)) return true;
    if (pattern.find('/') == std::string_view::npos) {
        for (std::string_view part : split(path, '/')) {
            if (match_here(pattern, part)) return true;
        }
    }
    return false;
}

bool matches_any_glob(const std::vector<std::string>& patterns, std::string_view path) {
    for (const std::string& p : patterns) {
        if (glob_match(p, path)) return true;
    }
    return false;
}

} // namespace ckmet
