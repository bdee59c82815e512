#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ckmet {

// Shell-style glob matching against slash-separated relative paths.
//   *  matches any run of characters except '/'
//   ** matches any run of characters including '/'
//   ?  matches a single character except '/'
// A pattern without a slash is also tried against every path component, so
// "test" excludes any file under a directory named test.
bool glob_match(std::string_view pattern, std::string_view path);

// True if any pattern matches the path (or one of its components for
// slash-free patterns).
bool matches_any_glob(const std::vector<std::string>& patterns, std::string_view path);

} // namespace ckmet
