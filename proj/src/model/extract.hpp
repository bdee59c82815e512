#pragma once

#include "model/graph.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ckmet::model {

// Parses every non-excluded .java file under root (recursively, in sorted
// relative-path order). Files that fail to parse are kept as failed units
// and contribute nothing; the tree is still usable. jobs <= 1 parses
// serially, otherwise with a bounded worker pool. Throws Error(input) when
// root is not a readable directory.
UnresolvedTree parse_source_tree(const std::filesystem::path& root,
                                 const std::vector<std::string>& excludes,
                                 std::string version_id, unsigned jobs = 1);

} // namespace ckmet::model
