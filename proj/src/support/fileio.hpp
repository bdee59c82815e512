#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ckmet {

// Reads a whole file as bytes; throws Error(input) if unreadable.
std::string read_file(const std::filesystem::path& path);

// Writes content to a sibling temp file and renames it into place, so a
// crash never leaves a half-written report behind. Creates parent
// directories as needed. Throws Error(internal) on I/O failure.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Lists regular files under root whose relative slash-path ends with any of
// the given suffixes (case-sensitive) and is not excluded by a glob. Results
// are relative paths sorted lexicographically, so traversal order never
// depends on the directory iteration order of the OS.
std::vector<std::string> list_files(const std::filesystem::path& root,
                                    const std::vector<std::string>& suffixes,
                                    const std::vector<std::string>& exclude_globs);

// FNV-1a 64-bit, used for extraction cache keys.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 1469598103934665603ull);
std::string to_hex(std::uint64_t v);

} // namespace ckmet
