#include "support/fileio.hpp"

#include "support/error.hpp"
#include "support/glob.hpp"
#include "support/text.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace fs = std::filesystem;

namespace ckmet {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise_input("cannot open file: " + path.string());
    std::string data;
    in.seekg(0, std::ios::end);
    auto size = in.tellg();
    if (size < 0) raise_input("cannot read file: " + path.string());
    data.resize(static_cast<std::size_t>(size));
    in.seekg(0);
    in.read(data.data(), size);
    if (!in && size != 0) raise_input("cannot read file: " + path.string());
    return data;
}

void atomic_write(const fs::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) raise_internal("cannot create directory " + path.parent_path().string() +
                               ": " + ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise_internal("cannot create file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            raise_internal("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        raise_internal("cannot replace file: " + path.string());
    }
}

std::vector<std::string> list_files(const fs::path& root,
                                    const std::vector<std::string>& suffixes,
                                    const std::vector<std::string>& exclude_globs) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) raise_input("not a directory: " + root.string());

    std::vector<std::string> out;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) raise_input("cannot traverse directory: " + root.string());
    for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) raise_input("cannot traverse directory: " + root.string());
        const fs::directory_entry& entry = *it;
        std::string rel = entry.path().lexically_relative(root).generic_string();
        if (entry.is_directory(ec)) {
            if (matches_any_glob(exclude_globs, rel)) it.disable_recursion_pending();
            continue;
        }
        if (!entry.is_regular_file(ec)) continue;
        bool wanted = suffixes.empty();
        for (const std::string& sfx : suffixes) {
            if (ends_with(rel, sfx)) {
                wanted = true;
                break;
            }
        }
        if (!wanted) continue;
        if (matches_any_glob(exclude_globs, rel)) continue;
        out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace ckmet
