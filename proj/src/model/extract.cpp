#include "model/extract.hpp"

#include "support/fileio.hpp"

#include <atomic>
#include <thread>

namespace fs = std::filesystem;

namespace ckmet::model {

UnresolvedTree parse_source_tree(const fs::path& root, const std::vector<std::string>& excludes,
                                 std::string version_id, unsigned jobs) {
    std::vector<std::string> files = list_files(root, {".java"}, excludes);
    UnresolvedTree tree;
    tree.version_id = std::move(version_id);
    tree.files.resize(files.size());

    auto parse_one = [&](std::size_t i) {
        RawFile out;
        try {
            std::string content = read_file(root / files[i]);
            out = parse_java(files[i], content);
        } catch (const std::exception& e) {
            out.path = files[i];
            out.status = ParseStatus::failed;
            out.error = e.what();
        }
        tree.files[i] = std::move(out);
    };

    if (jobs <= 1 || files.size() < 2) {
        for (std::size_t i = 0; i < files.size(); ++i) parse_one(i);
        return tree;
    }

    unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(files.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tree.files.size()) return;
                parse_one(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return tree;
}

} // namespace ckmet::model
