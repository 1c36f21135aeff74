#include "lvmap/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "lvmap/parallel.hpp"

namespace lvmap {

namespace fs = std::filesystem;

std::optional<Language> language_for_path(const fs::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".java") return Language::Java;
    if (ext == ".c" || ext == ".h") return Language::C;
    return std::nullopt;
}

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("error reading " + path.string());
    return bytes;
}

fs::path root_label(const fs::path& root) {
    const fs::path canonical = fs::weakly_canonical(root);
    fs::path name = canonical.filename();
    if (name.empty()) name = canonical.parent_path().filename();
    return name;
}

}  // namespace

std::vector<SourceFile> read_sources(const std::vector<fs::path>& inputs, const LoadOptions& opts) {
    struct Pending {
        fs::path disk;
        std::string display;
        Language language;
    };
    std::vector<Pending> pending;

    for (const fs::path& input : inputs) {
        std::error_code ec;
        const auto status = fs::status(input, ec);
        if (ec || !fs::exists(status)) throw std::runtime_error("cannot read " + input.string());
        if (fs::is_directory(status)) {
            const fs::path label = root_label(input);
            fs::recursive_directory_iterator it(input, fs::directory_options::skip_permission_denied, ec);
            if (ec) throw std::runtime_error("cannot read " + input.string() + ": " + ec.message());
            for (const auto& entry : it) {
                if (!entry.is_regular_file()) continue;
                const auto lang = language_for_path(entry.path());
                if (!lang) continue;
                const fs::path rel = entry.path().lexically_relative(input);
                pending.push_back({entry.path(), (label / rel).generic_string(), opts.language.value_or(*lang)});
            }
        } else {
            const auto lang = opts.language ? opts.language : language_for_path(input);
            if (!lang) {
                spdlog::warn("skipping {}: unsupported extension", input.string());
                continue;
            }
            pending.push_back({input, input.lexically_normal().generic_string(), *lang});
        }
    }

    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) { return a.display < b.display; });
    pending.erase(std::unique(pending.begin(), pending.end(),
                              [](const Pending& a, const Pending& b) {
                                  if (a.display != b.display) return false;
                                  spdlog::warn("duplicate path {} ignored", a.display);
                                  return true;
                              }),
                  pending.end());

    std::vector<SourceFile> files(pending.size());
    parallel_for(pending.size(), opts.threads, [&](std::size_t i, unsigned) {
        files[i].path = pending[i].display;
        files[i].language = pending[i].language;
        files[i].text = sanitize_utf8(read_file(pending[i].disk));
    });
    return files;
}

Corpus build_corpus(std::vector<SourceFile> files, const LoadOptions& opts) {
    std::sort(files.begin(), files.end(), [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });

    std::vector<ExtractResult> per_file(files.size());
    parallel_for(files.size(), opts.threads,
                 [&](std::size_t i, unsigned) { per_file[i] = extract_blocks(files[i], opts.normalize); },
                 4);

    Corpus corpus;
    for (auto& result : per_file) {
        for (auto& w : result.warnings) {
            spdlog::warn("{}", w);
            corpus.warnings.push_back(std::move(w));
        }
        for (auto& block : result.blocks) corpus.blocks.push_back(std::move(block));
    }
    // Files are already in path order; keep start-line order within a file.
    std::stable_sort(corpus.blocks.begin(), corpus.blocks.end(), [](const CodeBlock& a, const CodeBlock& b) {
        if (a.file != b.file) return a.file < b.file;
        return a.span.start_line < b.span.start_line;
    });
    for (std::size_t i = 0; i < corpus.blocks.size(); ++i) corpus.blocks[i].block_id = static_cast<std::uint32_t>(i);
    corpus.files = std::move(files);
    return corpus;
}

}  // namespace lvmap
