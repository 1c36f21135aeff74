#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lvmap/normalize.hpp"

namespace lvmap {

struct Corpus {
    std::vector<SourceFile> files;  // sorted by path
    std::vector<CodeBlock> blocks;  // blocks[i].block_id == i
    std::vector<std::string> warnings;
};

struct LoadOptions {
    std::optional<Language> language;  // nullopt: by file extension
    NormalizeOptions normalize;
    unsigned threads = 1;
};

/// Language implied by a file extension (.java, .c, .h), if supported.
std::optional<Language> language_for_path(const std::filesystem::path& path);

/// Reads source files from `inputs` (files or directories, scanned
/// recursively). Paths found under a directory root are recorded relative to
/// that root's parent, so `proj/src/A.java` for root `/data/proj`. Throws
/// std::runtime_error when an input cannot be read.
std::vector<SourceFile> read_sources(const std::vector<std::filesystem::path>& inputs,
                                     const LoadOptions& opts);

/// Extracts and normalizes every file (in parallel), then numbers blocks in
/// (path, start_line) order.
Corpus build_corpus(std::vector<SourceFile> files, const LoadOptions& opts);

inline Corpus load_corpus(const std::vector<std::filesystem::path>& inputs, const LoadOptions& opts) {
    return build_corpus(read_sources(inputs, opts), opts);
}

/// True when a block passes the minimum clone size filter.
inline bool is_eligible(const CodeBlock& block, std::size_t min_lines, std::size_t min_tokens) noexcept {
    return block.lines.size() >= min_lines && block.token_count >= min_tokens;
}

}  // namespace lvmap
