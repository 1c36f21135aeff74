#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvmap/lexer.hpp"

namespace lvmap {

struct SourceFile {
    std::string path;
    Language language = Language::Java;
    std::string text;  // valid UTF-8
};

/// One pretty-printed line: its tokens concatenated without whitespace.
struct NormalizedLine {
    std::string text;
    std::uint64_t hash = 0;

    friend bool operator==(const NormalizedLine&, const NormalizedLine&) = default;
};

/// 1-based inclusive line range in the original file.
struct SourceSpan {
    std::uint32_t start_line = 0;
    std::uint32_t end_line = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// One extracted function, normalized.
struct CodeBlock {
    std::uint32_t block_id = 0;
    std::string file;
    SourceSpan span;
    std::vector<NormalizedLine> lines;
    std::size_t token_count = 0;

    std::size_t size() const noexcept { return lines.size(); }
};

struct NormalizeOptions {
    /// Replace numeric/string/char literal values by a fixed placeholder.
    bool abstract_literals = false;
};

/// Normalizes one block of source text into statement-per-line form:
/// comments dropped, identifiers replaced by `id`, a line break after
/// every `;`, `{` and `}`. Never fails.
std::vector<NormalizedLine> tokenize_block(std::string_view block_text, Language lang,
                                           const NormalizeOptions& opts = {});

/// Space-separated rendering of the same normalized token lines, one per
/// output line. Lexing this text again reproduces the same NormalizedLines.
std::string pretty_print(std::string_view block_text, Language lang,
                         const NormalizeOptions& opts = {});

struct ExtractResult {
    std::vector<CodeBlock> blocks;  // block_id left at 0; assigned by the corpus loader
    std::vector<std::string> warnings;
};

/// Finds every top-level (C) or class-level (Java) function definition in
/// `file` and normalizes it into a CodeBlock spanning the signature through
/// the matching closing brace. Functions nested inside other function
/// bodies are not extracted separately. An unterminated body at end of file
/// is dropped with a warning.
ExtractResult extract_blocks(const SourceFile& file, const NormalizeOptions& opts = {});

/// Replaces invalid UTF-8 sequences by U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

}  // namespace lvmap
