#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lvmap/lexer.hpp"
#include "lvmap/normalize.hpp"

namespace lvmap::testing {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

std::string random_identifier(Rng& rng);

/// One brace-free statement ending in ';' that normalizes to a single line.
std::string random_statement(Rng& rng, Language lang);

/// A function body as statement lines. Some entries open or close a loop
/// (`for (...) {` / `}`), always balanced.
std::vector<std::string> random_body(Rng& rng, Language lang, std::size_t statements);

/// Source text of a function with the given body lines, indented.
std::string render_function(Language lang, const std::string& name, const std::vector<std::string>& body);

/// Wraps function texts into one compilation unit (a class for Java).
std::string render_file(Language lang, const std::string& unit_name, const std::vector<std::string>& functions);

struct CorpusShape {
    std::size_t files = 100;
    std::size_t functions_per_file = 8;
    std::size_t min_statements = 4;
    std::size_t max_statements = 30;
    double clone_rate = 0.3;  // share of functions that are edited copies
    bool mixed = true;        // Java and C; Java only otherwise
};

/// Seeded corpus with clone families: edited copies (renames, inserted,
/// deleted and replaced statements) of earlier functions.
std::vector<SourceFile> random_corpus(std::uint64_t seed, const CorpusShape& shape);

std::size_t count_lines(const std::vector<SourceFile>& files);

/// CodeBlock built straight from normalized line texts.
CodeBlock block_from_texts(std::uint32_t id, const std::vector<std::string>& texts, std::size_t tokens = 60);

/// Block of `lines` normalized lines drawn from an alphabet of `alphabet`
/// distinct texts (small alphabets give many repeats).
CodeBlock random_block(Rng& rng, std::uint32_t id, std::size_t lines, std::size_t alphabet);

std::vector<std::uint64_t> random_hashes(Rng& rng, std::size_t lines, std::size_t alphabet);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Writes each file under `root` at its relative path.
void write_files(const std::filesystem::path& root, const std::vector<SourceFile>& files);

std::string read_file(const std::filesystem::path& path);

}  // namespace lvmap::testing
