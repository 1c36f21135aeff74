#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvmap/corpus.hpp"
#include "lvmap/detect.hpp"

namespace lvmap {

/// A single brace-free statement line taken from some function.
struct DonorLine {
    std::string text;  // trimmed source text, ends with ';'
    std::uint32_t block_id = 0;
};

/// Collects candidate insertion lines from every block of the corpus: one
/// complete statement per source line, no braces, and no control transfer
/// (return/break/continue/throw) or case labels.
std::vector<DonorLine> collect_donor_lines(const Corpus& corpus);

/// Original source text of a block: lines span.start_line..span.end_line.
std::string block_source(const SourceFile& file, const CodeBlock& block);

/// 0-based source lines of `block_text` after which a statement may be
/// inserted: lines inside the body (after the line opening it, before the
/// last line) whose final token is `;`, `{` or `}`.
std::vector<std::size_t> insertion_gaps(std::string_view block_text, Language lang);

/// Inserts `n_insert` donor lines into `block_text`. The inserted lines take
/// `n_insert` distinct interior line positions of the result, uniformly among
/// all placements that keep every donor at a valid gap (several donors may
/// land in the same gap). Donors from `exclude_block` are never used.
/// Returns nullopt when the block has no valid gap or no usable donor.
std::optional<std::string> make_clone(std::string_view block_text, Language lang, std::span<const DonorLine> donors,
                                      std::size_t n_insert, std::uint32_t exclude_block, std::mt19937_64& rng);

struct SizeBucket {
    std::size_t min_lines = 0;  // inclusive
    std::size_t max_lines = 0;  // exclusive, except for the last bucket
};

/// Which block of a generated pair gets the lower block id, and so acts as the
/// query side of the filter. The filter only checks the candidate side, so
/// the order changes which block's size sets the threshold.
enum class PairOrder { Random, OriginalFirst, MutantFirst };

struct ExperimentConfig {
    std::size_t n_min = 1;
    std::size_t n_max = 20;
    std::size_t cases_per_point = 200;
    std::size_t originals = 200;
    std::vector<SizeBucket> buckets = {{15, 20}, {20, 25}, {25, 30}};
    std::uint64_t seed = 0;
    Thresholds thresholds;
    NormalizeOptions normalize;
    DetectOptions detect;
    /// Detect all (original, mutant) pairs of one insert count in one shared
    /// corpus instead of one corpus per pair.
    bool pooled = false;
    PairOrder order = PairOrder::Random;  // Random: a seeded coin flip per case
};

struct TrialResult {
    std::size_t n_insert = 0;
    std::size_t n_cases = 0;
    std::size_t n_detected = 0;
    double recall = 0.0;

    friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Picks the originals: eligible blocks whose source length (in lines) falls
/// in one of the buckets, about equally many per bucket. Returns block ids.
std::vector<std::uint32_t> select_originals(const Corpus& corpus, const ExperimentConfig& cfg);

/// Injection recall experiment: for each insert count, mutate originals with
/// scattered donor lines and check whether the detector reports the
/// (original, mutant) pair. Cases that cannot be generated are skipped and
/// excluded from n_cases.
std::vector<TrialResult> run_recall_experiment(const Corpus& corpus, const ExperimentConfig& cfg);

/// recall_curve.tsv: a `# seed=<n>` header, a column header, one row per
/// insert count.
std::string format_recall_tsv(std::span<const TrialResult> results, std::uint64_t seed);

}  // namespace lvmap
