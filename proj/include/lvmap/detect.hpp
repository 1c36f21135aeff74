#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lvmap/normalize.hpp"
#include "lvmap/seed_index.hpp"

namespace lvmap {

/// Detection parameters. Defaults are the reference configuration: 3-line
/// seeds, 6 lines / 50 tokens minimum, and the size-dependent filter (theta)
/// and verify (delta) thresholds below.
struct Thresholds {
    std::size_t k = 3;
    std::size_t min_lines = 6;
    std::size_t min_tokens = 50;

    // theta(L): theta_small at L = 6, linear down to theta_cap at L = 10,
    // constant theta_cap above.
    double theta_small = 0.5;
    double theta_cap = 0.1;

    // delta(l): delta_small for l <= 10, -alpha * l + beta on (10, 20],
    // delta_floor above 20. The middle segment never drops below the floor.
    double delta_small = 0.55;
    double alpha = 0.025;
    double beta = 0.8;
    double delta_floor = 0.3;

    double theta_slope() const noexcept { return (theta_cap - theta_small) / 4.0; }
    double theta_intercept() const noexcept { return theta_small - 6.0 * theta_slope(); }
};

/// Smallest block size the threshold functions are defined for.
inline constexpr std::size_t kMinThresholdLines = 6;

/// Absolute slack used when comparing a ratio against theta or delta, so
/// that exact rational ties are not lost to rounding in the threshold value.
inline constexpr double kThresholdTolerance = 1e-9;

/// Filter threshold for a candidate block of `lines` lines. Throws
/// std::domain_error below 6 lines.
double theta(std::size_t lines, const Thresholds& t = {});

/// Verify threshold for the smaller block of a pair. Throws
/// std::domain_error below 6 lines.
double delta(std::size_t lines, const Thresholds& t = {});

struct CandidatePair {
    std::uint32_t query_block = 0;
    std::uint32_t candidate_block = 0;
    std::size_t shared_seeds = 0;
    double seed_ratio = 0.0;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct VerifiedPair {
    std::uint32_t block_a = 0;  // lower block id
    std::uint32_t block_b = 0;
    std::size_t comm_lines = 0;
    double ordered_similarity = 0.0;
    bool accepted = false;

    friend bool operator==(const VerifiedPair&, const VerifiedPair&) = default;
};

/// How the verify scan moves its cursors after a match.
enum class ScanMode {
    /// After a run of >= 2 lines, continue past the run in both blocks, so
    /// matched runs are disjoint and ordered.
    Ordered,
    /// Cursor-free reading of the original listing: the search in the larger
    /// block always restarts at its first line and the smaller block's
    /// cursor always advances by one. For comparison experiments only.
    Literal,
};

/// One contiguous run of equal line hashes (0-based line indices).
struct MatchRun {
    std::size_t line_small = 0;
    std::size_t line_large = 0;
    std::size_t length = 0;

    friend bool operator==(const MatchRun&, const MatchRun&) = default;
};

struct ScanResult {
    std::size_t comm_lines = 0;
    std::vector<MatchRun> runs;
};

/// Counts ordered common lines between `small` and `large` line hashes:
/// only runs of at least two consecutive equal lines contribute.
ScanResult ordered_common_lines(std::span<const std::uint64_t> small, std::span<const std::uint64_t> large,
                                ScanMode mode = ScanMode::Ordered);

std::vector<std::uint64_t> line_hashes(const CodeBlock& block);

/// Collision list of `query`: every indexed position of a block with a
/// larger id that shares a seed with it, sorted by block then line.
std::vector<PositionKey> locate(const SeedIndex& index, const CodeBlock& query);

/// Votes per candidate block, keeping those whose seed ratio reaches theta.
/// `blocks` is indexed by block id.
std::vector<CandidatePair> filter(const CodeBlock& query, std::span<const PositionKey> collisions,
                                  std::span<const CodeBlock> blocks, const Thresholds& t = {});

VerifiedPair verify(const CodeBlock& a, const CodeBlock& b, const Thresholds& t = {},
                    ScanMode mode = ScanMode::Ordered);

struct DetectOptions {
    unsigned threads = 1;
    ScanMode scan = ScanMode::Ordered;
};

/// Runs locate, filter and verify for every eligible block over `index`
/// (built over the same blocks with the same k). `blocks[i].block_id` must
/// equal i. Returns accepted pairs sorted by (block_a, block_b); the result
/// does not depend on the thread count.
std::vector<VerifiedPair> detect_all(std::span<const CodeBlock> blocks, const SeedIndex& index,
                                     const Thresholds& t = {}, const DetectOptions& opts = {});

}  // namespace lvmap
