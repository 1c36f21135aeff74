#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lvmap/detect.hpp"
#include "lvmap/normalize.hpp"

namespace lvmap {

/// Large-variance difference threshold: a clone whose difference exceeds
/// this (strictly) is large-variance.
inline constexpr double kLargeVarianceDelta = 0.15;
/// Large-gap size ratio: smaller/larger at or below this is large-gap.
inline constexpr double kLargeGapLambda = 0.7;

struct CloneFlags {
    bool type12 = false;
    bool type3 = false;
    bool large_variance = false;
    bool large_gap = false;

    friend bool operator==(const CloneFlags&, const CloneFlags&) = default;
};

/// Similarity/difference measures of one pair. `a` is the lower block id.
struct ClonePair {
    std::uint32_t block_a = 0;
    std::uint32_t block_b = 0;
    std::size_t lines_a = 0;
    std::size_t lines_b = 0;
    std::size_t shared_lines = 0;
    double ordered_similarity = 0.0;

    double sim_harmonic = 0.0;
    double sim_a_given_b = 0.0;
    double sim_b_given_a = 0.0;
    double diff_harmonic = 0.0;
    double diff_a_given_b = 0.0;
    double diff_b_given_a = 0.0;
    CloneFlags flags;
};

/// What counts as a "shared line" between two blocks.
enum class SharedLines {
    Ordered,    // the verify scan's ordered common lines
    Unordered,  // multiset intersection of line hashes
};

/// Scores an accepted pair from its sizes and shared-line count. Flags are
/// decided in exact integer arithmetic; `identical` means the full line-hash
/// sequences are equal.
ClonePair score_counts(std::size_t lines_a, std::size_t lines_b, std::size_t shared, bool identical);

/// Scores a verified pair; `blocks` is indexed by block id.
ClonePair score_pair(const VerifiedPair& pair, std::span<const CodeBlock> blocks,
                     SharedLines shared = SharedLines::Ordered);

/// Size of the multiset intersection of the two blocks' line hashes.
std::size_t unordered_shared_lines(const CodeBlock& a, const CodeBlock& b);

struct Summary {
    std::size_t type12 = 0;
    std::size_t type3 = 0;
    std::size_t all = 0;
    std::size_t large_variance = 0;
    std::size_t large_gap = 0;

    /// LV / All, or 0 when there are no pairs.
    double lv_ratio() const noexcept {
        return all == 0 ? 0.0 : static_cast<double>(large_variance) / static_cast<double>(all);
    }
};

Summary summarize(std::span<const ClonePair> pairs);

}  // namespace lvmap
