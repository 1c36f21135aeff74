#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "lvmap/normalize.hpp"

namespace lvmap {

/// (block id, window start line) packed into one word: block id in the
/// high 32 bits, 1-based line id in the low 32 bits. Integer order is
/// block-then-line order.
class PositionKey {
public:
    constexpr PositionKey() = default;
    constexpr PositionKey(std::uint32_t block, std::uint32_t line) noexcept
        : packed_((static_cast<std::uint64_t>(block) << 32) | line) {}

    static constexpr PositionKey from_packed(std::uint64_t packed) noexcept {
        PositionKey key;
        key.packed_ = packed;
        return key;
    }

    constexpr std::uint64_t packed() const noexcept { return packed_; }
    constexpr std::uint32_t block() const noexcept { return static_cast<std::uint32_t>(packed_ >> 32); }
    constexpr std::uint32_t line() const noexcept { return static_cast<std::uint32_t>(packed_); }

    friend constexpr auto operator<=>(const PositionKey&, const PositionKey&) = default;

private:
    std::uint64_t packed_ = 0;
};

using Seed = std::uint64_t;

/// Hash of the concatenated texts of lines [start, start + k).
Seed window_seed(std::span<const NormalizedLine> lines, std::size_t start, std::size_t k);

/// All max(0, L - k + 1) window seeds of a block, in window order.
std::vector<Seed> block_seeds(const CodeBlock& block, std::size_t k);

/// Immutable map from seed to the sorted positions of every window with
/// that seed.
class SeedIndex {
public:
    struct Stats {
        std::size_t distinct_seeds = 0;
        std::size_t total_postings = 0;
        std::size_t max_posting = 0;
    };

    /// Indexes every window of every block in `blocks`. Callers pass only
    /// eligible blocks, or use the overload with size limits.
    static SeedIndex build(std::span<const CodeBlock> blocks, std::size_t k, unsigned threads = 1);

    /// Same, skipping blocks below the minimum clone size.
    static SeedIndex build(std::span<const CodeBlock> blocks, std::size_t k, std::size_t min_lines,
                           std::size_t min_tokens, unsigned threads = 1);

    /// Posting list for `seed`, ascending; empty when absent.
    std::span<const PositionKey> lookup(Seed seed) const noexcept;

    std::size_t k() const noexcept { return k_; }
    std::size_t n_blocks() const noexcept { return n_blocks_; }
    Stats stats() const noexcept;

    /// Visits (seed, postings) for every distinct seed in unspecified order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [seed, range] : table_) {
            fn(seed, std::span<const PositionKey>(postings_).subspan(range.first, range.second));
        }
    }

private:
    SeedIndex() = default;

    std::size_t k_ = 0;
    std::size_t n_blocks_ = 0;
    std::vector<PositionKey> postings_;
    // seed -> (offset, length) into postings_
    std::unordered_map<Seed, std::pair<std::size_t, std::size_t>> table_;
};

}  // namespace lvmap
