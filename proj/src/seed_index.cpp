#include "lvmap/seed_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lvmap/corpus.hpp"
#include "lvmap/hash.hpp"
#include "lvmap/parallel.hpp"

namespace lvmap {

Seed window_seed(std::span<const NormalizedLine> lines, std::size_t start, std::size_t k) {
    std::string concat;
    for (std::size_t i = start; i < start + k; ++i) concat += lines[i].text;
    return hash64(concat);
}

std::vector<Seed> block_seeds(const CodeBlock& block, std::size_t k) {
    std::vector<Seed> seeds;
    if (k == 0 || block.lines.size() < k) return seeds;
    const std::size_t n = block.lines.size() - k + 1;
    seeds.reserve(n);
    std::string concat;
    for (std::size_t start = 0; start < n; ++start) {
        concat.clear();
        for (std::size_t i = start; i < start + k; ++i) concat += block.lines[i].text;
        seeds.push_back(hash64(concat));
    }
    return seeds;
}

SeedIndex SeedIndex::build(std::span<const CodeBlock> blocks, std::size_t k, unsigned threads) {
    return build(blocks, k, 0, 0, threads);
}

SeedIndex SeedIndex::build(std::span<const CodeBlock> blocks, std::size_t k, std::size_t min_lines,
                           std::size_t min_tokens, unsigned threads) {
    if (k == 0) throw std::invalid_argument("seed window size must be positive");

    std::vector<std::vector<Seed>> per_block(blocks.size());
    parallel_for(blocks.size(), threads, [&](std::size_t i, unsigned) {
        if (is_eligible(blocks[i], min_lines, min_tokens)) per_block[i] = block_seeds(blocks[i], k);
    });

    struct Entry {
        Seed seed;
        PositionKey key;
    };
    std::size_t total = 0;
    for (const auto& seeds : per_block) total += seeds.size();
    std::vector<Entry> entries;
    entries.reserve(total);
    SeedIndex index;
    index.k_ = k;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (is_eligible(blocks[i], min_lines, min_tokens)) ++index.n_blocks_;
        for (std::size_t w = 0; w < per_block[i].size(); ++w) {
            entries.push_back({per_block[i][w], PositionKey(blocks[i].block_id, static_cast<std::uint32_t>(w + 1))});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.seed != b.seed ? a.seed < b.seed : a.key < b.key;
    });

    index.postings_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].seed == entries[i].seed) {
            index.postings_.push_back(entries[j].key);
            ++j;
        }
        index.table_.emplace(entries[i].seed, std::make_pair(i, j - i));
        i = j;
    }
    return index;
}

std::span<const PositionKey> SeedIndex::lookup(Seed seed) const noexcept {
    const auto it = table_.find(seed);
    if (it == table_.end()) return {};
    return std::span<const PositionKey>(postings_).subspan(it->second.first, it->second.second);
}

SeedIndex::Stats SeedIndex::stats() const noexcept {
    Stats s;
    s.distinct_seeds = table_.size();
    s.total_postings = postings_.size();
    for (const auto& [seed, range] : table_) s.max_posting = std::max(s.max_posting, range.second);
    return s;
}

}  // namespace lvmap
