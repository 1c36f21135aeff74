#include "lvmap/metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace lvmap {

ClonePair score_counts(std::size_t lines_a, std::size_t lines_b, std::size_t shared, bool identical) {
    ClonePair p;
    p.lines_a = lines_a;
    p.lines_b = lines_b;
    p.shared_lines = shared;
    const double c = static_cast<double>(shared);
    p.sim_a_given_b = lines_a == 0 ? 0.0 : c / static_cast<double>(lines_a);
    p.sim_b_given_a = lines_b == 0 ? 0.0 : c / static_cast<double>(lines_b);
    p.sim_harmonic = 0.5 * (p.sim_a_given_b + p.sim_b_given_a);
    p.diff_harmonic = 1.0 - p.sim_harmonic;
    p.diff_a_given_b = 1.0 - p.sim_a_given_b;
    p.diff_b_given_a = 1.0 - p.sim_b_given_a;

    const std::uint64_t la = lines_a;
    const std::uint64_t lb = lines_b;
    const std::uint64_t s = shared;
    if (la > 0 && lb > 0 && s <= std::min(la, lb)) {
        // diff(A,B) = (2 la lb - s (la + lb)) / (2 la lb) > 3/20, strictly
        p.flags.large_variance = 20 * (2 * la * lb - s * (la + lb)) > 3 * (2 * la * lb);
    }
    // min/max <= 7/10
    p.flags.large_gap = la > 0 && lb > 0 && 10 * std::min(la, lb) <= 7 * std::max(la, lb);
    p.flags.type12 = identical;
    p.flags.type3 = !identical;
    return p;
}

std::size_t unordered_shared_lines(const CodeBlock& a, const CodeBlock& b) {
    std::unordered_map<std::uint64_t, std::size_t> counts;
    for (const auto& line : a.lines) ++counts[line.hash];
    std::size_t shared = 0;
    for (const auto& line : b.lines) {
        auto it = counts.find(line.hash);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++shared;
        }
    }
    return shared;
}

ClonePair score_pair(const VerifiedPair& pair, std::span<const CodeBlock> blocks, SharedLines shared) {
    const CodeBlock& a = blocks[pair.block_a];
    const CodeBlock& b = blocks[pair.block_b];
    const bool identical = a.lines.size() == b.lines.size() &&
                           std::equal(a.lines.begin(), a.lines.end(), b.lines.begin(),
                                      [](const NormalizedLine& x, const NormalizedLine& y) { return x.hash == y.hash; });
    const std::size_t count = shared == SharedLines::Ordered ? pair.comm_lines : unordered_shared_lines(a, b);
    ClonePair p = score_counts(a.lines.size(), b.lines.size(), count, identical);
    p.block_a = pair.block_a;
    p.block_b = pair.block_b;
    p.ordered_similarity = pair.ordered_similarity;
    return p;
}

Summary summarize(std::span<const ClonePair> pairs) {
    Summary s;
    for (const auto& p : pairs) {
        ++s.all;
        if (p.flags.type12) ++s.type12;
        if (p.flags.type3) ++s.type3;
        if (p.flags.large_variance) ++s.large_variance;
        if (p.flags.large_gap) ++s.large_gap;
    }
    return s;
}

}  // namespace lvmap
