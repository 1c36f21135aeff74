#include "lvmap/detect.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lvmap/corpus.hpp"
#include "lvmap/parallel.hpp"

namespace lvmap {

namespace {

constexpr double kJoinSnap = 1e-12;

void require_min_size(std::size_t lines, const char* what) {
    if (lines < kMinThresholdLines) {
        throw std::domain_error(std::string(what) + " is undefined below 6 lines (got " + std::to_string(lines) + ")");
    }
}

VerifiedPair verify_hashes(std::uint32_t id_a, std::span<const std::uint64_t> a, std::uint32_t id_b,
                           std::span<const std::uint64_t> b, const Thresholds& t, ScanMode mode) {
    if (id_b < id_a) {
        std::swap(id_a, id_b);
        std::swap(a, b);
    }
    // Smaller block first; equal sizes keep the lower id first.
    const bool a_small = a.size() <= b.size();
    const auto small = a_small ? a : b;
    const auto large = a_small ? b : a;

    VerifiedPair pair;
    pair.block_a = id_a;
    pair.block_b = id_b;
    pair.comm_lines = ordered_common_lines(small, large, mode).comm_lines;
    pair.ordered_similarity = small.empty() ? 0.0 : static_cast<double>(pair.comm_lines) / static_cast<double>(small.size());
    pair.accepted = pair.ordered_similarity + kThresholdTolerance >= delta(small.size(), t);
    return pair;
}

}  // namespace

double theta(std::size_t lines, const Thresholds& t) {
    require_min_size(lines, "theta");
    if (lines == 6) return t.theta_small;
    if (lines < 10) return t.theta_slope() * static_cast<double>(lines) + t.theta_intercept();
    return t.theta_cap;
}

double delta(std::size_t lines, const Thresholds& t) {
    require_min_size(lines, "delta");
    if (lines <= 10) return t.delta_small;
    if (lines > 20) return t.delta_floor;
    // -alpha * l + beta lands a few ulps off the floor at l = 20; snap so
    // the segments join exactly.
    const double g = -t.alpha * static_cast<double>(lines) + t.beta;
    return g <= t.delta_floor + kJoinSnap ? t.delta_floor : g;
}

ScanResult ordered_common_lines(std::span<const std::uint64_t> small, std::span<const std::uint64_t> large,
                                ScanMode mode) {
    ScanResult result;
    std::size_t line1 = 0;
    std::size_t search_from = 0;  // first candidate index in `large` (lastline)
    while (line1 < small.size()) {
        const auto it = std::find(large.begin() + static_cast<std::ptrdiff_t>(search_from), large.end(), small[line1]);
        if (it != large.end()) {
            const auto line2 = static_cast<std::size_t>(it - large.begin());
            std::size_t m = 1;
            while (line1 + m < small.size() && line2 + m < large.size() && small[line1 + m] == large[line2 + m]) ++m;
            if (m >= 2) {
                result.comm_lines += m;
                result.runs.push_back({line1, line2, m});
                if (mode == ScanMode::Ordered) {
                    search_from = line2 + m;
                    line1 += m;
                    continue;
                }
            }
        }
        ++line1;
    }
    return result;
}

std::vector<std::uint64_t> line_hashes(const CodeBlock& block) {
    std::vector<std::uint64_t> out;
    out.reserve(block.lines.size());
    for (const auto& line : block.lines) out.push_back(line.hash);
    return out;
}

std::vector<PositionKey> locate(const SeedIndex& index, const CodeBlock& query) {
    std::vector<PositionKey> collisions;
    // Everything at or below (query, max line) belongs to blocks <= query.
    const PositionKey bound(query.block_id, UINT32_MAX);
    for (const Seed seed : block_seeds(query, index.k())) {
        const auto postings = index.lookup(seed);
        const auto first = std::upper_bound(postings.begin(), postings.end(), bound);
        collisions.insert(collisions.end(), first, postings.end());
    }
    std::sort(collisions.begin(), collisions.end());
    return collisions;
}

std::vector<CandidatePair> filter(const CodeBlock& query, std::span<const PositionKey> collisions,
                                  std::span<const CodeBlock> blocks, const Thresholds& t) {
    std::vector<CandidatePair> out;
    for (std::size_t i = 0; i < collisions.size();) {
        const std::uint32_t b = collisions[i].block();
        std::size_t j = i;
        while (j < collisions.size() && collisions[j].block() == b) ++j;
        const std::size_t votes = j - i;
        i = j;

        const std::size_t lines = blocks[b].lines.size();
        const std::size_t total = lines - t.k + 1;  // > 0: b has at least one window
        const double ratio = static_cast<double>(votes) / static_cast<double>(total);
        if (ratio + kThresholdTolerance >= theta(lines, t)) {
            out.push_back({query.block_id, b, votes, ratio});
        }
    }
    return out;
}

VerifiedPair verify(const CodeBlock& a, const CodeBlock& b, const Thresholds& t, ScanMode mode) {
    const auto ha = line_hashes(a);
    const auto hb = line_hashes(b);
    return verify_hashes(a.block_id, ha, b.block_id, hb, t, mode);
}

std::vector<VerifiedPair> detect_all(std::span<const CodeBlock> blocks, const SeedIndex& index, const Thresholds& t,
                                     const DetectOptions& opts) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].block_id != i) throw std::invalid_argument("detect_all: blocks must be indexed by block id");
    }
    if (index.k() != t.k) throw std::invalid_argument("detect_all: index window size differs from thresholds.k");

    std::vector<std::vector<std::uint64_t>> hashes(blocks.size());
    parallel_for(blocks.size(), opts.threads, [&](std::size_t i, unsigned) {
        hashes[i] = line_hashes(blocks[i]);
    });

    const unsigned workers = std::max(1u, opts.threads);
    std::vector<std::vector<VerifiedPair>> found(workers);
    parallel_for(
        blocks.size(), workers,
        [&](std::size_t i, unsigned worker) {
            const CodeBlock& a = blocks[i];
            if (!is_eligible(a, t.min_lines, t.min_tokens)) return;
            const auto collisions = locate(index, a);
            for (const CandidatePair& cand : filter(a, collisions, blocks, t)) {
                const auto b = cand.candidate_block;
                VerifiedPair pair = verify_hashes(a.block_id, hashes[i], b, hashes[b], t, opts.scan);
                if (pair.accepted) found[worker].push_back(pair);
            }
        },
        8);

    std::vector<VerifiedPair> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](const VerifiedPair& x, const VerifiedPair& y) {
        return x.block_a != y.block_a ? x.block_a < y.block_a : x.block_b < y.block_b;
    });
    return all;
}

}  // namespace lvmap
