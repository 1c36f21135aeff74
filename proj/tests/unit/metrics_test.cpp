#include "lvmap/metrics.hpp"

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lvmap/corpus.hpp"

namespace lvmap {
namespace {

using testing::Rng;

// Exact rational test of diff_harmonic >= 3/20.
bool diff_at_least_015(std::uint64_t la, std::uint64_t lb, std::uint64_t s) {
    return 20 * (2 * la * lb - s * (la + lb)) >= 3 * (2 * la * lb);
}

TEST(ScoreCounts, HalfContainedBlock) {
    for (std::size_t m : {6u, 7u, 10u, 33u, 1000u}) {
        const auto p = score_counts(m, 2 * m, m, false);
        EXPECT_EQ(p.sim_a_given_b, 1.0);
        EXPECT_EQ(p.sim_b_given_a, 0.5);
        EXPECT_EQ(p.sim_harmonic, 0.75);
        EXPECT_EQ(p.diff_harmonic, 0.25);
        EXPECT_TRUE(p.flags.large_variance);
        EXPECT_TRUE(p.flags.large_gap);
    }
}

TEST(ScoreCounts, IdenticalBlocks) {
    const auto p = score_counts(12, 12, 12, true);
    EXPECT_EQ(p.sim_harmonic, 1.0);
    EXPECT_EQ(p.sim_a_given_b, 1.0);
    EXPECT_EQ(p.sim_b_given_a, 1.0);
    EXPECT_EQ(p.diff_harmonic, 0.0);
    EXPECT_EQ(p.diff_a_given_b, 0.0);
    EXPECT_EQ(p.diff_b_given_a, 0.0);
    EXPECT_TRUE(p.flags.type12);
    EXPECT_FALSE(p.flags.type3);
    EXPECT_FALSE(p.flags.large_variance);
    EXPECT_FALSE(p.flags.large_gap);
}

TEST(ScoreCounts, SevenOfTenIsLargeGapButNotLargeVariance) {
    const auto p = score_counts(7, 10, 7, false);
    EXPECT_TRUE(p.flags.large_gap);
    EXPECT_NEAR(p.sim_harmonic, 0.85, 1e-15);
    EXPECT_NEAR(p.diff_harmonic, 0.15, 1e-15);
    EXPECT_FALSE(p.flags.large_variance);
    EXPECT_TRUE(p.flags.type3);
}

TEST(ScoreCounts, JustOverTheLargeVarianceBoundary) {
    // 20 vs 20 with 16 shared: diff 0.2; with 17 shared: diff 0.15 exactly
    EXPECT_TRUE(score_counts(20, 20, 16, false).flags.large_variance);
    EXPECT_FALSE(score_counts(20, 20, 17, false).flags.large_variance);
    EXPECT_FALSE(score_counts(20, 20, 18, false).flags.large_variance);
}

TEST(ScoreCountsProperty, Invariants) {
    Rng rng(67);
    for (int i = 0; i < 100000; ++i) {
        const std::size_t la = testing::uniform(rng, 1, 300);
        const std::size_t lb = testing::uniform(rng, la, 600);
        const std::size_t s = testing::uniform(rng, 0, la);
        const bool identical = la == lb && s == la && testing::uniform(rng, 0, 1) == 1;
        const auto p = score_counts(la, lb, s, identical);
        EXPECT_EQ(p.diff_harmonic, 1.0 - p.sim_harmonic);
        EXPECT_EQ(p.diff_a_given_b, 1.0 - p.sim_a_given_b);
        EXPECT_EQ(p.diff_b_given_a, 1.0 - p.sim_b_given_a);
        EXPECT_EQ(p.sim_harmonic, (p.sim_a_given_b + p.sim_b_given_a) / 2);
        EXPECT_LE(0.0, p.sim_b_given_a);
        EXPECT_LE(p.sim_b_given_a, p.sim_a_given_b);
        EXPECT_LE(p.sim_a_given_b, 1.0);
        if (p.flags.type12) {
            EXPECT_EQ(p.diff_harmonic, 0.0);
            EXPECT_FALSE(p.flags.large_variance);
        }
        EXPECT_NE(p.flags.type12, p.flags.type3);
        if (p.flags.large_gap) {
            EXPECT_TRUE(diff_at_least_015(la, lb, s)) << la << " " << lb << " " << s;
            EXPECT_GE(p.diff_harmonic, 0.15 - 1e-12);
        }
        // flags depend only on the counts
        EXPECT_EQ(score_counts(la, lb, s, identical).flags, p.flags);
        const bool lv = 20 * (2 * la * lb - s * (la + lb)) > 3 * (2 * la * lb);
        EXPECT_EQ(p.flags.large_variance, lv);
    }
}

TEST(ScorePair, UsesVerifiedCountsAndBlockSizes) {
    const auto a = testing::block_from_texts(0, {"a;", "b;", "c;", "d;", "e;", "f;"});
    const auto b = testing::block_from_texts(1, {"a;", "b;", "x;", "c;", "d;", "y;", "e;", "f;", "z;", "w;", "v;", "u;"});
    const std::vector<CodeBlock> blocks = {a, b};
    const VerifiedPair v{0, 1, 6, 1.0, true};
    const auto p = score_pair(v, blocks);
    EXPECT_EQ(p.block_a, 0u);
    EXPECT_EQ(p.block_b, 1u);
    EXPECT_EQ(p.lines_a, 6u);
    EXPECT_EQ(p.lines_b, 12u);
    EXPECT_EQ(p.sim_harmonic, 0.75);
    EXPECT_EQ(p.ordered_similarity, 1.0);
    EXPECT_TRUE(p.flags.type3);
}

TEST(ScorePair, UnorderedSharedLinesCountMultiplicity) {
    const auto a = testing::block_from_texts(0, {"a;", "a;", "b;", "c;", "d;", "e;"});
    const auto b = testing::block_from_texts(1, {"e;", "d;", "a;", "c;", "b;", "q;"});
    EXPECT_EQ(unordered_shared_lines(a, b), 5u);
    const std::vector<CodeBlock> blocks = {a, b};
    const VerifiedPair v{0, 1, 0, 0.0, true};
    EXPECT_EQ(score_pair(v, blocks, SharedLines::Unordered).shared_lines, 5u);
    EXPECT_EQ(score_pair(v, blocks, SharedLines::Ordered).shared_lines, 0u);
}

TEST(Summarize, Empty) {
    const auto s = summarize({});
    EXPECT_EQ(s.all, 0u);
    EXPECT_EQ(s.type12, 0u);
    EXPECT_EQ(s.type3, 0u);
    EXPECT_EQ(s.large_variance, 0u);
    EXPECT_EQ(s.lv_ratio(), 0.0);
}

TEST(Summarize, MixedPairs) {
    const std::vector<ClonePair> pairs = {score_counts(10, 10, 10, true), score_counts(10, 10, 9, false),
                                          score_counts(10, 20, 10, false)};
    const auto s = summarize(pairs);
    EXPECT_EQ(s.all, 3u);
    EXPECT_EQ(s.type12, 1u);
    EXPECT_EQ(s.type3, 2u);
    EXPECT_EQ(s.large_variance, 1u);
    EXPECT_EQ(s.large_gap, 1u);
    EXPECT_NEAR(s.lv_ratio(), 1.0 / 3.0, 1e-15);
}

TEST(Summarize, DuplicatedFileCorpusHasNoLargeVariance) {
    testing::CorpusShape shape;
    shape.files = 1;
    shape.functions_per_file = 10;
    shape.min_statements = 10;
    shape.clone_rate = 0.0;
    auto files = testing::random_corpus(21, shape);
    files.push_back(files[0]);
    files[1].path = "dup/" + files[1].path;
    const auto corpus = build_corpus(files, {});
    const Thresholds t;
    const auto index = SeedIndex::build(corpus.blocks, t.k, t.min_lines, t.min_tokens);
    std::vector<ClonePair> scored;
    for (const auto& v : detect_all(corpus.blocks, index, t)) scored.push_back(score_pair(v, corpus.blocks));
    const auto s = summarize(scored);
    EXPECT_EQ(s.all, 10u);
    EXPECT_EQ(s.type12, 10u);
    EXPECT_EQ(s.large_variance, 0u);
}

// Line layout of a two-version clone pair with scattered edits: the newer
// version keeps its lines 1-2, 6, 8-10, 18-20, 27-28 from the older one's
// 1-2, 7, 9-11, 13-15, 18-19, rewrites five lines and adds the rest.
std::pair<std::vector<std::string>, std::vector<std::string>> two_version_pair() {
    std::vector<std::string> older;
    for (int i = 1; i <= 19; ++i) older.push_back("old" + std::to_string(i) + ";");
    std::vector<std::string> newer;
    for (int i = 1; i <= 28; ++i) newer.push_back("new" + std::to_string(i) + ";");
    const std::vector<std::pair<int, int>> kept = {{1, 1}, {2, 2}, {6, 7}, {8, 9}, {9, 10}, {10, 11},
                                                   {18, 13}, {19, 14}, {20, 15}, {27, 18}, {28, 19}};
    for (const auto& [n, o] : kept) newer[n - 1] = older[o - 1];
    return {older, newer};
}

TEST(DetectAndScore, TwoVersionPairIsLargeVarianceWhenOlderIsTheCandidate) {
    const auto [older, newer] = two_version_pair();
    Thresholds t;
    t.min_tokens = 0;
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, newer), testing::block_from_texts(1, older)};
    const auto index = SeedIndex::build(blocks, t.k);
    const auto found = detect_all(blocks, index, t);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].comm_lines, 10u);
    const auto p = score_pair(found[0], blocks);
    EXPECT_TRUE(p.flags.large_variance);
    EXPECT_TRUE(p.flags.large_gap);
    EXPECT_TRUE(p.flags.type3);
}

// Two shared windows out of the newer block's 26 stay under theta = 0.1,
// and the filter only looks at the candidate side.
TEST(DetectAndScore, TwoVersionPairIsFilteredWhenNewerIsTheCandidate) {
    const auto [older, newer] = two_version_pair();
    Thresholds t;
    t.min_tokens = 0;
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, older), testing::block_from_texts(1, newer)};
    const auto index = SeedIndex::build(blocks, t.k);
    EXPECT_TRUE(detect_all(blocks, index, t).empty());
    const auto hits = locate(index, blocks[0]);
    EXPECT_EQ(hits.size(), 2u);
}

}  // namespace
}  // namespace lvmap
