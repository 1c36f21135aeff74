#include "lvmap/detect.hpp"

#include <set>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lvmap/corpus.hpp"
#include "oracles.hpp"

namespace lvmap {
namespace {

using testing::Rng;

std::vector<std::uint64_t> seq(std::string_view letters) {
    std::vector<std::uint64_t> out;
    for (const char c : letters) out.push_back(static_cast<std::uint64_t>(c));
    return out;
}

std::vector<std::string> letters_as_lines(std::string_view letters) {
    std::vector<std::string> out;
    for (const char c : letters) out.push_back(std::string(1, c) + ";");
    return out;
}

std::vector<VerifiedPair> run_detect(const std::vector<CodeBlock>& blocks, const Thresholds& t = {}, unsigned threads = 1) {
    const auto index = SeedIndex::build(blocks, t.k, t.min_lines, t.min_tokens, threads);
    DetectOptions opts;
    opts.threads = threads;
    return detect_all(blocks, index, t, opts);
}

TEST(Theta, ReferencePoints) {
    EXPECT_NEAR(theta(6), 0.5, 1e-12);
    EXPECT_NEAR(theta(8), 0.3, 1e-12);
    EXPECT_NEAR(theta(10), 0.1, 1e-12);
    EXPECT_NEAR(theta(7), 0.4, 1e-12);
    EXPECT_NEAR(theta(9), 0.2, 1e-12);
    EXPECT_EQ(theta(11), 0.1);
    EXPECT_EQ(theta(5000), 0.1);
}

TEST(Theta, InterpolationConstantsFromEndpoints) {
    const Thresholds t;
    EXPECT_NEAR(t.theta_slope(), -0.1, 1e-15);
    EXPECT_NEAR(t.theta_intercept(), 1.1, 1e-15);
    // substitution back into both endpoints
    EXPECT_NEAR(t.theta_slope() * 6 + t.theta_intercept(), 0.5, 1e-12);
    EXPECT_NEAR(t.theta_slope() * 10 + t.theta_intercept(), 0.1, 1e-12);
}

TEST(Delta, ReferencePoints) {
    EXPECT_EQ(delta(8), 0.55);
    EXPECT_EQ(delta(16), 0.4);
    EXPECT_EQ(delta(40), 0.3);
    EXPECT_EQ(delta(6), 0.55);
    EXPECT_EQ(delta(10), 0.55);
    EXPECT_NEAR(delta(11), 0.525, 1e-15);
    EXPECT_EQ(delta(20), 0.3);
    EXPECT_EQ(delta(21), 0.3);
}

TEST(Thresholds, ContinuousAndNonIncreasing) {
    const Thresholds t;
    EXPECT_NEAR(theta(10, t), t.theta_slope() * 10 + t.theta_intercept(), 1e-12);
    EXPECT_NEAR(theta(10, t), theta(11, t), 1e-12);
    EXPECT_EQ(delta(20, t), delta(21, t));
    for (std::size_t l = 6; l < 200; ++l) {
        EXPECT_LE(theta(l + 1), theta(l) + 1e-15) << l;
        EXPECT_LE(delta(l + 1), delta(l) + 1e-15) << l;
    }
}

TEST(Thresholds, UndefinedBelowSixLines) {
    EXPECT_THROW(theta(5), std::domain_error);
    EXPECT_THROW(delta(0), std::domain_error);
}

TEST(Thresholds, OverridesMoveTheSegments) {
    Thresholds t;
    t.theta_cap = 0.2;
    t.delta_floor = 0.35;
    EXPECT_EQ(theta(12, t), 0.2);
    EXPECT_NEAR(theta(8, t), 0.35, 1e-12);
    EXPECT_EQ(delta(30, t), 0.35);
    EXPECT_EQ(delta(19, t), 0.35);  // -0.025 * 19 + 0.8 = 0.325, held at the floor
    EXPECT_NEAR(delta(17, t), 0.375, 1e-12);
}

TEST(Locate, IdenticalLaterBlockVotesOncePerWindow) {
    Rng rng(1);
    const CodeBlock a = testing::random_block(rng, 0, 10, 1u << 20);
    CodeBlock b = a;
    b.block_id = 1;
    const std::vector<CodeBlock> blocks = {a, b};
    const auto index = SeedIndex::build(blocks, 3);
    const auto hits = locate(index, blocks[0]);
    ASSERT_EQ(hits.size(), 8u);
    for (std::size_t i = 0; i < hits.size(); ++i) EXPECT_EQ(hits[i], PositionKey(1, static_cast<std::uint32_t>(i + 1)));
    // the later block never sees the earlier one
    EXPECT_TRUE(locate(index, blocks[1]).empty());
}

TEST(Locate, NoSharedWindow) {
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, letters_as_lines("abcdefg")),
                                           testing::block_from_texts(1, letters_as_lines("hijklmn"))};
    EXPECT_TRUE(locate(SeedIndex::build(blocks, 3), blocks[0]).empty());
}

TEST(Filter, TenLineCandidateWithOneVoteIsKept) {
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, letters_as_lines("abcxyzuvw")),
                                           testing::block_from_texts(1, letters_as_lines("abcdefghij"))};
    const auto index = SeedIndex::build(blocks, 3);
    const auto cands = filter(blocks[0], locate(index, blocks[0]), blocks);
    ASSERT_EQ(cands.size(), 1u);
    EXPECT_EQ(cands[0].shared_seeds, 1u);
    EXPECT_DOUBLE_EQ(cands[0].seed_ratio, 0.125);
}

TEST(Filter, SixLineCandidateWithOneVoteIsDropped) {
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, letters_as_lines("abcxyzuvw")),
                                           testing::block_from_texts(1, letters_as_lines("abcdef"))};
    const auto index = SeedIndex::build(blocks, 3);
    const auto hits = locate(index, blocks[0]);
    EXPECT_EQ(hits.size(), 1u);
    EXPECT_TRUE(filter(blocks[0], hits, blocks).empty());
}

TEST(Filter, IdenticalCandidateHasFullRatio) {
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, letters_as_lines("abcdefghij")),
                                           testing::block_from_texts(1, letters_as_lines("abcdefghij"))};
    const auto index = SeedIndex::build(blocks, 3);
    const auto cands = filter(blocks[0], locate(index, blocks[0]), blocks);
    ASSERT_EQ(cands.size(), 1u);
    EXPECT_EQ(cands[0].shared_seeds, 8u);
    EXPECT_EQ(cands[0].seed_ratio, 1.0);
}

TEST(Filter, RatioEqualToThetaIsKept) {
    // 7-line candidate: 5 windows, theta 0.4, two votes
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, letters_as_lines("abcdqrs")),
                                           testing::block_from_texts(1, letters_as_lines("abcdefg"))};
    const auto index = SeedIndex::build(blocks, 3);
    const auto cands = filter(blocks[0], locate(index, blocks[0]), blocks);
    ASSERT_EQ(cands.size(), 1u);
    EXPECT_EQ(cands[0].shared_seeds, 2u);
}

TEST(FilterProperty, MatchesBruteForceWindowCount) {
    Rng rng(43);
    const Thresholds t;
    for (int round = 0; round < 10; ++round) {
        std::vector<CodeBlock> blocks;
        for (std::uint32_t i = 0; i < 40; ++i) blocks.push_back(testing::random_block(rng, i, testing::uniform(rng, 6, 30), 4));
        const auto index = SeedIndex::build(blocks, t.k);
        for (const auto& a : blocks) {
            std::set<std::pair<std::uint32_t, std::size_t>> got;
            for (const auto& c : filter(a, locate(index, a), blocks, t)) got.insert({c.candidate_block, c.shared_seeds});
            std::set<std::pair<std::uint32_t, std::size_t>> want;
            for (const auto& b : blocks) {
                if (b.block_id <= a.block_id) continue;
                const std::size_t s = testing::brute_force_shared_windows(a, b, t.k);
                const double sr = static_cast<double>(s) / static_cast<double>(b.lines.size() - t.k + 1);
                if (s > 0 && sr + kThresholdTolerance >= theta(b.lines.size(), t)) want.insert({b.block_id, s});
            }
            EXPECT_EQ(got, want);
        }
    }
}

TEST(Verify, IdenticalBlocks) {
    Rng rng(2);
    const CodeBlock a = testing::random_block(rng, 0, 17, 5);
    CodeBlock b = a;
    b.block_id = 1;
    const auto v = verify(a, b);
    EXPECT_EQ(v.comm_lines, 17u);
    EXPECT_EQ(v.ordered_similarity, 1.0);
    EXPECT_TRUE(v.accepted);
}

TEST(Verify, RunsOfTwoAcrossInsertions) {
    const auto r = ordered_common_lines(seq("abcdef"), seq("abxcdyef"));
    EXPECT_EQ(r.comm_lines, 6u);
    EXPECT_EQ(r.runs, (std::vector<MatchRun>{{0, 0, 2}, {2, 3, 2}, {4, 6, 2}}));

    const auto v = verify(testing::block_from_texts(0, letters_as_lines("abcdef")),
                          testing::block_from_texts(1, letters_as_lines("abxcdyef")));
    EXPECT_EQ(v.comm_lines, 6u);
    EXPECT_EQ(v.ordered_similarity, 1.0);
    EXPECT_TRUE(v.accepted);
}

TEST(Verify, IsolatedSingleLinesCountForNothing) {
    EXPECT_EQ(ordered_common_lines(seq("axbycz"), seq("abcdef")).comm_lines, 0u);
    const auto v = verify(testing::block_from_texts(0, letters_as_lines("axbycz")),
                          testing::block_from_texts(1, letters_as_lines("abcdef")));
    EXPECT_EQ(v.comm_lines, 0u);
    EXPECT_EQ(v.ordered_similarity, 0.0);
    EXPECT_FALSE(v.accepted);
}

TEST(Verify, SmallerBlockDrivesTheScanRegardlessOfIds) {
    const auto big = testing::block_from_texts(0, letters_as_lines("abxcdyefgh"));
    const auto small = testing::block_from_texts(1, letters_as_lines("abcdef"));
    const auto v = verify(big, small);
    EXPECT_EQ(v.block_a, 0u);
    EXPECT_EQ(v.block_b, 1u);
    EXPECT_EQ(v.comm_lines, 6u);
    EXPECT_EQ(v.ordered_similarity, 1.0);
    EXPECT_EQ(verify(small, big), v);
}

TEST(Verify, SearchRestartsAfterLastRun) {
    // the second "ab" of small matches the second "ab" of large, not the first
    EXPECT_EQ(ordered_common_lines(seq("abxab"), seq("abab")).comm_lines, 4u);
    EXPECT_EQ(ordered_common_lines(seq("abxab"), seq("abab")).runs, (std::vector<MatchRun>{{0, 0, 2}, {3, 2, 2}}));
    // a match before lastline is not reused
    EXPECT_EQ(ordered_common_lines(seq("cdab"), seq("abcd")).comm_lines, 2u);
}

TEST(Verify, LiteralModeDoubleCountsOverlappingRuns) {
    EXPECT_EQ(ordered_common_lines(seq("abc"), seq("abc"), ScanMode::Ordered).comm_lines, 3u);
    // runs abc, bc (c alone is too short)
    EXPECT_EQ(ordered_common_lines(seq("abc"), seq("abc"), ScanMode::Literal).comm_lines, 5u);
}

TEST(VerifyProperty, MatchesReferenceScan) {
    Rng rng(47);
    for (int round = 0; round < 5000; ++round) {
        const auto small = testing::random_hashes(rng, testing::uniform(rng, 0, 30), testing::uniform(rng, 1, 6));
        const auto large = testing::random_hashes(rng, testing::uniform(rng, small.size(), 30), testing::uniform(rng, 1, 6));
        const auto r = ordered_common_lines(small, large);
        EXPECT_EQ(r.comm_lines, testing::reference_comm_lines(small, large));
        EXPECT_LE(r.comm_lines, small.size());
    }
}

TEST(VerifyProperty, RunsAreOrderedAndDisjoint) {
    Rng rng(53);
    for (int round = 0; round < 5000; ++round) {
        const auto small = testing::random_hashes(rng, testing::uniform(rng, 0, 30), 3);
        const auto large = testing::random_hashes(rng, testing::uniform(rng, small.size(), 40), 3);
        const auto r = ordered_common_lines(small, large);
        std::size_t sum = 0;
        for (std::size_t i = 0; i < r.runs.size(); ++i) {
            const auto& run = r.runs[i];
            EXPECT_GE(run.length, 2u);
            sum += run.length;
            for (std::size_t j = 0; j < run.length; ++j) EXPECT_EQ(small[run.line_small + j], large[run.line_large + j]);
            if (i > 0) {
                const auto& prev = r.runs[i - 1];
                EXPECT_GE(run.line_large, prev.line_large + prev.length);
                EXPECT_GE(run.line_small, prev.line_small + prev.length);
            }
        }
        EXPECT_EQ(sum, r.comm_lines);
    }
}

TEST(DetectAll, DuplicatedFileReportsEveryCrossCopyPair) {
    testing::CorpusShape shape;
    shape.files = 1;
    shape.functions_per_file = 6;
    shape.min_statements = 12;
    shape.clone_rate = 0.0;
    auto files = testing::random_corpus(3, shape);
    files.push_back(files[0]);
    files[1].path = "copy/" + files[1].path;
    const auto corpus = build_corpus(files, {});
    ASSERT_EQ(corpus.blocks.size(), 12u);
    const auto pairs = run_detect(corpus.blocks);
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& p : pairs) {
        if (corpus.blocks[p.block_a].file == corpus.blocks[p.block_b].file) continue;
        got.insert({p.block_a, p.block_b});
        if (corpus.blocks[p.block_a].lines == corpus.blocks[p.block_b].lines) EXPECT_EQ(p.ordered_similarity, 1.0);
    }
    for (std::uint32_t i = 0; i < 6; ++i) EXPECT_TRUE(got.count({i, i + 6})) << i;
}

TEST(DetectAll, UnrelatedBlocksGiveNothing) {
    Rng rng(5);
    std::vector<CodeBlock> blocks;
    for (std::uint32_t i = 0; i < 100; ++i) blocks.push_back(testing::random_block(rng, i, testing::uniform(rng, 6, 40), 1u << 30));
    EXPECT_TRUE(run_detect(blocks).empty());
}

TEST(DetectAll, RejectsMismatchedInputs) {
    Rng rng(6);
    std::vector<CodeBlock> blocks = {testing::random_block(rng, 0, 8, 5), testing::random_block(rng, 7, 8, 5)};
    EXPECT_THROW(run_detect(blocks), std::invalid_argument);
    blocks[1].block_id = 1;
    const auto index = SeedIndex::build(blocks, 4);
    EXPECT_THROW(detect_all(blocks, index, Thresholds{}), std::invalid_argument);
}

TEST(DetectAllProperty, SortedUniqueAndThreadIndependent) {
    testing::CorpusShape shape;
    shape.files = 40;
    const auto corpus = build_corpus(testing::random_corpus(8, shape), {});
    const auto one = run_detect(corpus.blocks, {}, 1);
    const auto many = run_detect(corpus.blocks, {}, 8);
    EXPECT_EQ(one, many);
    ASSERT_GT(one.size(), 20u);
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_LT(one[i].block_a, one[i].block_b);
        EXPECT_TRUE(one[i].accepted);
        if (i > 0) EXPECT_LT(std::pair(one[i - 1].block_a, one[i - 1].block_b), std::pair(one[i].block_a, one[i].block_b));
    }
}

TEST(DetectAllProperty, AddingUnrelatedBlocksKeepsPairs) {
    Rng rng(59);
    for (int round = 0; round < 20; ++round) {
        std::vector<CodeBlock> blocks;
        for (std::uint32_t i = 0; i < 30; ++i) blocks.push_back(testing::random_block(rng, i, testing::uniform(rng, 6, 25), 6));
        const auto before = run_detect(blocks);
        for (std::uint32_t i = 30; i < 60; ++i) blocks.push_back(testing::random_block(rng, i, testing::uniform(rng, 6, 25), 6));
        const auto after = run_detect(blocks);
        for (const auto& p : before) EXPECT_NE(std::find(after.begin(), after.end(), p), after.end());
    }
}

// Replace one line of an L-line block; for L >= 7 the pair always survives.
TEST(DetectAllProperty, OneEditRecallFromSevenLines) {
    Rng rng(61);
    for (int round = 0; round < 1500; ++round) {
        const std::size_t lines = testing::uniform(rng, 7, 40);
        const CodeBlock a = testing::random_block(rng, 0, lines, 1u << 20);
        std::vector<std::string> texts;
        for (const auto& l : a.lines) texts.push_back(l.text);
        texts[testing::uniform(rng, 0, lines - 1)] = "edited;";
        const std::vector<CodeBlock> blocks = {a, testing::block_from_texts(1, texts)};
        EXPECT_EQ(run_detect(blocks).size(), 1u) << "lines=" << lines;
    }
}

// At six lines an edit on line 3 or 4 leaves one intact window out of four:
// SR = 0.25 < theta(6) = 0.5, so the filter drops the pair.
TEST(DetectAll, SixLineBlockWithInteriorEditIsFiltered) {
    for (std::size_t at = 0; at < 6; ++at) {
        std::vector<std::string> texts = letters_as_lines("abcdef");
        const auto a = testing::block_from_texts(0, texts);
        texts[at] = "edited;";
        const std::vector<CodeBlock> blocks = {a, testing::block_from_texts(1, texts)};
        const bool interior = at == 2 || at == 3;
        EXPECT_EQ(run_detect(blocks).empty(), interior) << "edited line " << at + 1;
    }
}

}  // namespace
}  // namespace lvmap
