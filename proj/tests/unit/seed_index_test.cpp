#include "lvmap/seed_index.hpp"

#include <set>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lvmap/hash.hpp"

namespace lvmap {
namespace {

using testing::Rng;

std::vector<CodeBlock> random_blocks(Rng& rng, std::size_t n, std::size_t min_lines, std::size_t max_lines,
                                     std::size_t alphabet) {
    std::vector<CodeBlock> blocks;
    for (std::uint32_t i = 0; i < n; ++i) {
        blocks.push_back(testing::random_block(rng, i, testing::uniform(rng, min_lines, max_lines), alphabet));
    }
    return blocks;
}

TEST(PositionKey, PackLayout) {
    const PositionKey key(2, 7);
    EXPECT_EQ(key.packed(), (std::uint64_t{2} << 32) | 7u);
    EXPECT_EQ(key.block(), 2u);
    EXPECT_EQ(key.line(), 7u);
}

TEST(PositionKeyProperty, UnpackInvertsPackAndOrderIsBlockThenLine) {
    Rng rng(3);
    std::uniform_int_distribution<std::uint32_t> any;
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t b1 = any(rng), l1 = any(rng), b2 = any(rng), l2 = any(rng);
        const PositionKey k1(b1, l1), k2(b2, l2);
        EXPECT_EQ(k1.block(), b1);
        EXPECT_EQ(k1.line(), l1);
        EXPECT_EQ(PositionKey::from_packed(k1.packed()), k1);
        EXPECT_EQ(k1 < k2, std::pair(b1, l1) < std::pair(b2, l2));
        EXPECT_EQ(k1 < k2, k1.packed() < k2.packed());
    }
    const PositionKey top(UINT32_MAX, UINT32_MAX);
    EXPECT_EQ(top.block(), UINT32_MAX);
    EXPECT_EQ(top.line(), UINT32_MAX);
}

TEST(BlockSeeds, WindowIsHashOfConcatenatedTexts) {
    const auto block = testing::block_from_texts(0, {"a;", "b;", "c;", "d;"});
    const auto seeds = block_seeds(block, 3);
    ASSERT_EQ(seeds.size(), 2u);
    EXPECT_EQ(seeds[0], hash64("a;b;c;"));
    EXPECT_EQ(seeds[1], hash64("b;c;d;"));
    EXPECT_EQ(window_seed(block.lines, 1, 3), seeds[1]);
    EXPECT_TRUE(block_seeds(block, 5).empty());
}

TEST(SeedIndex, TenLinesGiveEightSeeds) {
    Rng rng(1);
    const std::vector<CodeBlock> blocks = {testing::random_block(rng, 0, 10, 1000)};
    const auto index = SeedIndex::build(blocks, 3);
    EXPECT_EQ(index.stats().total_postings, 8u);
    EXPECT_EQ(block_seeds(blocks[0], 3).size(), 8u);
}

TEST(SeedIndex, IdenticalBlocksShareEveryPosting) {
    const std::vector<std::string> texts = {"a;", "b;", "c;", "d;", "e;", "f;"};
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, texts), testing::block_from_texts(1, texts)};
    const auto index = SeedIndex::build(blocks, 3);
    std::size_t lists = 0;
    index.for_each([&](Seed, std::span<const PositionKey> postings) {
        ++lists;
        ASSERT_EQ(postings.size(), 2u);
        EXPECT_EQ(postings[0].block(), 0u);
        EXPECT_EQ(postings[1].block(), 1u);
        EXPECT_EQ(postings[0].line(), postings[1].line());
    });
    EXPECT_EQ(lists, 4u);
}

TEST(SeedIndex, EmptyCorpus) {
    const auto index = SeedIndex::build(std::span<const CodeBlock>{}, 3);
    EXPECT_EQ(index.stats().distinct_seeds, 0u);
    EXPECT_EQ(index.stats().total_postings, 0u);
    EXPECT_EQ(index.n_blocks(), 0u);
    EXPECT_TRUE(index.lookup(hash64("a;b;c;")).empty());
}

TEST(SeedIndex, LookupIsAscendingAcrossBlocks) {
    std::vector<CodeBlock> blocks;
    for (std::uint32_t i = 0; i < 9; ++i) blocks.push_back(testing::block_from_texts(i, {"u" + std::to_string(i) + ";"}));
    const std::vector<std::string> shared = {"x;", "y;", "z;"};
    blocks[7] = testing::block_from_texts(7, shared);
    blocks[2] = testing::block_from_texts(2, shared);
    const auto index = SeedIndex::build(blocks, 3);
    const auto hits = index.lookup(hash64("x;y;z;"));
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_EQ(hits[0], PositionKey(2, 1));
    EXPECT_EQ(hits[1], PositionKey(7, 1));
    EXPECT_TRUE(index.lookup(hash64("absent")).empty());
}

TEST(SeedIndex, ShortBlocksContributeNothingAndZeroKThrows) {
    const std::vector<CodeBlock> blocks = {testing::block_from_texts(0, {"a;", "b;"})};
    EXPECT_EQ(SeedIndex::build(blocks, 3).stats().total_postings, 0u);
    EXPECT_THROW(SeedIndex::build(blocks, 0), std::invalid_argument);
}

TEST(SeedIndex, SizeLimitsSkipIneligibleBlocks) {
    Rng rng(2);
    std::vector<CodeBlock> blocks = {testing::random_block(rng, 0, 10, 50), testing::random_block(rng, 1, 5, 50),
                                     testing::random_block(rng, 2, 8, 50)};
    blocks[2].token_count = 10;
    const auto index = SeedIndex::build(blocks, 3, 6, 50);
    EXPECT_EQ(index.n_blocks(), 1u);
    EXPECT_EQ(index.stats().total_postings, 8u);
    index.for_each([](Seed, std::span<const PositionKey> postings) {
        for (const auto& p : postings) EXPECT_EQ(p.block(), 0u);
    });
}

TEST(SeedIndexProperty, CountingOracle) {
    Rng rng(19);
    for (int round = 0; round < 50; ++round) {
        const std::size_t k = testing::uniform(rng, 2, 5);
        const auto blocks = random_blocks(rng, 20, 1, 40, testing::uniform(rng, 2, 30));
        const auto index = SeedIndex::build(blocks, k);
        std::size_t expected = 0;
        for (const auto& b : blocks) expected += b.lines.size() >= k ? b.lines.size() - k + 1 : 0;
        EXPECT_EQ(index.stats().total_postings, expected);

        std::size_t summed = 0;
        index.for_each([&](Seed, std::span<const PositionKey> postings) {
            summed += postings.size();
            EXPECT_TRUE(std::is_sorted(postings.begin(), postings.end()));
        });
        EXPECT_EQ(summed, expected);
    }
}

TEST(SeedIndexProperty, EveryWindowIsRetrievable) {
    Rng rng(29);
    const auto blocks = random_blocks(rng, 40, 3, 30, 8);
    const auto index = SeedIndex::build(blocks, 3, 4);
    for (const auto& b : blocks) {
        const auto seeds = block_seeds(b, 3);
        for (std::size_t w = 0; w < seeds.size(); ++w) {
            const auto hits = index.lookup(seeds[w]);
            const PositionKey want(b.block_id, static_cast<std::uint32_t>(w + 1));
            EXPECT_EQ(std::count(hits.begin(), hits.end(), want), 1);
        }
    }
}

TEST(SeedIndexProperty, LookupsDoNotChangeTheIndex) {
    Rng rng(31);
    const auto blocks = random_blocks(rng, 30, 6, 20, 5);
    const auto index = SeedIndex::build(blocks, 3);
    std::vector<Seed> probes;
    for (const auto& b : blocks) {
        for (const Seed s : block_seeds(b, 3)) probes.push_back(s);
    }
    std::vector<std::vector<PositionKey>> first;
    for (const Seed s : probes) {
        const auto hits = index.lookup(s);
        first.emplace_back(hits.begin(), hits.end());
    }
    std::shuffle(probes.begin(), probes.end(), rng);
    for (const Seed s : probes) (void)index.lookup(s);
    for (Seed s = 0; s < 1000; ++s) (void)index.lookup(s);
    std::size_t i = 0;
    for (const auto& b : blocks) {
        for (const Seed s : block_seeds(b, 3)) {
            const auto hits = index.lookup(s);
            EXPECT_EQ(std::vector<PositionKey>(hits.begin(), hits.end()), first[i++]);
        }
    }
}

TEST(SeedIndexProperty, ThreadCountDoesNotMatter) {
    Rng rng(37);
    const auto blocks = random_blocks(rng, 200, 1, 40, 10);
    const auto one = SeedIndex::build(blocks, 3, 1);
    const auto many = SeedIndex::build(blocks, 3, 8);
    for (const auto& b : blocks) {
        for (const Seed s : block_seeds(b, 3)) {
            const auto x = one.lookup(s);
            const auto y = many.lookup(s);
            EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
        }
    }
}

// One changed line spoils at most k windows, so a block of at least 2k
// lines keeps one window intact.
TEST(SeedIndexProperty, PigeonholeCoverage) {
    Rng rng(41);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t k = testing::uniform(rng, 2, 5);
        const CodeBlock a = testing::random_block(rng, 0, testing::uniform(rng, 2 * k, 40), 1u << 20);
        std::vector<std::string> texts;
        for (const auto& l : a.lines) texts.push_back(l.text);
        texts[testing::uniform(rng, 0, texts.size() - 1)] = "changed;";
        const CodeBlock b = testing::block_from_texts(1, texts);
        const std::vector<CodeBlock> blocks = {a, b};
        const auto index = SeedIndex::build(blocks, k);
        bool shared = false;
        for (const Seed s : block_seeds(a, k)) {
            for (const auto& p : index.lookup(s)) shared = shared || p.block() == 1;
        }
        EXPECT_TRUE(shared) << "k=" << k << " lines=" << a.lines.size();
    }
}

}  // namespace
}  // namespace lvmap
