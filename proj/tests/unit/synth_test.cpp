#include "lvmap/synth.hpp"

#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "gen.hpp"

namespace lvmap {
namespace {

using testing::Rng;

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool is_subsequence(const std::vector<std::string>& small, const std::vector<std::string>& big) {
    std::size_t i = 0;
    for (const auto& line : big) {
        if (i < small.size() && line == small[i]) ++i;
    }
    return i == small.size();
}

const Corpus& sample_corpus() {
    static const Corpus corpus = load_corpus({LVMAP_SAMPLE_DIR}, {});
    return corpus;
}

std::vector<DonorLine> some_donors() {
    return {{"int q = 1;", 99}, {"count += 2;", 99}, {"log(\"x\");", 99}};
}

std::string twenty_line_function() {
    std::string src = "int f(int a, int b) {\n";
    for (int i = 0; i < 18; ++i) src += "    a = a + b * " + std::to_string(i) + ";\n";
    src += "}\n";
    return src;
}

TEST(InsertionGaps, StatementBoundariesInsideTheBody) {
    const std::string src =
        "int f(int a) {\n"
        "    int b = a +\n"
        "        1;\n"
        "    /* c\n"
        "       d */ g(b);\n"
        "    return b;\n"
        "}\n";
    EXPECT_EQ(insertion_gaps(src, Language::C), (std::vector<std::size_t>{0, 2, 4, 5}));
}

TEST(InsertionGaps, OpenBlockCommentIsNotAGap) {
    const std::string src = "void f() {\n  x(); /* open\n  */ y();\n}\n";
    EXPECT_EQ(insertion_gaps(src, Language::Java), (std::vector<std::size_t>{0, 2}));
}

TEST(InsertionGaps, NoBodyNoGaps) {
    EXPECT_TRUE(insertion_gaps("int x;\n", Language::C).empty());
    EXPECT_TRUE(insertion_gaps("void f() { g(); }\n", Language::C).empty());
}

TEST(MakeClone, ZeroInsertionsIsIdentity) {
    Rng rng(1);
    const auto src = twenty_line_function();
    EXPECT_EQ(make_clone(src, Language::C, some_donors(), 0, 0, rng), src);
}

TEST(MakeClone, TwentyLinesPlusFive) {
    const auto src = twenty_line_function();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto out = make_clone(src, Language::C, some_donors(), 5, 0, rng);
        ASSERT_TRUE(out);
        const auto lines = split(*out);
        const auto orig = split(src);
        EXPECT_EQ(lines.size(), 25u);
        EXPECT_TRUE(is_subsequence(orig, lines));
        EXPECT_EQ(lines.front(), orig.front());
        EXPECT_EQ(lines.back(), orig.back());
    }
}

TEST(MakeClone, NeverUsesDonorsOfTheExcludedBlock) {
    Rng rng(2);
    const std::vector<DonorLine> donors = {{"own();", 4}, {"other();", 5}};
    const auto out = make_clone(twenty_line_function(), Language::C, donors, 10, 4, rng);
    ASSERT_TRUE(out);
    EXPECT_EQ(out->find("own();"), std::string::npos);
    EXPECT_NE(out->find("other();"), std::string::npos);
}

TEST(MakeClone, SkipsWhenNothingFits) {
    Rng rng(3);
    EXPECT_FALSE(make_clone("void f() { g(); }\n", Language::C, some_donors(), 1, 0, rng));
    const std::vector<DonorLine> own = {{"own();", 4}};
    EXPECT_FALSE(make_clone(twenty_line_function(), Language::C, own, 1, 4, rng));
}

TEST(MakeClone, Deterministic) {
    const auto src = twenty_line_function();
    Rng r1(77), r2(77);
    EXPECT_EQ(make_clone(src, Language::C, some_donors(), 7, 0, r1), make_clone(src, Language::C, some_donors(), 7, 0, r2));
}

// Three gaps and two insertions: six multisets of gaps, equally likely.
TEST(MakeClone, PlacementIsUniformOverGapMultisets) {
    const std::string src = "void f() {\n  a();\n  b();\n}\n";
    const std::vector<DonorLine> donors = {{"x();", 1}};
    std::map<std::string, int> counts;
    Rng rng(5);
    const int trials = 12000;
    for (int i = 0; i < trials; ++i) ++counts[*make_clone(src, Language::C, donors, 2, 0, rng)];
    ASSERT_EQ(counts.size(), 6u);
    for (const auto& [text, n] : counts) EXPECT_NEAR(n, trials / 6, 200) << text;
}

TEST(CollectDonorLines, SingleBraceFreeStatements) {
    const auto donors = collect_donor_lines(sample_corpus());
    ASSERT_GT(donors.size(), 1000u);
    for (const auto& d : donors) {
        const auto tokens = lex(d.text, Language::Java);
        for (const auto& t : tokens) EXPECT_FALSE(t.kind == TokenKind::Punct && (t.text == "{" || t.text == "}")) << d.text;
        EXPECT_TRUE(d.text.ends_with(';')) << d.text;
        EXPECT_EQ(tokenize_block(d.text, Language::Java).size(), 1u) << d.text;
        EXPECT_NE(tokens.front().text, "return") << d.text;
    }
}

TEST(MakeCloneProperty, MutantsParseToExactlyOneBlock) {
    const Corpus& corpus = sample_corpus();
    ExperimentConfig cfg;
    cfg.originals = 60;
    const auto ids = select_originals(corpus, cfg);
    const auto donors = collect_donor_lines(corpus);
    std::map<std::string, const SourceFile*> files;
    for (const auto& f : corpus.files) files[f.path] = &f;
    Rng rng(9);
    for (const auto id : ids) {
        const auto& block = corpus.blocks[id];
        const auto src = block_source(*files.at(block.file), block);
        const auto original = extract_blocks({"o.java", Language::Java, src});
        ASSERT_EQ(original.blocks.size(), 1u) << src;
        EXPECT_TRUE(original.warnings.empty()) << src;
        EXPECT_EQ(original.blocks[0].lines, block.lines);
        for (std::size_t n : {1u, 7u, 20u}) {
            const auto mutant = make_clone(src, Language::Java, donors, n, id, rng);
            ASSERT_TRUE(mutant);
            const auto parsed = extract_blocks({"m.java", Language::Java, *mutant});
            ASSERT_EQ(parsed.blocks.size(), 1u) << *mutant;
            EXPECT_TRUE(parsed.warnings.empty());
            EXPECT_EQ(split(*mutant).size(), split(src).size() + n);
        }
    }
}

TEST(SelectOriginals, BalancedAcrossBucketsAndSeeded) {
    const Corpus& corpus = sample_corpus();
    ExperimentConfig cfg;
    const auto ids = select_originals(corpus, cfg);
    ASSERT_EQ(ids.size(), 200u);
    EXPECT_EQ(std::set<std::uint32_t>(ids.begin(), ids.end()).size(), ids.size());
    std::map<std::size_t, std::size_t> per_bucket;
    for (const auto id : ids) {
        const auto& b = corpus.blocks[id];
        EXPECT_TRUE(is_eligible(b, 6, 50));
        const std::size_t len = b.lines.size();
        ASSERT_GE(len, 15u);
        ASSERT_LE(len, 30u);
        per_bucket[len < 20 ? 0 : len < 25 ? 1 : 2]++;
    }
    for (const auto& [bucket, n] : per_bucket) {
        EXPECT_GE(n, 66u) << bucket;
        EXPECT_LE(n, 67u) << bucket;
    }
    EXPECT_EQ(select_originals(corpus, cfg), ids);
    cfg.seed = 1;
    EXPECT_NE(select_originals(corpus, cfg), ids);
}

TEST(SelectOriginals, ShortSupplyShrinks) {
    testing::CorpusShape shape;
    shape.files = 3;
    shape.functions_per_file = 4;
    const auto corpus = build_corpus(testing::random_corpus(4, shape), {});
    ExperimentConfig cfg;
    const auto ids = select_originals(corpus, cfg);
    EXPECT_LT(ids.size(), 200u);
}

TEST(RecallExperiment, ReproducibleAndThreadIndependent) {
    ExperimentConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 4;
    cfg.cases_per_point = 30;
    cfg.originals = 30;
    cfg.seed = 12;
    const auto a = run_recall_experiment(sample_corpus(), cfg);
    const auto b = run_recall_experiment(sample_corpus(), cfg);
    cfg.detect.threads = 4;
    const auto c = run_recall_experiment(sample_corpus(), cfg);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    ASSERT_EQ(a.size(), 4u);
    for (const auto& r : a) {
        EXPECT_EQ(r.n_cases, 30u);
        EXPECT_DOUBLE_EQ(r.recall, static_cast<double>(r.n_detected) / static_cast<double>(r.n_cases));
    }
}

TEST(RecallExperiment, PooledAgreesWithPairwiseOnSmallRuns) {
    ExperimentConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 2;
    cfg.cases_per_point = 20;
    cfg.originals = 20;
    const auto pairwise = run_recall_experiment(sample_corpus(), cfg);
    cfg.pooled = true;
    const auto pooled = run_recall_experiment(sample_corpus(), cfg);
    ASSERT_EQ(pooled.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        // other pairs in the pool never change one pair's votes or its scan
        EXPECT_EQ(pooled[i], pairwise[i]);
    }
}

TEST(RecallExperiment, FixedPairOrdersBracketTheRandomOne) {
    ExperimentConfig cfg;
    cfg.n_min = 20;
    cfg.n_max = 20;
    cfg.order = PairOrder::OriginalFirst;
    const auto orig_first = run_recall_experiment(sample_corpus(), cfg);
    cfg.order = PairOrder::MutantFirst;
    const auto mut_first = run_recall_experiment(sample_corpus(), cfg);
    cfg.order = PairOrder::Random;
    const auto random = run_recall_experiment(sample_corpus(), cfg);
    // mutant-first puts the threshold on the smaller original
    EXPECT_GT(mut_first[0].recall, orig_first[0].recall);
    EXPECT_GE(random[0].recall, orig_first[0].recall - 0.05);
    EXPECT_LE(random[0].recall, mut_first[0].recall + 0.05);
}

TEST(RecallExperiment, WeaklyMonotoneInInsertCount) {
    const auto results = run_recall_experiment(sample_corpus(), ExperimentConfig{});
    ASSERT_EQ(results.size(), 20u);
    for (std::size_t i = 1; i < results.size(); ++i) {
        EXPECT_LE(results[i].recall, results[i - 1].recall + 0.05) << "n=" << results[i].n_insert;
    }
}

// Re-inserting the original's own statements keeps every original line in
// the mutant. Up to 10 insertions that is always detected; at 20, scattered
// copies still break most 3-line windows and some pairs fail the filter.
TEST(RecallExperiment, DonorsFromTheOriginalItself) {
    const Corpus& corpus = sample_corpus();
    ExperimentConfig cfg;
    cfg.originals = 60;
    const auto ids = select_originals(corpus, cfg);
    std::map<std::string, const SourceFile*> files;
    for (const auto& f : corpus.files) files[f.path] = &f;
    const auto all_donors = collect_donor_lines(corpus);

    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_n;  // n -> (cases, detected)
    Rng rng(31);
    const Thresholds t;
    for (const auto id : ids) {
        const auto& block = corpus.blocks[id];
        std::vector<DonorLine> own;
        for (const auto& d : all_donors) {
            if (d.block_id == id) own.push_back({d.text, UINT32_MAX});
        }
        if (own.empty()) continue;
        const auto src = block_source(*files.at(block.file), block);
        for (std::size_t n : {1u, 10u, 20u}) {
            const auto mutant = make_clone(src, Language::Java, own, n, id, rng);
            ASSERT_TRUE(mutant);
            const auto pair = build_corpus({{"a.java", Language::Java, src}, {"b.java", Language::Java, *mutant}}, {});
            ASSERT_EQ(pair.blocks.size(), 2u);
            const auto index = SeedIndex::build(pair.blocks, t.k, t.min_lines, t.min_tokens);
            const bool found = detect_all(pair.blocks, index, t).size() == 1;
            auto& [cases, detected] = by_n[n];
            ++cases;
            detected += found ? 1 : 0;
            if (!found) {
                EXPECT_EQ(n, 20u);
                const auto hits = locate(index, pair.blocks[0]);
                EXPECT_TRUE(filter(pair.blocks[0], hits, pair.blocks, t).empty());
            }
        }
    }
    ASSERT_GT(by_n[1].first, 50u);
    EXPECT_EQ(by_n[1].second, by_n[1].first);
    EXPECT_EQ(by_n[10].second, by_n[10].first);
    EXPECT_GE(by_n[20].second * 10, by_n[20].first * 8);
}

TEST(FormatRecallTsv, HeaderAndRows) {
    const std::vector<TrialResult> rows = {{1, 200, 199, 0.995}, {2, 198, 150, 150.0 / 198.0}};
    EXPECT_EQ(format_recall_tsv(rows, 42),
              "# seed=42\nn_insert\tn_cases\tn_detected\trecall\n1\t200\t199\t0.9950\n2\t198\t150\t0.7576\n");
}

}  // namespace
}  // namespace lvmap
