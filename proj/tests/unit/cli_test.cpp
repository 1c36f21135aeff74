#include "lvmap/cli.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lvmap/corpus.hpp"
#include "lvmap/report.hpp"

namespace lvmap {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lvmap");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split_commas(const std::string& row) {
    std::vector<std::string> out;
    std::istringstream in(row);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override { setenv("LVMAP_LOG", "error", 1); }

    // A generated Java/C tree under tmp/proj.
    fs::path make_tree(std::size_t files, std::uint64_t seed = 1) {
        testing::CorpusShape shape;
        shape.files = files;
        testing::write_files(tmp.path(), testing::random_corpus(seed, shape));
        return tmp.path() / "proj";
    }

    std::string out(const std::string& name) const { return (tmp.path() / name).string(); }

    TempDir tmp;
};

TEST_F(CliTest, DuplicatedFileGivesEachCrossCopyPairOnce) {
    testing::CorpusShape shape;
    shape.files = 1;
    shape.functions_per_file = 5;
    shape.min_statements = 10;
    shape.clone_rate = 0.0;
    auto files = testing::random_corpus(2, shape);
    files.push_back(files[0]);
    files[0].path = "dup/one/Unit.java";
    files[1].path = "dup/two/Unit.java";
    testing::write_files(tmp.path(), files);
    ASSERT_EQ(run_cli({"detect", (tmp.path() / "dup").string(), "--out", out("pairs.csv")}), 0);
    const auto rows = lines_of(testing::read_file(out("pairs.csv")));
    std::set<std::string> seen;
    std::size_t cross = 0;
    for (const auto& row : rows) {
        EXPECT_TRUE(seen.insert(row).second) << row;
        const auto cells = split_commas(row);
        ASSERT_EQ(cells.size(), 8u);
        if (cells[0] != cells[4]) {
            ++cross;
            EXPECT_EQ(cells[2], cells[6]);
            EXPECT_EQ(cells[3], cells[7]);
        }
    }
    EXPECT_EQ(cross, 5u);
}

TEST_F(CliTest, UnreadablePathExitsTwo) {
    EXPECT_EQ(run_cli({"detect", (tmp.path() / "missing").string(), "--out", out("x.csv")}), cli::kExitUsage);
    EXPECT_EQ(run_cli({"synth", (tmp.path() / "missing").string(), "--out", out("x.tsv")}), cli::kExitUsage);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    const auto root = make_tree(2);
    EXPECT_EQ(run_cli({"detect", root.string(), "--min-lines", "5"}), cli::kExitUsage);
    EXPECT_EQ(run_cli({"detect", root.string(), "--k", "7"}), cli::kExitUsage);
    EXPECT_EQ(run_cli({"detect", root.string(), "--format", "xml"}), cli::kExitUsage);
    EXPECT_EQ(run_cli({"synth", root.string(), "--insert-range", "5"}), cli::kExitUsage);
    EXPECT_EQ(run_cli({"synth", root.string(), "--insert-range", "4..2"}), cli::kExitUsage);
    EXPECT_EQ(run_cli({}), cli::kExitUsage);
}

TEST_F(CliTest, NoEligibleBlocksIsNotAnError) {
    testing::write_files(tmp.path(), {{"tiny/a.c", Language::C, "int f(void) { return 1; }\n"}});
    ASSERT_EQ(run_cli({"detect", (tmp.path() / "tiny").string(), "--out", out("p.csv")}), 0);
    EXPECT_EQ(testing::read_file(out("p.csv")), "");
    ASSERT_EQ(run_cli({"detect", (tmp.path() / "tiny").string(), "--format", "summary", "--out", out("s.tsv")}), 0);
    EXPECT_EQ(testing::read_file(out("s.tsv")), "type12\ttype3\tall\tlv\tlv_ratio\tlarge_gap\n0\t0\t0\t0\t0.0000\t0\n");
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRunsAndThreads) {
    const auto root = make_tree(30);
    ASSERT_EQ(run_cli({"detect", root.string(), "--threads", "1", "--out", out("a.csv")}), 0);
    ASSERT_EQ(run_cli({"detect", root.string(), "--threads", "8", "--out", out("b.csv")}), 0);
    ASSERT_EQ(run_cli({"detect", root.string(), "--threads", "3", "--out", out("c.csv")}), 0);
    const auto a = testing::read_file(out("a.csv"));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, testing::read_file(out("b.csv")));
    EXPECT_EQ(a, testing::read_file(out("c.csv")));
}

TEST_F(CliTest, EveryRowReferencesRealSpans) {
    const auto root = make_tree(30);
    ASSERT_EQ(run_cli({"detect", root.string(), "--out", out("p.csv")}), 0);
    const auto rows = lines_of(testing::read_file(out("p.csv")));
    ASSERT_FALSE(rows.empty());
    const auto corpus = load_corpus({root}, {});
    std::set<std::tuple<std::string, std::uint32_t, std::uint32_t>> spans;
    for (const auto& b : corpus.blocks) spans.insert({b.file, b.span.start_line, b.span.end_line});
    for (const auto& row : rows) {
        const auto c = split_commas(row);
        ASSERT_EQ(c.size(), 8u);
        for (int side = 0; side < 2; ++side) {
            const auto& dir = c[side * 4];
            const auto& file = c[side * 4 + 1];
            const auto start = static_cast<std::uint32_t>(std::stoul(c[side * 4 + 2]));
            const auto end = static_cast<std::uint32_t>(std::stoul(c[side * 4 + 3]));
            const fs::path on_disk = tmp.path() / dir / file;
            ASSERT_TRUE(fs::exists(on_disk)) << on_disk;
            const auto n_lines = lines_of(testing::read_file(on_disk)).size();
            EXPECT_LE(start, end);
            EXPECT_LE(end, n_lines);
            EXPECT_TRUE(spans.count({dir + "/" + file, start, end})) << row;
        }
    }
}

TEST_F(CliTest, MinLinesDropsSmallerBlocks) {
    const auto root = make_tree(30);
    ASSERT_EQ(run_cli({"detect", root.string(), "--min-lines", "10", "--out", out("p.csv")}), 0);
    const auto corpus = load_corpus({root}, {});
    std::map<std::pair<std::string, std::uint32_t>, std::size_t> size_of;
    for (const auto& b : corpus.blocks) size_of[{b.file, b.span.start_line}] = b.lines.size();
    const auto rows = lines_of(testing::read_file(out("p.csv")));
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
        const auto c = split_commas(row);
        EXPECT_GE((size_of[{c[0] + "/" + c[1], std::stoul(c[2])}]), 10u);
        EXPECT_GE((size_of[{c[4] + "/" + c[5], std::stoul(c[6])}]), 10u);
    }
}

TEST_F(CliTest, LongerSeedsReportFewerPairs) {
    const auto root = make_tree(60, 4);
    ASSERT_EQ(run_cli({"detect", root.string(), "--k", "3", "--out", out("k3.csv")}), 0);
    ASSERT_EQ(run_cli({"detect", root.string(), "--k", "4", "--out", out("k4.csv")}), 0);
    const auto k3 = lines_of(testing::read_file(out("k3.csv"))).size();
    const auto k4 = lines_of(testing::read_file(out("k4.csv"))).size();
    EXPECT_LT(k4, k3);
}

TEST_F(CliTest, FormatsAndSummaryFile) {
    const auto root = make_tree(10);
    ASSERT_EQ(run_cli({"detect", root.string(), "--format", "pairs-ext", "--out", out("e.csv"), "--summary",
                       out("s.tsv")}),
              0);
    const auto ext = lines_of(testing::read_file(out("e.csv")));
    ASSERT_FALSE(ext.empty());
    for (const auto& row : ext) EXPECT_EQ(split_commas(row).size(), 12u) << row;
    const auto summary = lines_of(testing::read_file(out("s.tsv")));
    ASSERT_EQ(summary.size(), 2u);
    EXPECT_EQ(summary[0], "type12\ttype3\tall\tlv\tlv_ratio\tlarge_gap");
    std::istringstream cells(summary[1]);
    std::size_t type12 = 0, type3 = 0, all = 0;
    cells >> type12 >> type3 >> all;
    EXPECT_EQ(all, ext.size());
    EXPECT_EQ(type12 + type3, all);

    ASSERT_EQ(run_cli({"detect", root.string(), "--format", "blocks-tsv", "--out", out("b.tsv")}), 0);
    const auto blocks = lines_of(testing::read_file(out("b.tsv")));
    EXPECT_EQ(blocks[0], "block_id\tpath\tstart_line\tend_line\tn_lines\tn_tokens");
    EXPECT_EQ(blocks.size(), load_corpus({root}, {}).blocks.size() + 1);
}

TEST_F(CliTest, SynthInsertRangeAndSeed) {
    ASSERT_EQ(run_cli({"synth", LVMAP_SAMPLE_DIR, "--insert-range", "1..5", "--cases", "20", "--originals", "20",
                       "--seed", "9", "--out", out("r1.tsv"), "--plot-script", out("plot.gp")}),
              0);
    ASSERT_EQ(run_cli({"synth", LVMAP_SAMPLE_DIR, "--insert-range", "1..5", "--cases", "20", "--originals", "20",
                       "--seed", "9", "--threads", "4", "--out", out("r2.tsv")}),
              0);
    const auto r1 = testing::read_file(out("r1.tsv"));
    EXPECT_EQ(r1, testing::read_file(out("r2.tsv")));
    const auto rows = lines_of(r1);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "# seed=9");
    EXPECT_EQ(rows[1], "n_insert\tn_cases\tn_detected\trecall");
    EXPECT_TRUE(rows[2].starts_with("1\t20\t"));
    EXPECT_TRUE(rows[6].starts_with("5\t20\t"));
    EXPECT_NE(testing::read_file(out("plot.gp")).find(out("r1.tsv")), std::string::npos);
}

TEST_F(CliTest, SynthDefaultsGiveTwentyRows) {
    ASSERT_EQ(run_cli({"synth", LVMAP_SAMPLE_DIR, "--out", out("r.tsv")}), 0);
    const auto rows = lines_of(testing::read_file(out("r.tsv")));
    ASSERT_EQ(rows.size(), 22u);
    EXPECT_EQ(rows[0], "# seed=0");
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_TRUE(rows[i].starts_with(std::to_string(i - 1) + "\t200\t"));
}

TEST(Report, SplitCsvPath) {
    EXPECT_EQ(split_csv_path("proj/src/A.java"), std::make_pair(std::string("proj/src"), std::string("A.java")));
    EXPECT_EQ(split_csv_path("A.java"), std::make_pair(std::string("."), std::string("A.java")));
    EXPECT_EQ(split_csv_path("a,b/c,d.c"), std::make_pair(std::string("a_b"), std::string("c_d.c")));
}

TEST(Report, PairRows) {
    std::vector<CodeBlock> blocks(2);
    blocks[0].file = "p/x/A.java";
    blocks[0].span = {3, 20};
    blocks[1].file = "p/y/B.java";
    blocks[1].span = {5, 30};
    ClonePair p = score_counts(18, 26, 18, false);
    p.block_a = 0;
    p.block_b = 1;
    p.ordered_similarity = 1.0;
    const std::vector<ClonePair> pairs = {p};
    EXPECT_EQ(format_pairs_csv(pairs, blocks), "p/x,A.java,3,20,p/y,B.java,5,30\n");
    EXPECT_EQ(format_pairs_ext_csv(pairs, blocks), "p/x,A.java,3,20,p/y,B.java,5,30,18,1.0000,0.8462,type3+lv+gap\n");
}

}  // namespace
}  // namespace lvmap
